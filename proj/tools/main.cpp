/* zbrun: command-line front end for the boundary zeta-coefficient library.
 *
 * Talks to the computational core exclusively through the C API in
 * zetab/capi.h.  Reports are JSON (deterministic byte-for-byte for a fixed
 * configuration); sweep and table data are additionally written as CSV with
 * shortest round-trip number formatting.
 *
 * Exit codes: 0 all checks passed, 1 a numerical check failed,
 * 2 configuration or usage error.
 */

#include "CLI11.hpp"
#include "json.hpp"

#include "zetab/capi.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct Options {
  std::string config_path;
  std::string out_dir;
  double tolerance_scale = 1.0;
  int jobs = 1;
};

// wraps a C-API report call: prints/stores the JSON, returns the status
class Runner {
 public:
  Runner(const Options& opt) : opt_(opt) {
    std::optional<std::string> text;
    if (!opt.config_path.empty()) {
      std::ifstream in(opt.config_path);
      if (!in) {
        std::cerr << "error: cannot read config file '" << opt.config_path << "'\n";
        status_ = ZB_FAIL_CONFIG;
        return;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    session_ = zb_open(text ? text->c_str() : nullptr);
    if (!opt.out_dir.empty()) {
      std::error_code ec;
      fs::create_directories(opt.out_dir, ec);
      if (ec) {
        std::cerr << "error: cannot create output directory '" << opt.out_dir
                  << "': " << ec.message() << "\n";
        status_ = ZB_FAIL_CONFIG;
      }
    }
  }
  ~Runner() { zb_close(session_); }

  int status() const { return status_; }

  /* Runs one report; on success parses it, stores <name>.json in the output
     directory (if any), prints the JSON to stdout otherwise, and folds the
     status into the run status.  Returns the document, or nullopt. */
  template <class F>
  std::optional<json> report(const std::string& name, F&& call) {
    if (status_ == ZB_FAIL_CONFIG) return std::nullopt;
    char* out = nullptr;
    int rc = call(session_, &out);
    fold(rc);
    if (!out) {
      std::cerr << "error (" << name << "): " << zb_last_error(session_) << "\n";
      return std::nullopt;
    }
    std::string text(out);
    zb_string_free(out);
    if (rc == ZB_FAIL_NUM)
      std::cerr << "warning (" << name << "): " << zb_last_error(session_) << "\n";
    write_or_print(name + ".json", text);
    return json::parse(text);
  }

  void write_csv(const std::string& name, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream ss;
    for (size_t i = 0; i < header.size(); ++i)
      ss << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
      for (size_t i = 0; i < row.size(); ++i)
        ss << row[i] << (i + 1 < row.size() ? "," : "\n");
    write_or_print(name, ss.str());
  }

 private:
  void write_or_print(const std::string& filename, const std::string& text) {
    if (opt_.out_dir.empty()) {
      std::cout << text;
      return;
    }
    fs::path p = fs::path(opt_.out_dir) / filename;
    std::ofstream out(p, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write '" << p.string() << "'\n";
      fold(ZB_FAIL_CONFIG);
    }
  }

  void fold(int rc) { status_ = std::max(status_, rc); }

  const Options& opt_;
  zb_session* session_ = nullptr;
  int status_ = ZB_OK;
};

std::vector<std::string> complex_cells(const json& z) {
  return {fmt(z.at("re").get<double>()), fmt(z.at("im").get<double>())};
}

int cmd_verify(const Options& opt) {
  Runner r(opt);
  auto doc = r.report("verify", [&](zb_session* s, char** out) {
    return zb_report_verify(s, opt.tolerance_scale, out);
  });
  if (doc) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : doc->at("checks")) {
      std::vector<std::string> row{c.at("name").get<std::string>()};
      for (auto& cell : complex_cells(c.at("value"))) row.push_back(cell);
      for (auto& cell : complex_cells(c.at("reference"))) row.push_back(cell);
      row.push_back(fmt(c.at("error").get<double>()));
      row.push_back(fmt(c.at("tolerance").get<double>()));
      row.push_back(c.at("pass").get<bool>() ? "1" : "0");
      rows.push_back(std::move(row));
    }
    r.write_csv("verify.csv",
                {"name", "value_re", "value_im", "reference_re", "reference_im",
                 "error", "tolerance", "pass"},
                rows);
    std::cerr << (doc->at("pass").get<bool>() ? "verify: all checks passed\n"
                                              : "verify: FAILURES present\n");
  }
  return r.status();
}

int cmd_fit(const Options& opt, const std::string& family) {
  Runner r(opt);
  auto doc = r.report("fit_" + family, [&](zb_session* s, char** out) {
    return zb_report_fit(s, family.c_str(), opt.tolerance_scale, out);
  });
  if (doc) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : doc->at("samples"))
      rows.push_back({fmt(row.at("mu").get<double>()),
                      fmt(row.at("re").get<double>()),
                      fmt(row.at("im").get<double>())});
    r.write_csv("sweep_" + family + ".csv", {"mu", "re", "im"}, rows);
  }
  return r.status();
}

int cmd_zeta(const Options& opt) {
  Runner r(opt);
  auto doc = r.report("zeta", [&](zb_session* s, char** out) {
    return zb_report_zeta(s, opt.tolerance_scale, out);
  });
  if (doc) {
    std::vector<std::vector<std::string>> rows;
    for (const char* t : {"interior", "leftover", "gq", "pg", "gg"}) {
      const json& term = doc->at("terms").at(t);
      std::vector<std::string> row{t};
      for (auto& cell : complex_cells(term.at("closed"))) row.push_back(cell);
      for (auto& cell : complex_cells(term.at("fitted"))) row.push_back(cell);
      row.push_back(fmt(term.at("gap").get<double>()));
      rows.push_back(std::move(row));
      std::cerr << "  " << t << ": closed " << term.at("closed").at("re")
                << " fitted " << term.at("fitted").at("re") << " gap "
                << term.at("gap") << "\n";
    }
    r.write_csv("zeta_terms.csv",
                {"term", "closed_re", "closed_im", "fitted_re", "fitted_im", "gap"},
                rows);
    std::cerr << "total closed " << doc->at("total_closed").at("re") << " fitted "
              << doc->at("total_fitted").at("re") << " gap "
              << doc->at("total_gap") << "\n";
  }
  return r.status();
}

int cmd_defect(const Options& opt, double scale,
               const std::vector<std::string>& checks) {
  Runner r(opt);
  for (const std::string& c : checks) {
    if (c == "defect")
      r.report("defect", [&](zb_session* s, char** out) {
        return zb_report_defect(s, scale, opt.tolerance_scale, out);
      });
    else if (c == "power")
      r.report("power", [&](zb_session* s, char** out) {
        return zb_report_power(s, opt.tolerance_scale, out);
      });
    else if (c == "traciality")
      r.report("traciality", [&](zb_session* s, char** out) {
        return zb_report_traciality(s, opt.tolerance_scale, out);
      });
    else {
      std::cerr << "error: unknown check '" << c << "'\n";
      return ZB_FAIL_CONFIG;
    }
  }
  return r.status();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary zeta-coefficient runner"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand name

  Options opt;
  app.add_option("--config", opt.config_path,
                 "problem configuration JSON (builtin example if omitted)");
  app.add_option("--out", opt.out_dir,
                 "output directory for JSON/CSV (stdout if omitted)");
  app.add_option("--tolerance-scale", opt.tolerance_scale,
                 "multiply every pinned tolerance by this factor")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", opt.jobs,
                 "worker threads (runs are deterministic regardless)")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand(
      "verify-appendix", "replay quadrature oracles against the closed forms");

  std::string family = "interior";
  auto* fit = app.add_subcommand("fit", "sweep one resolvent family and fit it");
  fit->add_option("--family", family, "interior|leftover|gq|pg|gg");

  auto* zeta = app.add_subcommand("zeta", "five-term constant assembly");

  double scale = 2.0;
  std::vector<std::string> checks{"defect", "power", "traciality"};
  auto* defect = app.add_subcommand("defect", "consistency checks");
  defect->add_option("--scale", scale, "constant factor for the scaling defect")
      ->check(CLI::PositiveNumber);
  defect->add_option("--checks", checks,
                     "subset of: defect power traciality");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : ZB_FAIL_CONFIG; // usage problems are config errors
  }

  if (verify->parsed()) return cmd_verify(opt);
  if (fit->parsed()) return cmd_fit(opt, family);
  if (zeta->parsed()) return cmd_zeta(opt);
  if (defect->parsed()) return cmd_defect(opt, scale, checks);
  return ZB_FAIL_CONFIG;
}
