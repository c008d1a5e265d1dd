#include "zetab/capi.h"

#include "zetab/reports.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct zb_session {
  zetab::ProblemConfig cfg;
  bool valid = false;
  std::string error;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

/* Run one report builder with the session's config, translating exceptions
   into status codes: invalid_argument / domain_error are configuration
   problems, anything else is a numerical breakdown. */
template <class F>
int run_report(zb_session* s, char** out_json, F&& build) {
  if (!out_json) return ZB_FAIL_CONFIG;
  *out_json = nullptr;
  if (!s) return ZB_FAIL_CONFIG;
  s->error.clear();
  if (!s->valid) {
    s->error = "session has no valid configuration";
    return ZB_FAIL_CONFIG;
  }
  try {
    bool pass = true;
    std::string doc = build(pass);
    *out_json = dup_string(doc);
    if (!*out_json) {
      s->error = "out of memory";
      return ZB_FAIL_NUM;
    }
    if (!pass) s->error = "a numerical check in the report failed";
    return pass ? ZB_OK : ZB_FAIL_NUM;
  } catch (const std::invalid_argument& e) {
    s->error = e.what();
    return ZB_FAIL_CONFIG;
  } catch (const std::domain_error& e) {
    s->error = e.what();
    return ZB_FAIL_CONFIG;
  } catch (const std::exception& e) {
    s->error = e.what();
    return ZB_FAIL_NUM;
  }
}

bool scale_ok(zb_session* s, double ts) {
  if (ts > 0.0 && std::isfinite(ts)) return true;
  if (s) s->error = "tolerance scale must be positive";
  return false;
}

} // namespace

extern "C" {

zb_session* zb_open(const char* config_json) {
  auto* s = new (std::nothrow) zb_session;
  if (!s) return nullptr;
  try {
    std::string text = config_json ? config_json : zetab::builtin_config_json();
    s->cfg = zetab::parse_config(text);
    s->valid = true;
  } catch (const std::exception& e) {
    s->error = e.what();
  }
  return s;
}

void zb_close(zb_session* s) { delete s; }

const char* zb_last_error(const zb_session* s) {
  return s ? s->error.c_str() : "null session";
}

const char* zb_builtin_config(void) {
  static const std::string text = zetab::builtin_config_json();
  return text.c_str();
}

int zb_report_verify(zb_session* s, double ts, char** out_json) {
  if (!scale_ok(s, ts)) return ZB_FAIL_CONFIG;
  return run_report(s, out_json, [&](bool& pass) {
    return zetab::report_verify(ts, &pass);
  });
}

int zb_report_zeta(zb_session* s, double ts, char** out_json) {
  if (!scale_ok(s, ts)) return ZB_FAIL_CONFIG;
  return run_report(s, out_json, [&](bool& pass) {
    return zetab::report_zeta(s->cfg, ts, &pass);
  });
}

int zb_report_fit(zb_session* s, const char* family, double ts, char** out_json) {
  if (!scale_ok(s, ts)) return ZB_FAIL_CONFIG;
  std::string fam = family ? family : "";
  return run_report(s, out_json, [&](bool& pass) {
    return zetab::report_fit(s->cfg, fam, ts, &pass);
  });
}

int zb_report_defect(zb_session* s, double scale, double ts, char** out_json) {
  if (!scale_ok(s, ts)) return ZB_FAIL_CONFIG;
  return run_report(s, out_json, [&](bool& pass) {
    return zetab::report_defect(s->cfg, scale, ts, &pass);
  });
}

int zb_report_power(zb_session* s, double ts, char** out_json) {
  if (!scale_ok(s, ts)) return ZB_FAIL_CONFIG;
  return run_report(s, out_json, [&](bool& pass) {
    return zetab::report_power(s->cfg, ts, &pass);
  });
}

int zb_report_traciality(zb_session* s, double ts, char** out_json) {
  if (!scale_ok(s, ts)) return ZB_FAIL_CONFIG;
  return run_report(s, out_json, [&](bool& pass) {
    return zetab::report_traciality(s->cfg, ts, &pass);
  });
}

void zb_string_free(char* p) { std::free(p); }

} // extern "C"
