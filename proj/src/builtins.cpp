#include "zetab/builtins.hpp"

#include "json.hpp"

namespace zetab {

namespace {

using nlohmann::json;

// |xi'|^deg (a + b * omega_1), the parametrized homogeneous scalar family
std::function<cplx(const Vec&)> hom_scalar(double deg, double a, double b) {
  return [deg, a, b](const Vec& v) {
    double r = v.norm();
    if (r == 0.0) return cplx(0);
    return cplx(std::pow(r, deg) * (a + b * v[0] / r));
  };
}

InteriorSymbol hom_coeff(int nm1, double deg, double a, double b) {
  InteriorSymbol s;
  s.dim = nm1;
  s.order = deg;
  auto f = hom_scalar(deg, a, b);
  s.terms.push_back({deg, [f](const Vec& v) {
                       CMat m(1, 1);
                       m(0, 0) = f(v);
                       return m;
                     }});
  return s;
}

double num(const json& j, const char* key, double dflt) {
  if (!j.contains(key)) return dflt;
  if (!j.at(key).is_number())
    throw std::invalid_argument(std::string("config: '") + key + "' must be numeric");
  return j.at(key).get<double>();
}

int inum(const json& j, const char* key, int dflt) {
  double v = num(j, key, dflt);
  if (std::abs(v - std::round(v)) > 1e-12)
    throw std::invalid_argument(std::string("config: '") + key + "' must be an integer");
  return int(std::lround(v));
}

} // namespace

ProblemConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
  }
  ProblemConfig c;
  c.dim = inum(j, "dim", 2);
  if (c.dim < 2 || c.dim > 3)
    throw std::invalid_argument("config: 'dim' must be 2 or 3");
  const int nm1 = c.dim - 1;

  if (j.contains("model")) {
    const json& m = j.at("model");
    c.model.m = inum(m, "m", 2);
    c.model.c = num(m, "c", 1.0);
    c.model.theta = pi * num(m, "theta_over_pi", 1.0);
    if (c.model.m != 2 && c.model.m != 4)
      throw std::invalid_argument("config: model order must be 2 or 4");
    if (c.model.c <= 0.0)
      throw std::invalid_argument("config: model constant must be positive");
  }

  c.p.dim = c.dim;
  if (j.contains("p")) {
    const json& p = j.at("p");
    c.p.order = num(p, "order", 0.0);
    for (const json& t : p.value("poly", json::array())) {
      double deg = num(t, "deg", 0.0);
      if (deg < 0.0)
        throw std::invalid_argument("config: polynomial coefficient degree must be >= 0");
      c.p.poly.push_back({hom_scalar(deg, num(t, "a", 0.0), num(t, "b", 0.0)), deg,
                          inum(t, "j", 0)});
    }
    for (const json& t : p.value("poles", json::array())) {
      double qdeg = num(t, "qdeg", 0.0);
      int k = inum(t, "k", 1);
      int sign = inum(t, "sign", +1);
      if (qdeg < 0.0)
        throw std::invalid_argument("config: pole coefficient degree must be >= 0");
      if (k < 1 || (sign != +1 && sign != -1))
        throw std::invalid_argument("config: pole terms need k >= 1 and sign +-1");
      c.p.poles.push_back({hom_scalar(qdeg, num(t, "a", 0.0), num(t, "b", 0.0)), qdeg,
                           sign, k});
    }
  }

  int L = 0;
  double gorder = 0.0;
  if (j.contains("g")) {
    L = inum(j.at("g"), "L", 0);
    gorder = num(j.at("g"), "order", 0.0);
    if (L < 0 || L > 12)
      throw std::invalid_argument("config: Laguerre truncation must be in [0, 12]");
  }
  c.g = LaguerreSGO::zero(c.dim, L, gorder);
  if (j.contains("g")) {
    for (const json& t : j.at("g").value("coeffs", json::array())) {
      int l = inum(t, "l", 0), m = inum(t, "m", 0);
      if (l < 0 || m < 0 || l > L || m > L)
        throw std::invalid_argument("config: coefficient index outside the truncation");
      double deg = num(t, "deg", gorder - 1.0);
      if (deg < -double(c.dim))
        throw std::invalid_argument(
            "config: coefficient degrees below -n are outside the builtin families");
      c.g.c[l][m] = hom_coeff(nm1, deg, num(t, "a", 0.0), num(t, "b", 0.0));
    }
  }

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    c.opts.mu0 = num(s, "mu0", c.opts.mu0);
    c.opts.ratio = num(s, "ratio", c.opts.ratio);
    c.opts.min_count = inum(s, "count", c.opts.min_count);
    if (c.opts.mu0 <= 0.0 || c.opts.ratio <= 1.0 || c.opts.min_count < 4)
      throw std::invalid_argument("config: sweep grid parameters out of range");
  }
  if (j.contains("fit")) {
    const json& f = j.at("fit");
    c.opts.fit.guard_columns = inum(f, "guard_columns", c.opts.fit.guard_columns);
    c.opts.fit.guard_log_columns =
        inum(f, "guard_log_columns", c.opts.fit.guard_log_columns);
  }
  return c;
}

std::string builtin_config_json() {
  return R"({
  "dim": 2,
  "model": { "m": 2, "c": 1.3, "theta_over_pi": 1.0 },
  "p": {
    "order": 0,
    "poly":  [ { "deg": 0, "a": 0.4, "j": 0 } ],
    "poles": [ { "qdeg": 0, "a": 0.7,  "sign": 1,  "k": 1 },
               { "qdeg": 1, "a": 0.5,  "sign": 1,  "k": 2 },
               { "qdeg": 0, "a": -0.3, "sign": -1, "k": 1 } ]
  },
  "g": {
    "L": 2, "order": 0,
    "coeffs": [ { "l": 0, "m": 0, "deg": -1, "a": 0.8, "b": 0.15 },
                { "l": 1, "m": 1, "deg": -1, "a": -0.25 },
                { "l": 2, "m": 2, "deg": -1, "a": 0.1 },
                { "l": 0, "m": 1, "deg": -1, "a": 0.5 },
                { "l": 1, "m": 0, "deg": -1, "a": -0.2, "b": 0.1 },
                { "l": 2, "m": 1, "deg": -1, "a": 0.15 },
                { "l": 0, "m": 2, "deg": -2, "a": 0.3 } ]
  }
})";
}

} // namespace zetab
