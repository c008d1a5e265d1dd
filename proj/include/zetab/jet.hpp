#ifndef ZETAB_JET_HPP
#define ZETAB_JET_HPP

#include "zetab/common.hpp"

namespace zetab {

/* Truncated Taylor expansion in (lambda - lambda0).  a[k] holds the k-th
   Taylor coefficient f^{(k)}(lambda0)/k!, which is exactly the k+1-st
   "iterated" family value: if f is the N=1 resolvent-type family, the
   N-th family (the (N-1)-fold normalized lambda-derivative) is a[N-1].

   All closed-form lambda-families in this project are built from the four
   arithmetic operations, sqrt, exp, log and integer powers applied to the
   affine seed lambda itself, so evaluating them on a Jet gives the exact
   derivatives with no step-size noise.  The circle-contour (Cauchy)
   differentiation in quadrature.hpp serves as the independent cross-check. */
class Jet {
public:
  std::vector<cplx> a;

  Jet() : a(1, cplx(0)) {}
  explicit Jet(size_t n) : a(n, cplx(0)) {}
  Jet(const cplx& c, size_t n) : a(n, cplx(0)) { a[0] = c; }

  static Jet variable(const cplx& value, size_t ncoef) {
    Jet j(ncoef);
    j.a[0] = value;
    if (ncoef > 1) j.a[1] = cplx(1);
    return j;
  }
  static Jet constant(const cplx& value, size_t ncoef) { return Jet(value, ncoef); }

  size_t size() const { return a.size(); }
  const cplx& val() const { return a[0]; }
  // coefficient of the (N-1)-fold normalized derivative, i.e. the N-th iterate
  const cplx& iterate(int N) const { return a.at(size_t(N) - 1); }

  Jet& operator+=(const Jet& o) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
    return *this;
  }
  Jet& operator*=(const cplx& c) {
    for (auto& x : a) x *= c;
    return *this;
  }

  friend Jet operator+(Jet x, const Jet& y) { return x += y; }
  friend Jet operator-(Jet x, const Jet& y) { return x -= y; }
  friend Jet operator-(Jet x) { for (auto& v : x.a) v = -v; return x; }
  friend Jet operator*(Jet x, const cplx& c) { return x *= c; }
  friend Jet operator*(const cplx& c, Jet x) { return x *= c; }
  friend Jet operator/(Jet x, const cplx& c) { return x *= cplx(1) / c; }
  friend Jet operator+(Jet x, const cplx& c) { x.a[0] += c; return x; }
  friend Jet operator+(const cplx& c, Jet x) { x.a[0] += c; return x; }
  friend Jet operator-(Jet x, const cplx& c) { x.a[0] -= c; return x; }
  friend Jet operator-(const cplx& c, Jet x) { x = -x; x.a[0] += c; return x; }

  friend Jet operator*(const Jet& x, const Jet& y) {
    size_t n = x.a.size();
    Jet r(n);
    for (size_t i = 0; i < n; ++i) {
      if (x.a[i] == cplx(0)) continue;
      for (size_t j = 0; i + j < n; ++j) r.a[i + j] += x.a[i] * y.a[j];
    }
    return r;
  }

  friend Jet operator/(const Jet& x, const Jet& y) { return x * reciprocal(y); }
  friend Jet operator/(const cplx& c, const Jet& y) { return reciprocal(y) * c; }

  friend Jet reciprocal(const Jet& x) {
    size_t n = x.a.size();
    if (x.a[0] == cplx(0)) throw std::domain_error("jet reciprocal at zero");
    Jet r(n);
    r.a[0] = cplx(1) / x.a[0];
    for (size_t k = 1; k < n; ++k) {
      cplx s(0);
      for (size_t j = 1; j <= k; ++j) s += x.a[j] * r.a[k - j];
      r.a[k] = -s * r.a[0];
    }
    return r;
  }

  friend Jet sqrt(const Jet& x) {
    size_t n = x.a.size();
    Jet r(n);
    r.a[0] = std::sqrt(x.a[0]);
    if (r.a[0] == cplx(0)) throw std::domain_error("jet sqrt at branch point");
    for (size_t k = 1; k < n; ++k) {
      cplx s(0);
      for (size_t j = 1; j < k; ++j) s += r.a[j] * r.a[k - j];
      r.a[k] = (x.a[k] - s) / (2.0 * r.a[0]);
    }
    return r;
  }

  friend Jet exp(const Jet& x) {
    size_t n = x.a.size();
    Jet r(n);
    r.a[0] = std::exp(x.a[0]);
    // r' = x' r  =>  k r_k = sum_{j=1..k} j x_j r_{k-j}
    for (size_t k = 1; k < n; ++k) {
      cplx s(0);
      for (size_t j = 1; j <= k; ++j) s += double(j) * x.a[j] * r.a[k - j];
      r.a[k] = s / double(k);
    }
    return r;
  }

  friend Jet log(const Jet& x) {
    size_t n = x.a.size();
    if (x.a[0] == cplx(0)) throw std::domain_error("jet log at zero");
    Jet r(n);
    r.a[0] = std::log(x.a[0]);
    // r' = x'/x  =>  k x_0 r_k = k x_k - sum_{j=1..k-1} j r_j x_{k-j}
    for (size_t k = 1; k < n; ++k) {
      cplx s = double(k) * x.a[k];
      for (size_t j = 1; j < k; ++j) s -= double(j) * r.a[j] * x.a[k - j];
      r.a[k] = s / (double(k) * x.a[0]);
    }
    return r;
  }

  friend Jet pow_int(const Jet& x, int p) {
    if (p == 0) return Jet(cplx(1), x.a.size());
    if (p < 0) return reciprocal(pow_int(x, -p));
    Jet r = x;
    for (int i = 1; i < p; ++i) r = r * x;
    return r;
  }
};

inline double mag(const Jet& j) {
  double m = 0;
  for (auto& c : j.a) m = std::max(m, std::abs(c));
  return m;
}

inline Jet zero_like(const Jet& j) { return Jet(j.a.size()); }

} // namespace zetab

#endif
