#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "coronae/errors.hpp"
#include "coronae/spectrum.hpp"

namespace coronae {

// Univariate real polynomial, coefficients in ascending degree order.
// The empty coefficient list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(double v) { return Polynomial({v}); }
  static Polynomial x() { return Polynomial({0.0, 1.0}); }

  // (x - r)
  static Polynomial from_root(double r) { return Polynomial({-r, 1.0}); }

  static Polynomial from_roots(const std::vector<double>& roots) {
    Polynomial p = constant(1.0);
    for (double r : roots) p = p * from_root(r);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : 0.0;
  }
  double leading() const { return c_.empty() ? 0.0 : c_.back(); }
  const std::vector<double>& coeffs() const { return c_; }

  double eval(double x) const {
    double r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<double> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) throw BadParams("monic: zero polynomial");
    std::vector<double> d(c_);
    const double lead = d.back();
    for (double& v : d) v /= lead;
    d.back() = 1.0;
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> d(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return Polynomial(std::move(d));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

  friend Polynomial operator*(double s, const Polynomial& p) {
    std::vector<double> d(p.c_);
    for (double& v : d) v *= s;
    return Polynomial(std::move(d));
  }
  friend Polynomial operator*(const Polynomial& p, double s) { return s * p; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<double> d(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(d));
  }

  Polynomial pow(int e) const {
    if (e < 0) throw BadParams("pow: negative exponent");
    Polynomial r = constant(1.0);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  // q(x) = p(x - c)
  Polynomial shift(double c) const {
    Polynomial r = zero();
    Polynomial arg({-c, 1.0});
    Polynomial power = constant(1.0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r = r + c_[i] * power;
      power = power * arg;
    }
    return r;
  }

  // Long division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<Polynomial, Polynomial> divide(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroFunction("divide: zero divisor");
    std::vector<double> rem(c_);
    const int dn = divisor.degree();
    const int n = degree();
    if (n < dn) return {zero(), *this};
    std::vector<double> quot(static_cast<std::size_t>(n - dn + 1), 0.0);
    for (int k = n - dn; k >= 0; --k) {
      const double q = rem[static_cast<std::size_t>(k + dn)] / divisor.leading();
      quot[static_cast<std::size_t>(k)] = q;
      for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(std::max(dn, 0)));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  // Synthetic division by (x - r); the remainder p(r) is discarded.
  Polynomial deflate(double r) const {
    if (degree() < 1) return zero();
    std::vector<double> q(c_.size() - 1, 0.0);
    double carry = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = c_[i] + carry * r;
    }
    return Polynomial(std::move(q));
  }

  double max_abs_coeff() const {
    double m = 0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  bool approx_equal(const Polynomial& o, double tol) const {
    const int n = std::max(degree(), o.degree());
    const double scale = std::max({1.0, max_abs_coeff(), o.max_abs_coeff()});
    for (int i = 0; i <= n; ++i)
      if (std::abs(coeff(i) - o.coeff(i)) > tol * scale) return false;
    return true;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const double v = coeff(i);
      if (v == 0.0 && degree() > 0) continue;
      if (!s.empty()) s += v < 0 ? " - " : " + ";
      else if (v < 0) s += "-";
      const double a = std::abs(v);
      if (i == 0 || a != 1.0) s += std::to_string(a);
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  std::vector<double> c_;

  void normalize() {
    double m = 0;
    for (double v : c_) m = std::max(m, std::abs(v));
    const double tol = 1e-12 * std::max(1.0, m);
    while (!c_.empty() && std::abs(c_.back()) <= tol) c_.pop_back();
    if (m <= 1e-300) c_.clear();
  }
};

// Sum_i |c_i| * max(1,|x|)^i, a magnitude scale for "is p(x) negligibly small".
inline double poly_scale_at(const Polynomial& p, double x) {
  const double ax = std::max(1.0, std::abs(x));
  double s = 0, pw = 1;
  for (int i = 0; i <= p.degree(); ++i) {
    s += std::abs(p.coeff(i)) * pw;
    pw *= ax;
  }
  return std::max(1.0, s);
}

namespace detail {

inline int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline double newton_polish(const Polynomial& p, const Polynomial& dp, double x, double lo,
                            double hi) {
  double best = x;
  double best_abs = std::abs(p.eval(x));
  for (int it = 0; it < 4; ++it) {
    const double d = dp.eval(x);
    if (d == 0.0) break;
    double nx = x - p.eval(x) / d;
    if (!(nx >= lo && nx <= hi)) break;
    x = nx;
    const double a = std::abs(p.eval(x));
    if (a < best_abs) {
      best_abs = a;
      best = x;
    }
  }
  return best;
}

// All real roots (with multiplicity) of a monic polynomial whose roots are
// known to be real. Roots of multiplicity >= 2 are located as critical
// points where |p| is negligible; simple roots as sign changes between
// consecutive critical points. Throws ComplexRootsDetected when the root
// count cannot be reconciled with the degree.
inline void real_roots_monic(const Polynomial& p, std::vector<double>& out) {
  const int n = p.degree();
  if (n <= 0) return;
  if (n == 1) {
    out.push_back(-p.coeff(0));
    return;
  }
  if (n == 2) {
    const double b = p.coeff(1), c = p.coeff(0);
    double disc = b * b - 4 * c;
    if (disc < 0) {
      const double scale = std::max(1.0, std::max(std::abs(b), std::sqrt(std::abs(c))));
      const double imag = std::sqrt(-disc) / 2;
      if (imag > 1e-7 * scale)
        throw ComplexRootsDetected("quadratic with complex roots: " + p.to_string());
      disc = 0;
    }
    const double sd = std::sqrt(disc);
    if (b == 0.0 && c == 0.0) {
      out.push_back(0.0);
      out.push_back(0.0);
      return;
    }
    const double q = -0.5 * (b + std::copysign(sd, b));
    double r1 = q;
    double r2 = (q != 0.0) ? c / q : -b - q;
    out.push_back(std::min(r1, r2));
    out.push_back(std::max(r1, r2));
    return;
  }

  std::vector<double> crit;
  real_roots_monic(p.derivative().monic(), crit);
  std::sort(crit.begin(), crit.end());

  double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(p.coeff(i)));
  bound += 1.0;
  if (!crit.empty()) bound = std::max(bound, std::abs(crit.front()) + 1);
  if (!crit.empty()) bound = std::max(bound, std::abs(crit.back()) + 1);

  // distinct critical points with multiplicities
  std::vector<std::pair<double, int>> dcrit;
  for (double c : crit) {
    if (!dcrit.empty() && c - dcrit.back().first <= 1e-10 * std::max(1.0, std::abs(c)))
      dcrit.back().second++;
    else
      dcrit.emplace_back(c, 1);
  }

  const Polynomial dp = p.derivative();
  std::vector<double> breakpoints;
  breakpoints.push_back(-bound);
  for (const auto& [c, mu] : dcrit) breakpoints.push_back(c);
  breakpoints.push_back(bound);

  // Roots at critical points (multiplicity >= 2). A root of multiplicity m
  // is one critical point of derivative-multiplicity m-1 in exact
  // arithmetic, but numerically that cluster can split into several nearby
  // critical points which all evaluate to ~0; p cannot vanish at two
  // consecutive critical points without vanishing identically between them,
  // so a maximal run of root-like critical points is one multiple root.
  for (std::size_t i = 0; i < dcrit.size();) {
    if (std::abs(p.eval(dcrit[i].first)) > 1e-11 * poly_scale_at(p, dcrit[i].first)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    int mu_total = 0;
    double center = 0;
    while (j < dcrit.size() &&
           std::abs(p.eval(dcrit[j].first)) <= 1e-11 * poly_scale_at(p, dcrit[j].first)) {
      mu_total += dcrit[j].second;
      center += dcrit[j].first * dcrit[j].second;
      ++j;
    }
    center /= mu_total;
    for (int k = 0; k < mu_total + 1; ++k) out.push_back(center);
    i = j;
  }

  // simple roots: one per monotonic interval with a sign change
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    double lo = breakpoints[i], hi = breakpoints[i + 1];
    const double plo = p.eval(lo), phi = p.eval(hi);
    if (std::abs(plo) <= 1e-11 * poly_scale_at(p, lo)) continue;
    if (std::abs(phi) <= 1e-11 * poly_scale_at(p, hi)) continue;
    if (sign_of(plo) * sign_of(phi) >= 0) continue;
    double a = lo, b = hi, fa = plo;
    for (int it = 0; it < 100 && (b - a) > 1e-16 * std::max(1.0, std::abs(a)); ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = p.eval(mid);
      if (fm == 0.0) {
        a = b = mid;
        break;
      }
      if (sign_of(fa) * sign_of(fm) < 0)
        b = mid;
      else {
        a = mid;
        fa = fm;
      }
    }
    out.push_back(newton_polish(p, dp, 0.5 * (a + b), lo, hi));
  }

  if (static_cast<int>(out.size()) < n)
    throw ComplexRootsDetected("real root count " + std::to_string(out.size()) +
                               " below degree " + std::to_string(n) + " for " + p.to_string());
  // any excess is a near-duplicate from a split cluster: drop the closest
  // pairs, never genuinely separated roots
  std::sort(out.begin(), out.end());
  while (static_cast<int>(out.size()) > n) {
    std::size_t best = 1;
    for (std::size_t i = 2; i < out.size(); ++i)
      if (out[i] - out[i - 1] < out[best] - out[best - 1]) best = i;
    const double gap = out[best] - out[best - 1];
    if (gap > 1e-5 * std::max(1.0, std::abs(out[best])))
      throw AssemblyError("real_roots: found more roots than degree for " + p.to_string());
    out.erase(out.begin() + static_cast<long>(best));
  }
}

}  // namespace detail

// Real roots of p with multiplicities, merged at merge_tol. Intended for
// factors of real-symmetric characteristic polynomials; a genuinely complex
// root raises ComplexRootsDetected.
inline Spectrum real_roots(const Polynomial& p, double merge_tol = 1e-8) {
  if (p.is_zero()) throw BadParams("real_roots: zero polynomial");
  std::vector<double> out;
  detail::real_roots_monic(p.monic(), out);
  return Spectrum::from_values(std::move(out), merge_tol);
}

// Ratio of two polynomials. Denominator monic after normalization; common
// roots are cancelled only by the explicit reduce() operation.
class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::constant(1.0)) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroFunction("RationalFunction: zero denominator");
    const double lead = den_.leading();
    num_ = (1.0 / lead) * num_;
    den_ = den_.monic();
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  double eval(double x) const { return num_.eval(x) / den_.eval(x); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }

  RationalFunction reciprocal() const {
    if (num_.is_zero()) throw DivisionByZeroFunction("reciprocal of zero function");
    return RationalFunction(den_, num_);
  }

  // Cancels denominator roots shared with the numerator. The denominator
  // must be real-rooted (true for every coronal: it divides a symmetric
  // characteristic polynomial).
  RationalFunction reduce() const {
    Polynomial n = num_, d = den_;
    const Spectrum droots = real_roots(d);
    for (const auto& [r, mult] : droots.pairs) {
      for (int k = 0; k < mult; ++k) {
        if (n.is_zero()) break;
        if (std::abs(n.eval(r)) < 1e-9 * poly_scale_at(n, r)) {
          n = n.deflate(r);
          d = d.deflate(r);
        } else {
          break;
        }
      }
    }
    return RationalFunction(n, d);
  }

 private:
  Polynomial num_, den_;
};

// Symbolic factorization of a characteristic polynomial:
// product of factor^exponent, monic of the underlying matrix order.
struct FactoredCharPoly {
  std::vector<std::pair<Polynomial, int>> factors;

  int total_degree() const {
    int d = 0;
    for (const auto& [p, e] : factors) d += p.degree() * e;
    return d;
  }

  Polynomial expand() const {
    Polynomial r = Polynomial::constant(1.0);
    for (const auto& [p, e] : factors) r = r * p.pow(e);
    return r;
  }
};

}  // namespace coronae
