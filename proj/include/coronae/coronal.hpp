#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coronae/errors.hpp"
#include "coronae/linalg.hpp"
#include "coronae/polynomial.hpp"

namespace coronae {

enum class CoronalKind { general, constant_row_sum, complete_bipartite };

// The M-coronal Gamma_M(x) = j^T (xI - M)^{-1} j as an exact rational
// function. Kept unreduced by default: the poles carry meaning. When the
// source matrix is available the fully cancelled form is precomputed
// spectrally (far more accurate than polynomial cancellation at multiple
// eigenvalues) and reduced() hands it out.
struct Coronal {
  RationalFunction rf;
  CoronalKind kind = CoronalKind::general;
  std::optional<RationalFunction> reduced_rf;

  Coronal reduced() const {
    return {reduced_rf ? *reduced_rf : rf.reduce(), kind, reduced_rf};
  }
};

namespace detail {

// Gamma_M = sum_j w_j / (x - lambda_j) over distinct eigenvalues, where w_j
// is the squared length of the all-ones vector's projection onto the
// eigenspace. Terms with w_j ~ 0 are exactly the cancelled poles.
inline RationalFunction coronal_reduced_spectral(const SymMatrix& m) {
  const int n = m.order();
  const EigenDecomposition ed = sym_eigen_full(m);
  std::vector<std::pair<double, double>> terms;  // (lambda, weight), lambda ascending
  {
    std::vector<std::pair<double, double>> raw(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      double colsum = 0;
      for (int i = 0; i < n; ++i) colsum += ed.vectors.at(i, j);
      raw[static_cast<std::size_t>(j)] = {ed.values[static_cast<std::size_t>(j)],
                                          colsum * colsum};
    }
    std::sort(raw.begin(), raw.end());
    for (const auto& [v, w] : raw) {
      if (!terms.empty() && v - terms.back().first <= 1e-8)
        terms.back().second += w;
      else
        terms.emplace_back(v, w);
    }
  }
  terms.erase(std::remove_if(terms.begin(), terms.end(),
                             [&](const auto& t) { return t.second < 1e-9 * n; }),
              terms.end());
  Polynomial den = Polynomial::constant(1.0);
  for (const auto& [v, w] : terms) den = den * Polynomial::from_root(v);
  Polynomial num = Polynomial::zero();
  for (std::size_t j = 0; j < terms.size(); ++j) {
    Polynomial part = Polynomial::constant(terms[j].second);
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (i != j) part = part * Polynomial::from_root(terms[i].first);
    num = num + part;
  }
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace detail

// Exact coronal via the Faddeev-LeVerrier adjugate coefficients:
// num = j^T adj(xI - M) j, den = char_poly(M).
//
// The stored reduced form prefers the polynomial cancellation (its
// coefficients are exact when the cancellation succeeds) and keeps the
// spectral form only when cancellation stops short of the true reduced
// degree, which the spectral form reveals.
inline Coronal coronal_general(const SymMatrix& m) {
  if (m.order() < 1) throw BadParams("coronal_general: order >= 1 required");
  auto fl = faddeev_leverrier(m);
  RationalFunction rf(std::move(fl.coronal_num), std::move(fl.poly));
  RationalFunction spectral = detail::coronal_reduced_spectral(m);
  try {
    RationalFunction cancelled = rf.reduce();
    // The spectral coefficients are accurate to Jacobi precision, so a
    // cancellation that drifts further than 1e-10 from them carries the
    // error itself and is rejected.
    if (cancelled.den().degree() == spectral.den().degree() &&
        cancelled.den().approx_equal(spectral.den(), 1e-10) &&
        cancelled.num().approx_equal(spectral.num(), 1e-10))
      spectral = std::move(cancelled);
  } catch (const Error&) {
    // root extraction on the unreduced denominator can fail at multiple
    // eigenvalues; the spectral form stands in
  }
  return {std::move(rf), CoronalKind::general, std::move(spectral)};
}

// Shortcut when every row sum of M equals t: Gamma = n / (x - t).
inline Coronal coronal_constant_row_sum(int n, double t) {
  if (n < 1) throw BadParams("coronal_constant_row_sum: n >= 1 required");
  return {RationalFunction(Polynomial::constant(static_cast<double>(n)),
                           Polynomial::from_root(t)),
          CoronalKind::constant_row_sum};
}

// Closed form for A_alpha(K_{a,b}):
//   (n2*x - alpha*n2^2 + 2ab) / (x^2 - alpha*n2*x + (2*alpha - 1)*ab).
// The closed form is cross-validated against the general adjugate route at
// ten sample points before being returned.
inline Coronal coronal_complete_bipartite(int a, int b, const AlphaParam& al) {
  if (a < 1 || b < 1) throw BadParams("coronal_complete_bipartite: parts >= 1 required");
  const double n2 = static_cast<double>(a + b);
  const double ab = static_cast<double>(a) * b;
  const double alpha = al.alpha();
  Polynomial num({2.0 * ab - alpha * n2 * n2, n2});
  Polynomial den({(2.0 * alpha - 1.0) * ab, -alpha * n2, 1.0});
  Coronal fast{RationalFunction(std::move(num), std::move(den)), CoronalKind::complete_bipartite};

  const Coronal general =
      coronal_general(alpha_matrix(named_graph("complete_bipartite", {a, b}), al)).reduced();
  for (int i = 1; i <= 10; ++i) {
    const double x = n2 + 1.0 + i;  // beyond the spectral radius, away from poles
    const double f = fast.rf.eval(x);
    const double g = general.rf.eval(x);
    if (std::abs(f - g) > 1e-10 * std::max(1.0, std::abs(g)))
      throw AssemblyError("K_{a,b} coronal closed form disagrees with the adjugate route at x=" +
                          std::to_string(x));
  }
  return fast;
}

// Evaluation guarded against pole proximity; the offending pole is reported.
inline double coronal_eval(const Coronal& c, double x) {
  const Spectrum poles = real_roots(c.rf.den());
  for (const auto& [p, mult] : poles.pairs)
    if (std::abs(x - p) < 1e-9)
      throw PoleProximity("coronal evaluation at x=" + std::to_string(x) +
                          " within 1e-9 of pole " + std::to_string(p));
  return c.rf.eval(x);
}

}  // namespace coronae
