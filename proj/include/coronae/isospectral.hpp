#pragma once

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "coronae/coronal.hpp"
#include "coronae/errors.hpp"
#include "coronae/graph.hpp"
#include "coronae/linalg.hpp"
#include "coronae/products.hpp"
#include "coronae/spectrum.hpp"

namespace coronae {

struct IsoReport {
  enum class Mode { at_alpha, all_alpha };

  bool verdict = false;
  Mode mode = Mode::at_alpha;
  // one entry per sampled alpha: (alpha, max deviation at that alpha)
  std::vector<std::pair<double, double>> evidence;
  std::optional<double> witness_alpha;  // first failing alpha when verdict is false
};

inline IsoReport check_at_alpha(const Graph& g1, const Graph& g2, const AlphaParam& a,
                                double tol = 1e-8) {
  IsoReport r;
  r.mode = IsoReport::Mode::at_alpha;
  if (g1.n() != g2.n()) {
    r.verdict = false;
    r.evidence.emplace_back(a.alpha(), std::numeric_limits<double>::infinity());
    r.witness_alpha = a.alpha();
    return r;
  }
  const Spectrum s1 = sym_eigen(alpha_matrix(g1, a));
  const Spectrum s2 = sym_eigen(alpha_matrix(g2, a));
  const double dev = spectra_deviation(s1, s2);
  r.verdict = dev <= tol;
  r.evidence.emplace_back(a.alpha(), dev);
  if (!r.verdict) r.witness_alpha = a.alpha();
  return r;
}

namespace detail {

// n+1 Chebyshev nodes of [0,1], ascending. Each coefficient of
// det(nu I - A_alpha) is a polynomial of degree <= n in alpha, so agreement
// at n+1 distinct alphas is agreement for every alpha.
inline std::vector<double> chebyshev_alphas(int n) {
  const int m = n + 1;
  std::vector<double> xs(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    xs[static_cast<std::size_t>(j)] =
        0.5 - 0.5 * std::cos(M_PI * (2.0 * j + 1.0) / (2.0 * m));
  std::sort(xs.begin(), xs.end());
  return xs;
}

inline double all_alpha_deviation(const Graph& g1, const Graph& g2, double alpha) {
  // For small orders compare characteristic polynomial coefficients, which
  // is the direct statement of the degree argument. The coefficient
  // recurrence loses too much precision past ~16 vertices (and overflows
  // outright past ~300), so larger orders compare sorted spectra instead;
  // equal spectra and equal char polys are the same statement.
  if (g1.n() <= 16) {
    const Polynomial p1 = char_poly(alpha_matrix(g1, alpha));
    const Polynomial p2 = char_poly(alpha_matrix(g2, alpha));
    const double scale = std::max({1.0, p1.max_abs_coeff(), p2.max_abs_coeff()});
    double dev = 0.0;
    const int deg = std::max(p1.degree(), p2.degree());
    for (int k = 0; k <= deg; ++k) dev = std::max(dev, std::abs(p1.coeff(k) - p2.coeff(k)));
    return dev / scale;
  }
  const Spectrum s1 = sym_eigen(alpha_matrix(g1, alpha));
  const Spectrum s2 = sym_eigen(alpha_matrix(g2, alpha));
  return spectra_deviation(s1, s2);
}

}  // namespace detail

inline IsoReport check_all_alpha(const Graph& g1, const Graph& g2, double tol = 1e-7) {
  if (g1.n() != g2.n())
    throw OrderMismatch("check_all_alpha: orders " + std::to_string(g1.n()) + " vs " +
                        std::to_string(g2.n()));
  IsoReport r;
  r.mode = IsoReport::Mode::all_alpha;
  const std::vector<double> alphas = detail::chebyshev_alphas(g1.n());
  std::vector<double> devs(alphas.size(), 0.0);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk = (alphas.size() + hw - 1) / hw;
  std::vector<std::future<void>> futs;
  for (std::size_t lo = 0; lo < alphas.size(); lo += chunk) {
    const std::size_t hi = std::min(alphas.size(), lo + chunk);
    futs.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i)
        devs[i] = detail::all_alpha_deviation(g1, g2, alphas[i]);
    }));
  }
  for (auto& f : futs) f.get();

  r.verdict = true;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    r.evidence.emplace_back(alphas[i], devs[i]);
    if (devs[i] > tol && r.verdict) {
      r.verdict = false;
      r.witness_alpha = alphas[i];
    }
  }
  return r;
}

// Gamma_{A_alpha(G1)} == Gamma_{A_alpha(G2)} as rational functions. Small
// orders go through the reduced coronals with cross-multiplied comparison;
// large orders evaluate j^T (xI - M)^{-1} j by linear solves at enough
// points to pin down a rational function of the relevant degree.
inline bool coronal_equal(const Graph& g1, const Graph& g2, const AlphaParam& a) {
  const int maxn = std::max(g1.n(), g2.n());
  if (maxn == 0) return g1.n() == g2.n();

  const double radius = 2.0 * maxn + 2.0;  // beyond any A_alpha eigenvalue
  if (maxn <= 32) {
    const Coronal c1 = coronal_general(alpha_matrix(g1, a)).reduced();
    const Coronal c2 = coronal_general(alpha_matrix(g2, a)).reduced();
    const Polynomial lhs = c1.rf.num() * c2.rf.den();
    const Polynomial rhs = c2.rf.num() * c1.rf.den();
    for (int i = 0; i < maxn + 2; ++i) {
      const double x = radius + i;
      const double l = lhs.eval(x), rr = rhs.eval(x);
      if (std::abs(l - rr) > 1e-8 * std::max({1.0, std::abs(l), std::abs(rr)})) return false;
    }
    return true;
  }

  auto gamma = [&](const Graph& g, double x) {
    const int n = g.n();
    Matrix m(n, n);
    const SymMatrix aa = alpha_matrix(g, a);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = (i == j ? x : 0.0) - aa.at(i, j);
    const std::vector<double> y = solve_linear(std::move(m), std::vector<double>(n, 1.0));
    double s = 0.0;
    for (double v : y) s += v;
    return s;
  };
  for (int i = 0; i < 2 * maxn + 1; ++i) {
    const double x = radius + i;
    const double v1 = gamma(g1, x), v2 = gamma(g2, x);
    if (std::abs(v1 - v2) > 1e-8 * std::max({1.0, std::abs(v1), std::abs(v2)})) return false;
  }
  return true;
}

// --- cheap non-isomorphism certificates ---

struct Certificate {
  std::string invariant;
  std::string detail;
};

namespace detail {

template <typename T>
inline std::string join_counts(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace detail

// First distinguishing invariant among degree multiset, sorted per-vertex
// triangle counts, 4-cycle count, 4-clique count; empty means inconclusive.
// The 4-clique count is the one that separates strongly regular pairs such
// as Shrikhande vs the 4x4 rook graph, which agree on the first three.
inline std::optional<Certificate> nonisomorphism_evidence(const Graph& g1, const Graph& g2) {
  if (g1.n() != g2.n())
    throw OrderMismatch("nonisomorphism_evidence: same order required");

  auto d1 = g1.degree_sequence(), d2 = g2.degree_sequence();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2)
    return Certificate{"degree-multiset",
                       detail::join_counts(d1) + " vs " + detail::join_counts(d2)};

  auto t1 = triangles_per_vertex(g1), t2 = triangles_per_vertex(g2);
  std::sort(t1.begin(), t1.end());
  std::sort(t2.begin(), t2.end());
  if (t1 != t2)
    return Certificate{"triangles-per-vertex",
                       detail::join_counts(t1) + " vs " + detail::join_counts(t2)};

  const long long c1 = four_cycle_count(g1), c2 = four_cycle_count(g2);
  if (c1 != c2)
    return Certificate{"four-cycle-count",
                       std::to_string(c1) + " vs " + std::to_string(c2)};

  const long long q1 = four_clique_count(g1), q2 = four_clique_count(g2);
  if (q1 != q2)
    return Certificate{"four-clique-count",
                       std::to_string(q1) + " vs " + std::to_string(q2)};

  return std::nullopt;
}

// --- family generation ---

enum class Side { left, right };

struct FamilyRecipe {
  Graph seed1, seed2;
  Graph partner;
  ProductOp op = ProductOp::corona;
  Side side = Side::left;
  int depth = 1;
};

struct FamilyPair {
  Graph first, second;
  std::string justification;
};

struct FamilyResult {
  std::vector<FamilyPair> pairs;
  std::string halted_reason;  // nonempty when iteration stopped before depth
};

namespace detail {

// Returns the violated precondition, or empty when the recipe step is
// admissible for the given seed pair.
inline std::string admissibility_violation(const Graph& s1, const Graph& s2,
                                           const Graph& partner, ProductOp op, Side side,
                                           bool seeds_known_isospectral) {
  if (s1.n() != s2.n()) return "seed graphs must have the same order";
  if (s1 == s2) return "seed graphs must be non-isomorphic (identical graphs given)";
  if (op == ProductOp::r_graph) return "r-graph takes no partner; use edge-corona with K_1";

  if (side == Side::left) {
    if (op != ProductOp::corona) {
      const auto k1 = s1.is_regular(), k2 = s2.is_regular();
      if (!k1 || !k2)
        return std::string(product_op_name(op)) + " on the left requires regular seed graphs";
      if (s1.m() < 1) return "left seeds need at least one edge for " +
                             std::string(product_op_name(op));
    }
  } else {
    for (double al : {0.0, 0.25, 0.5, 0.75})
      if (!coronal_equal(s1, s2, al))
        return "right-side recipes require coronal-equal seeds (fails at alpha = " +
               std::to_string(al) + ")";
    if (op != ProductOp::corona) {
      if (!partner.is_regular())
        return std::string(product_op_name(op)) + " on the right requires a regular partner";
      if (partner.m() < 1)
        return "right partner needs at least one edge for " +
               std::string(product_op_name(op));
    }
  }

  if (!seeds_known_isospectral) {
    IsoReport rep = check_all_alpha(s1, s2, 1e-7);
    if (!rep.verdict) return "seed pair is not isospectral at every alpha";
  }
  return {};
}

inline std::string step_justification(ProductOp op, Side side, int depth) {
  std::string s = side == Side::left ? "left " : "right ";
  s += product_op_name(op);
  s += " of an all-alpha isospectral ";
  s += side == Side::left ? "seed pair" : "coronal-equal seed pair";
  s += " (depth " + std::to_string(depth) + ")";
  return s;
}

}  // namespace detail

// Iterated family construction. The initial recipe must be admissible
// (InadmissibleRecipe otherwise). At later depths the products of the
// previous step become the seeds; preconditions are re-checked and the
// iteration halts with the violated one recorded, since e.g. a left corona
// output is never regular.
inline FamilyResult build_family(const FamilyRecipe& recipe) {
  if (recipe.depth < 1) throw InadmissibleRecipe("depth must be at least 1");

  FamilyResult out;
  Graph s1 = recipe.seed1, s2 = recipe.seed2;
  for (int d = 1; d <= recipe.depth; ++d) {
    const std::string violation = detail::admissibility_violation(
        s1, s2, recipe.partner, recipe.op, recipe.side, /*seeds_known_isospectral=*/d > 1);
    if (!violation.empty()) {
      if (d == 1) throw InadmissibleRecipe(violation);
      out.halted_reason = "halted at depth " + std::to_string(d) + ": " + violation;
      return out;
    }
    Graph p1, p2;
    if (recipe.side == Side::left) {
      p1 = apply_product(recipe.op, s1, recipe.partner).graph;
      p2 = apply_product(recipe.op, s2, recipe.partner).graph;
    } else {
      p1 = apply_product(recipe.op, recipe.partner, s1).graph;
      p2 = apply_product(recipe.op, recipe.partner, s2).graph;
    }
    out.pairs.push_back({p1, p2, detail::step_justification(recipe.op, recipe.side, d)});
    s1 = std::move(p1);
    s2 = std::move(p2);
  }
  return out;
}

}  // namespace coronae
