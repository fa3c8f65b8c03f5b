#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coronae/coronal.hpp"
#include "coronae/errors.hpp"
#include "coronae/graph.hpp"
#include "coronae/linalg.hpp"
#include "coronae/polynomial.hpp"
#include "coronae/products.hpp"
#include "coronae/spectrum.hpp"

// Closed-form A_alpha spectra of the corona-type products. Every routine is
// derived from the block-elimination structure of the factorization proofs
// (Schur complement on the copy block, then on the I(G1) block, with
// beta*B1*B1^T = A_alpha(G1) - (2*alpha-1)*k1*I for regular G1), never
// transcribed from the printed closed forms; see discrepancies() for the
// print corrections this forced.

namespace coronae {

struct ProvenanceEntry {
  std::string group;  // copy-shift | pole | quadratic | cubic | degree-k | pole-division
  int count = 0;
};

struct TheoremResult {
  Spectrum spectrum;
  FactoredCharPoly factored;
  std::vector<ProvenanceEntry> provenance;
};

namespace detail {

struct TheoremInputs {
  Spectrum s1;                                   // eigenvalues of A_alpha(G1)
  Spectrum s2;                                   // eigenvalues of A_alpha(G2)
  Polynomial f2;                                 // char poly of A_alpha(G2)
  Polynomial p_num, q_den;                       // reduced coronal of A_alpha(G2)
  std::vector<std::pair<double, int>> pole_vals; // roots of q_den, snapped to s2
  std::vector<std::pair<double, int>> copy_vals; // s2 minus pole_vals (unshifted)
  Polynomial copy_poly;                          // f2 / q_den
};

inline TheoremInputs prepare(const Graph& g1, const Graph& g2, const AlphaParam& a,
                             const Coronal& reduced_coronal) {
  TheoremInputs t;
  t.s1 = sym_eigen(alpha_matrix(g1, a));
  t.s2 = sym_eigen(alpha_matrix(g2, a));
  t.f2 = char_poly(alpha_matrix(g2, a));
  t.p_num = reduced_coronal.rf.num();
  t.q_den = reduced_coronal.rf.den();

  // Coronal poles sit among the eigenvalues of A_alpha(G2); snap each pole
  // to the Jacobi value, which is accurate even at multiple eigenvalues.
  const Spectrum poles = real_roots(t.q_den);
  std::vector<std::pair<double, int>> copy(t.s2.pairs);
  for (const auto& [pv, pm] : poles.pairs) {
    double snapped = pv;
    std::size_t best = copy.size();
    double bestd = 1e-5;
    for (std::size_t i = 0; i < copy.size(); ++i) {
      const double d = std::abs(copy[i].first - pv);
      if (d < bestd && copy[i].second >= pm) {
        bestd = d;
        best = i;
      }
    }
    if (best == copy.size())
      throw AssemblyError("coronal pole " + std::to_string(pv) +
                          " not matched to an eigenvalue of A_alpha(G2)");
    snapped = copy[best].first;
    copy[best].second -= pm;
    if (copy[best].second == 0) copy.erase(copy.begin() + static_cast<long>(best));
    t.pole_vals.emplace_back(snapped, pm);
  }
  t.copy_vals = std::move(copy);

  auto [quot, rem] = t.f2.divide(t.q_den);
  if (!rem.is_zero() && rem.max_abs_coeff() > 1e-7 * std::max(1.0, t.f2.max_abs_coeff()))
    throw AssemblyError("reduced coronal denominator does not divide char_poly(A_alpha(G2))");
  t.copy_poly = std::move(quot);
  return t;
}

struct FactorPlan {
  int expected_order = 0;
  Polynomial copy_factor;  // already shifted, monic; may be constant
  std::vector<std::pair<double, int>> copy_roots;  // shifted, per single block
  int copies = 0;
  Polynomial pole_factor;  // monic; ignored when pole_exp == 0
  int pole_exp = 0;        // may be negative (division case)
  std::vector<std::pair<double, int>> pole_roots;
  std::vector<std::pair<Polynomial, int>> cleared;  // per distinct nu_i of G1
};

inline std::string degree_tag(int d) {
  if (d == 1) return "linear";
  if (d == 2) return "quadratic";
  if (d == 3) return "cubic";
  return "degree-" + std::to_string(d);
}

inline TheoremResult assemble(const FactorPlan& plan) {
  TheoremResult res;
  std::vector<std::pair<double, int>> roots;

  if (plan.copy_factor.degree() > 0 && plan.copies > 0)
    res.factored.factors.emplace_back(plan.copy_factor, plan.copies);
  int copy_count = 0;
  for (const auto& [v, m] : plan.copy_roots) {
    roots.emplace_back(v, m * plan.copies);
    copy_count += m * plan.copies;
  }
  if (copy_count > 0) res.provenance.push_back({"copy-shift", copy_count});

  if (plan.pole_exp >= 0) {
    if (plan.pole_exp > 0) {
      res.factored.factors.emplace_back(plan.pole_factor, plan.pole_exp);
      int pole_count = 0;
      for (const auto& [v, m] : plan.pole_roots) {
        roots.emplace_back(v, m * plan.pole_exp);
        pole_count += m * plan.pole_exp;
      }
      res.provenance.push_back({"pole", pole_count});
    }
    for (const auto& [poly, e] : plan.cleared) {
      const Polynomial mono = poly.monic();
      res.factored.factors.emplace_back(mono, e);
      const Spectrum r = real_roots(mono);
      for (const auto& [v, m] : r.pairs) roots.emplace_back(v, m * e);
      res.provenance.push_back({degree_tag(mono.degree()), mono.degree() * e});
    }
  } else {
    // More copy blocks than attachment objects: the cleared factors jointly
    // carry pole_factor^{-pole_exp} as spurious content; divide it out of
    // the expanded product and drop the matching root occurrences.
    Polynomial prod = Polynomial::constant(1.0);
    for (const auto& [poly, e] : plan.cleared) prod = prod * poly.monic().pow(e);
    const Polynomial divisor = plan.pole_factor.pow(-plan.pole_exp);
    auto [quot, rem] = prod.divide(divisor);
    if (rem.max_abs_coeff() > 1e-6 * std::max(1.0, prod.max_abs_coeff()))
      throw AssemblyError("pole factor does not divide the cleared product");
    res.factored.factors.emplace_back(quot.monic(), 1);

    std::vector<double> flat;
    for (const auto& [poly, e] : plan.cleared) {
      const Spectrum r = real_roots(poly.monic());
      for (const auto& [v, m] : r.pairs)
        for (int i = 0; i < m * e; ++i) flat.push_back(v);
    }
    for (const auto& [pv, pm] : plan.pole_roots) {
      for (int k = 0; k < pm * (-plan.pole_exp); ++k) {
        std::size_t best = flat.size();
        double bestd = 1e-5;
        for (std::size_t i = 0; i < flat.size(); ++i) {
          const double d = std::abs(flat[i] - pv);
          if (d < bestd) {
            bestd = d;
            best = i;
          }
        }
        if (best == flat.size())
          throw AssemblyError("spurious pole root " + std::to_string(pv) +
                              " not found among cleared-factor roots");
        flat.erase(flat.begin() + static_cast<long>(best));
      }
    }
    for (double v : flat) roots.emplace_back(v, 1);
    res.provenance.push_back({"pole-division", static_cast<int>(flat.size())});
  }

  res.spectrum = Spectrum::from_pairs(std::move(roots), 1e-8);
  if (res.spectrum.total() != plan.expected_order)
    throw AssemblyError("assembled spectrum has " + std::to_string(res.spectrum.total()) +
                        " eigenvalues, expected " + std::to_string(plan.expected_order));
  if (res.factored.total_degree() != plan.expected_order)
    throw AssemblyError("assembled factorization degree mismatch");
  return res;
}

// f(nu) = (f2(nu-alpha)/q(nu-alpha))^{n1} *
//         prod_i [ (nu - alpha*n2 - nu_i) * q(nu-alpha) - beta^2 * p(nu-alpha) ]
inline TheoremResult corona_assemble(const Graph& g1, const Graph& g2, const AlphaParam& a,
                                     const Coronal& cor) {
  if (g1.n() < 1) throw EmptyG1("corona theorem: G1 must have at least one vertex");
  const TheoremInputs t = prepare(g1, g2, a, cor);
  const double al = a.alpha(), beta = a.beta();
  const double n2 = static_cast<double>(g2.n());

  FactorPlan plan;
  plan.expected_order = g1.n() * (g2.n() + 1);
  plan.copies = g1.n();
  plan.copy_factor = t.copy_poly.shift(al);
  for (const auto& [v, m] : t.copy_vals) plan.copy_roots.emplace_back(v + al, m);
  const Polynomial qs = t.q_den.shift(al);
  const Polynomial ps = t.p_num.shift(al);
  for (const auto& [nu, mult] : t.s1.pairs) {
    const Polynomial lin({-al * n2 - nu, 1.0});
    plan.cleared.emplace_back(lin * qs - (beta * beta) * ps, mult);
  }
  return assemble(plan);
}

// f(nu) = (f2(nu-2a)/q(nu-2a))^{m1} * q(nu-2a)^{m1-n1} *
//         prod_i [ (nu - a*k1*n2 - nu_i) * q(nu-2a) + beta*((2a-1)*k1 - nu_i) * p(nu-2a) ]
inline TheoremResult edge_corona_assemble(const Graph& g1, const Graph& g2, const AlphaParam& a,
                                          const Coronal& cor) {
  if (g1.m() < 1) throw NoEdgesInG1("edge-corona theorem: G1 must have at least one edge");
  const auto k1opt = g1.is_regular();
  if (!k1opt) throw NotRegular("edge-corona theorem requires a regular G1");
  a.require_below_one("edge-corona theorem");
  const double k1 = static_cast<double>(*k1opt);
  const TheoremInputs t = prepare(g1, g2, a, cor);
  const double al = a.alpha(), beta = a.beta();
  const double n2 = static_cast<double>(g2.n());

  FactorPlan plan;
  plan.expected_order = g1.n() + g1.m() * g2.n();
  plan.copies = g1.m();
  plan.copy_factor = t.copy_poly.shift(2 * al);
  for (const auto& [v, m] : t.copy_vals) plan.copy_roots.emplace_back(v + 2 * al, m);
  const Polynomial qs = t.q_den.shift(2 * al);
  const Polynomial ps = t.p_num.shift(2 * al);
  plan.pole_factor = qs;
  plan.pole_exp = g1.m() - g1.n();
  for (const auto& [v, m] : t.pole_vals) plan.pole_roots.emplace_back(v + 2 * al, m);
  for (const auto& [nu, mult] : t.s1.pairs) {
    const Polynomial lin({-al * k1 * n2 - nu, 1.0});
    plan.cleared.emplace_back(lin * qs + (beta * ((2 * al - 1) * k1 - nu)) * ps, mult);
  }
  return assemble(plan);
}

// f(nu) = (f2(nu-a)/q(nu-a))^{n1} * (nu-2a)^{m1-n1} *
//         prod_i [ (nu - k' - nu_i)(nu - 2a) q(nu-a) - beta^2 (nu-2a) p(nu-a)
//                  + beta*((2a-1)*k1 - nu_i) * q(nu-a) ],   k' = a*(k1 + n2)
inline TheoremResult r_vertex_assemble(const Graph& g1, const Graph& g2, const AlphaParam& a,
                                       const Coronal& cor) {
  if (g1.m() < 1) throw NoEdgesInG1("r-vertex theorem: G1 must have at least one edge");
  const auto k1opt = g1.is_regular();
  if (!k1opt) throw NotRegular("r-vertex theorem requires a regular G1");
  a.require_below_one("r-vertex theorem");
  const double k1 = static_cast<double>(*k1opt);
  const TheoremInputs t = prepare(g1, g2, a, cor);
  const double al = a.alpha(), beta = a.beta();
  const double kprime = al * (k1 + g2.n());

  FactorPlan plan;
  plan.expected_order = g1.n() * (1 + g2.n()) + g1.m();
  plan.copies = g1.n();
  plan.copy_factor = t.copy_poly.shift(al);
  for (const auto& [v, m] : t.copy_vals) plan.copy_roots.emplace_back(v + al, m);
  const Polynomial qs = t.q_den.shift(al);
  const Polynomial ps = t.p_num.shift(al);
  const Polynomial ivert = Polynomial::from_root(2 * al);
  plan.pole_factor = ivert;
  plan.pole_exp = g1.m() - g1.n();
  plan.pole_roots.emplace_back(2 * al, 1);
  for (const auto& [nu, mult] : t.s1.pairs) {
    const Polynomial lin({-kprime - nu, 1.0});
    plan.cleared.emplace_back(lin * ivert * qs - (beta * beta) * (ivert * ps) +
                                  (beta * ((2 * al - 1) * k1 - nu)) * qs,
                              mult);
  }
  return assemble(plan);
}

// w(nu) = (nu - (n2+2)*a) * q(nu-a) - beta^2 * p(nu-a)      [nu - r cleared]
// f(nu) = (f2(nu-a)/q(nu-a))^{m1} * w(nu)^{m1-n1} *
//         prod_i [ (nu - a*k1 - nu_i) * w(nu) + beta*((2a-1)*k1 - nu_i) * q(nu-a) ]
inline TheoremResult r_edge_assemble(const Graph& g1, const Graph& g2, const AlphaParam& a,
                                     const Coronal& cor) {
  if (g1.m() < 1) throw NoEdgesInG1("r-edge theorem: G1 must have at least one edge");
  const auto k1opt = g1.is_regular();
  if (!k1opt) throw NotRegular("r-edge theorem requires a regular G1");
  a.require_below_one("r-edge theorem");
  const double k1 = static_cast<double>(*k1opt);
  const TheoremInputs t = prepare(g1, g2, a, cor);
  const double al = a.alpha(), beta = a.beta();
  const double n2 = static_cast<double>(g2.n());

  FactorPlan plan;
  plan.expected_order = g1.n() + g1.m() * (1 + g2.n());
  plan.copies = g1.m();
  plan.copy_factor = t.copy_poly.shift(al);
  for (const auto& [v, m] : t.copy_vals) plan.copy_roots.emplace_back(v + al, m);
  const Polynomial qs = t.q_den.shift(al);
  const Polynomial ps = t.p_num.shift(al);
  const Polynomial w = Polynomial({-(n2 + 2) * al, 1.0}) * qs - (beta * beta) * ps;
  plan.pole_factor = w;
  plan.pole_exp = g1.m() - g1.n();
  for (const auto& [v, m] : real_roots(w).pairs) plan.pole_roots.emplace_back(v, m);
  for (const auto& [nu, mult] : t.s1.pairs) {
    const Polynomial lin({-al * k1 - nu, 1.0});
    plan.cleared.emplace_back(lin * w + (beta * ((2 * al - 1) * k1 - nu)) * qs, mult);
  }
  return assemble(plan);
}

inline std::optional<std::pair<int, int>> detect_complete_bipartite(const Graph& g) {
  // Accept exactly the constructor's labeling: part A = 0..a-1, part B after.
  for (int a = 1; a < g.n(); ++a) {
    const int b = g.n() - a;
    if (g == named_graph("complete_bipartite", {a, b})) return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace detail

// --- corona G1 o G2 ---

// Arbitrary G1 and G2; the coronal of A_alpha(G2) comes from the general
// adjugate route.
inline TheoremResult corona_charpoly(const Graph& g1, const Graph& g2, const AlphaParam& a) {
  const Coronal cor = coronal_general(alpha_matrix(g2, a)).reduced();
  return detail::corona_assemble(g1, g2, a, cor);
}

// G2 k-regular: coronal n2/(x - k), per-eigenvalue factors quadratic.
inline TheoremResult corona_spectrum_regular(const Graph& g1, const Graph& g2,
                                             const AlphaParam& a) {
  const auto k2 = g2.is_regular();
  if (!k2) throw NotRegular("corona_spectrum_regular requires a regular G2");
  return detail::corona_assemble(g1, g2, a, coronal_constant_row_sum(g2.n(), *k2));
}

// G2 = K_{a,b}: validated closed-form coronal, per-eigenvalue factors cubic.
// a == b is the a-regular case and delegates to corona_spectrum_regular.
inline TheoremResult corona_spectrum_kab(const Graph& g1, int a_part, int b_part,
                                         const AlphaParam& al) {
  const Graph g2 = named_graph("complete_bipartite", {a_part, b_part});
  if (a_part == b_part) return corona_spectrum_regular(g1, g2, al);
  return detail::corona_assemble(g1, g2, al, coronal_complete_bipartite(a_part, b_part, al));
}

// --- edge corona G1 <> G2 (G1 regular) ---

inline TheoremResult edge_corona_charpoly(const Graph& g1, const Graph& g2, const AlphaParam& a) {
  const Coronal cor = coronal_general(alpha_matrix(g2, a)).reduced();
  return detail::edge_corona_assemble(g1, g2, a, cor);
}

inline TheoremResult edge_corona_spectrum_regular(const Graph& g1, const Graph& g2,
                                                  const AlphaParam& a) {
  const auto k2 = g2.is_regular();
  if (!k2) throw NotRegular("edge_corona_spectrum_regular requires a regular G2");
  return detail::edge_corona_assemble(g1, g2, a, coronal_constant_row_sum(g2.n(), *k2));
}

inline TheoremResult edge_corona_spectrum_kab(const Graph& g1, int a_part, int b_part,
                                              const AlphaParam& al) {
  if (a_part == b_part)
    throw PartsEqual("edge_corona_spectrum_kab: a == b is the regular case");
  const Graph g2 = named_graph("complete_bipartite", {a_part, b_part});
  return detail::edge_corona_assemble(g1, g2, al,
                                      coronal_complete_bipartite(a_part, b_part, al));
}

// --- R-vertex corona G1 (.) G2 (G1 regular) ---

inline TheoremResult r_vertex_charpoly(const Graph& g1, const Graph& g2, const AlphaParam& a) {
  const Coronal cor = coronal_general(alpha_matrix(g2, a)).reduced();
  return detail::r_vertex_assemble(g1, g2, a, cor);
}

inline TheoremResult r_vertex_spectrum_regular(const Graph& g1, const Graph& g2,
                                               const AlphaParam& a) {
  const auto k2 = g2.is_regular();
  if (!k2) throw NotRegular("r_vertex_spectrum_regular requires a regular G2");
  return detail::r_vertex_assemble(g1, g2, a, coronal_constant_row_sum(g2.n(), *k2));
}

// --- R-edge corona G1 (-) G2 (G1 regular) ---

inline TheoremResult r_edge_charpoly(const Graph& g1, const Graph& g2, const AlphaParam& a) {
  const Coronal cor = coronal_general(alpha_matrix(g2, a)).reduced();
  return detail::r_edge_assemble(g1, g2, a, cor);
}

// Dispatch by product op, using the general-coronal route. r_graph is the
// edge corona with K1.
inline TheoremResult theorem_spectrum(ProductOp op, const Graph& g1, const Graph& g2,
                                      const AlphaParam& a) {
  switch (op) {
    case ProductOp::corona: return corona_charpoly(g1, g2, a);
    case ProductOp::edge_corona: return edge_corona_charpoly(g1, g2, a);
    case ProductOp::r_graph: return edge_corona_charpoly(g1, Graph::from_edge_list(1, {}), a);
    case ProductOp::r_vertex: return r_vertex_charpoly(g1, g2, a);
    case ProductOp::r_edge: return r_edge_charpoly(g1, g2, a);
  }
  throw BadParams("theorem_spectrum: unknown op");
}

// --- print-correction ledger ---

struct Discrepancy {
  std::string theorem_id;
  std::string printed;
  std::string corrected;
  std::string witness;  // concrete input on which the corrected form is oracle-checked
  ProductOp op;
  Graph g1, g2;
  double alpha;
};

inline const std::vector<Discrepancy>& discrepancies() {
  static const std::vector<Discrepancy> entries = [] {
    const Graph k1 = Graph::from_edge_list(1, {});
    const Graph k2 = named_graph("complete", {2});
    const Graph k3 = named_graph("complete", {3});
    const Graph c3 = named_graph("cycle", {3});
    const Graph c4 = named_graph("cycle", {4});
    const Graph k12 = named_graph("complete_bipartite", {1, 2});
    std::vector<Discrepancy> v;
    v.push_back({"Theorem 3.2 (ii)",
                 "copy eigenvalues printed as eta_j + 1 with multiplicity n1",
                 "eta_j + alpha, as forced by the factor f_{A_alpha(G2)}(nu - alpha) of "
                 "Proposition 3.1",
                 "K_1 corona K_2 at alpha = 0: the triangle needs eigenvalue -1, not 0",
                 ProductOp::corona, k1, k2, 0.0});
    v.push_back({"Theorem 3.2 (i)",
                 "printed quadratic constant term alpha*n2*(alpha + k + nu_i) - beta^2*n2 + "
                 "k*nu_i (and a radical that does not expand to its discriminant)",
                 "roots of the cleared condition (eta - alpha*n2 - nu_i)(eta - alpha - k) "
                 "- beta^2*n2 = 0, whose constant term carries alpha*nu_i, not alpha*n2*nu_i",
                 "K_2 corona C_3 at alpha = 0.25 versus the direct eigensolve",
                 ProductOp::corona, k2, c3, 0.25});
    v.push_back({"Theorem 3.3 (iii)",
                 "printed cubic mixes the symbols n and n2",
                 "cubic obtained by clearing (eta - alpha*n2) - beta^2*Gamma(eta - alpha) = nu_i "
                 "with the ten-point-validated K_{a,b} coronal",
                 "K_2 corona K_{1,2} at alpha = 0.5 versus the direct eigensolve",
                 ProductOp::corona, k2, k12, 0.5});
    v.push_back({"Theorem 4.2",
                 "statement drops Gamma from the beta*k1*(2*alpha - 1) term; its proof drops k1 "
                 "from the beta*Gamma term",
                 "condition nu - alpha*k1*n2 + beta*(2*alpha - 1)*k1*Gamma(nu - 2*alpha) = "
                 "(1 + beta*Gamma(nu - 2*alpha))*nu_i",
                 "K_3 edge-corona K_1 at alpha = 0: reproduces the 3-sun spectrum "
                 "{1 +- sqrt(5), (-1 +- sqrt(5))/2 twice}",
                 ProductOp::edge_corona, k3, k1, 0.0});
    v.push_back({"Theorem 4.4 (iii) / Section 5 corollary",
                 "printed cubics contain unmatched symbols (k vs k1, n vs n2)",
                 "not transcribed; cubics are assembled by denominator-clearing the corrected "
                 "eigenvalue conditions",
                 "C_4 edge-corona K_{1,2} at alpha = 0.25 versus the direct eigensolve",
                 ProductOp::edge_corona, c4, k12, 0.25});
    v.push_back({"Theorem 5.1",
                 "statement evaluates the coronal at nu - k'",
                 "Gamma(nu - alpha): the copy block eliminated is (nu - alpha)I - A_alpha(G2), "
                 "matching the proof's own display",
                 "C_4 r-vertex K_2 at alpha = 0.25 versus the direct eigensolve",
                 ProductOp::r_vertex, c4, k2, 0.25});
    v.push_back({"Theorem 6.1",
                 "r printed as (n2+2)*alpha + Gamma(nu - alpha); the proof's Schur step writes "
                 "beta*B1*B1^T",
                 "r = (n2+2)*alpha + beta^2*Gamma(nu - alpha) and beta^2*B1*B1^T: the "
                 "off-diagonal blocks carry beta each",
                 "K_2 r-edge K_1 at alpha = 0.25 versus the direct eigensolve",
                 ProductOp::r_edge, k2, k1, 0.25});
    return v;
  }();
  return entries;
}

inline std::string discrepancies_markdown() {
  std::string out;
  out += "# Print discrepancies\n\n";
  out += "Ground truth throughout is the spectrum of the explicitly constructed product\n";
  out += "graph's A_alpha matrix. Each entry below records a printed formula that\n";
  out += "disagrees with that oracle, the corrected form the library implements, and a\n";
  out += "concrete witness input on which the corrected form is verified.\n";
  for (const auto& d : discrepancies()) {
    out += "\n## " + d.theorem_id + "\n\n";
    out += "- printed: " + d.printed + "\n";
    out += "- corrected: " + d.corrected + "\n";
    out += "- witness: " + d.witness + "\n";
  }
  return out;
}

}  // namespace coronae
