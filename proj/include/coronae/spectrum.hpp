#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "coronae/errors.hpp"

namespace coronae {

// Multiset of eigenvalues (or polynomial roots): strictly increasing values
// with positive multiplicities, adjacent values more than merge_tol apart.
struct Spectrum {
  std::vector<std::pair<double, int>> pairs;
  double merge_tol = 1e-8;

  static Spectrum from_values(std::vector<double> values, double merge_tol = 1e-8) {
    std::vector<std::pair<double, int>> p;
    p.reserve(values.size());
    for (double v : values) p.emplace_back(v, 1);
    return from_pairs(std::move(p), merge_tol);
  }

  // Merges clusters of values closer than merge_tol; the representative is
  // the multiplicity-weighted mean of the cluster.
  static Spectrum from_pairs(std::vector<std::pair<double, int>> p, double merge_tol = 1e-8) {
    std::sort(p.begin(), p.end());
    Spectrum s;
    s.merge_tol = merge_tol;
    for (const auto& [v, m] : p) {
      if (m <= 0) throw BadParams("Spectrum: multiplicity must be positive");
      if (!s.pairs.empty() && v - s.pairs.back().first <= merge_tol) {
        auto& [pv, pm] = s.pairs.back();
        pv = (pv * pm + v * m) / (pm + m);
        pm += m;
      } else {
        s.pairs.emplace_back(v, m);
      }
    }
    return s;
  }

  int total() const {
    int t = 0;
    for (const auto& [v, m] : pairs) t += m;
    return t;
  }

  std::vector<double> flatten() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(total()));
    for (const auto& [v, m] : pairs)
      for (int i = 0; i < m; ++i) out.push_back(v);
    return out;
  }

  double trace_sum() const {
    double t = 0;
    for (const auto& [v, m] : pairs) t += v * m;
    return t;
  }

  double min_value() const { return pairs.empty() ? 0.0 : pairs.front().first; }
  double max_value() const { return pairs.empty() ? 0.0 : pairs.back().first; }
};

// True iff both multisets have the same size and, flattened and sorted, the
// largest elementwise deviation is at most tol.
inline bool spectra_equal(const Spectrum& s1, const Spectrum& s2, double tol) {
  if (s1.total() != s2.total()) return false;
  const auto a = s1.flatten();
  const auto b = s2.flatten();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

// Largest elementwise deviation between flattened spectra of equal size.
inline double spectra_deviation(const Spectrum& s1, const Spectrum& s2) {
  if (s1.total() != s2.total()) throw OrderMismatch("spectra_deviation: sizes differ");
  const auto a = s1.flatten();
  const auto b = s2.flatten();
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace coronae
