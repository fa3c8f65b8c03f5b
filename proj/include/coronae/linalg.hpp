#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "coronae/errors.hpp"
#include "coronae/graph.hpp"
#include "coronae/polynomial.hpp"
#include "coronae/spectrum.hpp"

namespace coronae {

// Dense rectangular matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size(), 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const double* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }
  double* row(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw BadParams("matmul: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const double aik = a.at(i, k);
        if (aik == 0.0) continue;
        const double* brow = b.row(k);
        double* crow = c.row(i);
        for (int j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw BadParams("add: dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw BadParams("sub: dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }

  friend Matrix operator*(double s, const Matrix& m) {
    Matrix c = m;
    for (double& v : c.a_) v *= s;
    return c;
  }

  double max_abs() const {
    double r = 0;
    for (double v : a_) r = std::max(r, std::abs(v));
    return r;
  }

  double trace() const {
    double t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
  }

  double entry_sum() const {
    double s = 0;
    for (double v : a_) s += v;
    return s;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;

  std::size_t size() const { return static_cast<std::size_t>(rows_) * cols_; }
};

// Dense symmetric matrix; the setter writes both triangles so the stored
// entries are bitwise symmetric by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int order() const { return n_; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = v;
  }
  void add(int i, int j, double v) { set(i, j, at(i, j) + v); }

  Matrix to_matrix() const {
    Matrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
    return m;
  }

  double trace() const {
    double t = 0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

// alpha in [0,1]; beta = 1 - alpha is derived, never stored.
class AlphaParam {
 public:
  AlphaParam(double alpha) : alpha_(alpha) {  // NOLINT(google-explicit-constructor)
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw BadParams("alpha must lie in [0,1]");
  }
  double alpha() const { return alpha_; }
  double beta() const { return 1.0 - alpha_; }
  void require_below_one(const char* what) const {
    if (alpha_ >= 1.0) throw BadParams(std::string(what) + " requires alpha < 1");
  }

 private:
  double alpha_;
};

// --- graph matrices ---

inline SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.n());
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

inline SymMatrix degree_matrix(const Graph& g) {
  SymMatrix m(g.n());
  const auto d = g.degree_sequence();
  for (int i = 0; i < g.n(); ++i) m.set(i, i, static_cast<double>(d[static_cast<std::size_t>(i)]));
  return m;
}

// A_alpha(G) = alpha*D + (1-alpha)*A
inline SymMatrix alpha_matrix(const Graph& g, const AlphaParam& a) {
  SymMatrix m(g.n());
  const auto d = g.degree_sequence();
  for (int i = 0; i < g.n(); ++i)
    m.set(i, i, a.alpha() * static_cast<double>(d[static_cast<std::size_t>(i)]));
  for (const auto& [u, v] : g.edges()) m.set(u, v, a.beta());
  return m;
}

inline SymMatrix signless_laplacian(const Graph& g) {
  SymMatrix m(g.n());
  const auto d = g.degree_sequence();
  for (int i = 0; i < g.n(); ++i) m.set(i, i, static_cast<double>(d[static_cast<std::size_t>(i)]));
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

inline SymMatrix laplacian(const Graph& g) {
  SymMatrix m(g.n());
  const auto d = g.degree_sequence();
  for (int i = 0; i < g.n(); ++i) m.set(i, i, static_cast<double>(d[static_cast<std::size_t>(i)]));
  for (const auto& [u, v] : g.edges()) m.set(u, v, -1.0);
  return m;
}

// n x m vertex-edge incidence matrix; columns follow the canonical sorted
// edge order (the ordering contract used by every corona construction).
inline Matrix incidence_matrix(const Graph& g) {
  Matrix b(g.n(), g.m());
  int e = 0;
  for (const auto& [u, v] : g.edges()) {
    b.at(u, e) = 1.0;
    b.at(v, e) = 1.0;
    ++e;
  }
  return b;
}

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const double aij = a.at(i, j);
      if (aij == 0.0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          k.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
    }
  return k;
}

// Gaussian elimination with partial pivoting; a is consumed.
inline std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    throw BadParams("solve_linear: square system required");
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a.at(i, k)) > std::abs(a.at(piv, k))) piv = i;
    if (a.at(piv, k) == 0.0) throw BadParams("solve_linear: singular system");
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = a.at(i, k) / a.at(k, k);
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
    }
  }
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s / a.at(i, i);
  }
  return x;
}

// --- characteristic polynomial (Faddeev-LeVerrier) ---

// One pass of the Faddeev-LeVerrier recurrence yields both the monic
// characteristic polynomial det(xI - M) and the numerator of the coronal
// j^T (xI - M)^{-1} j: with B_0 = I and B_k = M B_{k-1} + c_k I, the
// resolvent numerator is sum_k (entry sum of B_k) x^{n-1-k}.
struct CharPolyResult {
  Polynomial poly;
  Polynomial coronal_num;
};

inline CharPolyResult faddeev_leverrier(const SymMatrix& m) {
  const int n = m.order();
  if (n > 512) throw OrderTooLarge("char_poly: order " + std::to_string(n) + " exceeds 512");
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);  // c[k], c[0] = 1
  std::vector<double> s(static_cast<std::size_t>(n), 0.0);      // entry sums of B_k
  c[0] = 1.0;
  const Matrix a = m.to_matrix();
  Matrix b = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    s[static_cast<std::size_t>(k - 1)] = b.entry_sum();
    Matrix ab = a * b;
    c[static_cast<std::size_t>(k)] = -ab.trace() / k;
    if (k < n) {
      b = std::move(ab);
      for (int i = 0; i < n; ++i) b.at(i, i) += c[static_cast<std::size_t>(k)];
    }
  }
  std::vector<double> pc(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) pc[static_cast<std::size_t>(n - k)] = c[static_cast<std::size_t>(k)];
  std::vector<double> nc(static_cast<std::size_t>(std::max(n, 1)), 0.0);
  for (int k = 0; k < n; ++k) nc[static_cast<std::size_t>(n - 1 - k)] = s[static_cast<std::size_t>(k)];
  return {Polynomial(std::move(pc)), Polynomial(std::move(nc))};
}

inline Polynomial char_poly(const SymMatrix& m) { return faddeev_leverrier(m).poly; }

// --- symmetric eigensolver (cyclic Jacobi) ---

// Full decomposition M = V diag(values) V^T; column j of V is the
// eigenvector of values[j]. Values are unsorted (Jacobi diagonal order).
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
};

inline EigenDecomposition sym_eigen_full(const SymMatrix& m, double tol = 1e-12) {
  const int n = m.order();
  EigenDecomposition out;
  out.vectors = Matrix::identity(n);
  if (n == 0) return out;
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
  const double fro = m.frobenius_norm();
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  if (fro > 0) {
    const double stop = tol * fro;
    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
      converged = true;
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) {
          const double apq = at(p, q);
          if (std::abs(apq) <= stop) continue;
          converged = false;
          const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
          const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const double app = at(p, p), aqq = at(q, q);
          at(p, p) = app - t * apq;
          at(q, q) = aqq + t * apq;
          at(p, q) = 0.0;
          at(q, p) = 0.0;
          for (int k = 0; k < n; ++k) {
            if (k != p && k != q) {
              const double akp = at(k, p), akq = at(k, q);
              at(k, p) = c * akp - s * akq;
              at(p, k) = at(k, p);
              at(k, q) = s * akp + c * akq;
              at(q, k) = at(k, q);
            }
            const double vkp = out.vectors.at(k, p), vkq = out.vectors.at(k, q);
            out.vectors.at(k, p) = c * vkp - s * vkq;
            out.vectors.at(k, q) = s * vkp + c * vkq;
          }
        }
      if (sweep == 99 && !converged)
        throw NoConvergence("sym_eigen_full: 100 Jacobi sweeps exhausted");
    }
  }
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = at(i, i);
  return out;
}

// Ground-truth oracle: cyclic Jacobi sweeps until every off-diagonal entry
// is below tol * ||M||_F. Throws NoConvergence after 100 sweeps (a bug
// signal, not an input condition).
inline Spectrum sym_eigen(const SymMatrix& m, double tol = 1e-12, double merge_tol = 1e-8) {
  const int n = m.order();
  if (n == 0) return Spectrum{};
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
  const double fro = m.frobenius_norm();
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  if (fro > 0) {
    const double stop = tol * fro;
    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
      converged = true;
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) {
          const double apq = at(p, q);
          if (std::abs(apq) <= stop) continue;
          converged = false;
          const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
          const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const double app = at(p, p), aqq = at(q, q);
          at(p, p) = app - t * apq;
          at(q, q) = aqq + t * apq;
          at(p, q) = 0.0;
          at(q, p) = 0.0;
          for (int k = 0; k < n; ++k) {
            if (k == p || k == q) continue;
            const double akp = at(k, p), akq = at(k, q);
            at(k, p) = c * akp - s * akq;
            at(p, k) = at(k, p);
            at(k, q) = s * akp + c * akq;
            at(q, k) = at(k, q);
          }
        }
      if (sweep == 99 && !converged) throw NoConvergence("sym_eigen: 100 Jacobi sweeps exhausted");
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
  return Spectrum::from_values(std::move(eig), merge_tol);
}

}  // namespace coronae
