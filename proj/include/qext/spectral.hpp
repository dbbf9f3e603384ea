#pragma once

// Q-index q(G): the largest eigenvalue of the signless Laplacian Q = D + A.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qext/graph.hpp"

namespace qext {

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

inline SymmetricMatrix signless_laplacian(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("signless Laplacian of the empty graph");
  SymmetricMatrix q(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    q(u, u) = static_cast<double>(g.degree(u));
    g.neighbors(u).for_each([&](std::size_t v) { q(u, v) = 1.0; });
  }
  return q;
}

enum class EigenMethod { power, dense };

inline std::string_view to_string(EigenMethod m) {
  return m == EigenMethod::power ? "power" : "dense";
}

struct SpectralResult {
  double q = 0.0;
  std::vector<double> vector;  // unit length
  double residual = 0.0;       // ||Q x - q x||_2
  std::size_t iterations = 0;
  EigenMethod method = EigenMethod::power;
};

/// Raised when power iteration exhausts its budget and no dense fallback applies.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(SpectralResult best)
      : std::runtime_error("Q-index iteration budget exhausted: q=" + std::to_string(best.q) +
                           " residual=" + std::to_string(best.residual)),
        best_(std::move(best)) {}
  const SpectralResult& best() const { return best_; }

 private:
  SpectralResult best_;
};

enum class Solver { automatic, power, dense };

inline constexpr std::size_t kDenseLimit = 64;

namespace detail {

inline void multiply_q(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (Vertex u = 0; u < g.order(); ++u) {
    double s = static_cast<double>(g.degree(u)) * x[u];
    g.neighbors(u).for_each([&](std::size_t v) { s += x[v]; });
    y[u] = s;
  }
}

inline double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

/// Rayleigh quotient and residual of a unit vector.
inline std::pair<double, double> rayleigh(const Graph& g, const std::vector<double>& x,
                                          std::vector<double>& y) {
  multiply_q(g, x, y);
  double rho = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
  double r2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = y[i] - rho * x[i];
    r2 += d * d;
  }
  return {rho, std::sqrt(r2)};
}

inline std::vector<double> start_vector(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t u = 0; u < n; ++u)
    x[u] = 1.0 + static_cast<double>(u) / (10.0 * static_cast<double>(n));
  double nx = norm2(x);
  for (auto& v : x) v /= nx;
  return x;
}

/// Power iteration from `x`; returns the last iterate whether or not it converged.
inline SpectralResult power_iterate(const Graph& g, std::vector<double> x, double tol,
                                    std::size_t max_iter, bool& converged) {
  const std::size_t n = g.order();
  std::vector<double> y(n);
  SpectralResult res;
  res.method = EigenMethod::power;
  converged = false;
  for (std::size_t it = 0;; ++it) {
    auto [rho, r] = rayleigh(g, x, y);
    res.q = rho;
    res.residual = r;
    res.iterations = it;
    if (r <= tol * std::max(1.0, rho)) {
      converged = true;
      break;
    }
    if (it >= max_iter) break;
    double ny = norm2(y);
    if (ny == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
  }
  res.vector = std::move(x);
  return res;
}

/// Cyclic Jacobi on Q; returns the top eigenpair with the sign fixed so the
/// entries sum to a nonnegative value.
inline SpectralResult jacobi_top(const Graph& g) {
  const std::size_t n = g.order();
  SymmetricMatrix a = signless_laplacian(g);
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
  const double target = 1e-12 * std::max(1.0, std::sqrt(frob));

  std::size_t sweeps = 0;
  for (; sweeps < 100; ++sweeps) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= target) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (a(i, i) > a(best, best)) best = i;
  std::vector<double> x(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = v[k * n + best];
    sum += x[k];
  }
  double nx = norm2(x);
  for (auto& e : x) e = (sum < 0 ? -e : e) / nx;

  std::vector<double> y(n);
  auto [rho, r] = rayleigh(g, x, y);
  SpectralResult res;
  res.q = rho;
  res.residual = r;
  res.vector = std::move(x);
  res.iterations = sweeps;
  res.method = EigenMethod::dense;
  return res;
}

}  // namespace detail

/// Dense route (cyclic Jacobi), limited to n <= kDenseLimit. A converged
/// Jacobi vector that misses `tol` is polished with a few power steps.
inline SpectralResult dense_q_index(const Graph& g, double tol = 1e-10) {
  if (g.order() == 0) throw std::invalid_argument("Q-index of the empty graph");
  if (g.order() > kDenseLimit)
    throw std::invalid_argument("dense eigensolver limited to order " +
                                std::to_string(kDenseLimit));
  SpectralResult res = detail::jacobi_top(g);
  if (res.residual > tol * std::max(1.0, res.q)) {
    bool converged = false;
    auto polished = detail::power_iterate(g, res.vector, tol, 1000, converged);
    if (polished.residual < res.residual) {
      polished.method = EigenMethod::dense;
      polished.iterations += res.iterations;
      res = std::move(polished);
    }
  }
  return res;
}

/// q(G) with residual <= tol * max(1, q).
///
/// automatic: power iteration; if the iteration cap (100 n + 10000) is hit
/// and n <= kDenseLimit the dense solver takes over.
inline SpectralResult q_index(const Graph& g, double tol = 1e-10, Solver solver = Solver::automatic) {
  if (g.order() == 0) throw std::invalid_argument("Q-index of the empty graph");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (solver == Solver::dense) {
    auto res = dense_q_index(g, tol);
    if (res.residual > tol * std::max(1.0, res.q)) throw ConvergenceError(res);
    return res;
  }
  const std::size_t cap = 100 * g.order() + 10000;
  bool converged = false;
  auto res = detail::power_iterate(g, detail::start_vector(g.order()), tol, cap, converged);
  if (converged) return res;
  if (solver == Solver::automatic && g.order() <= kDenseLimit) {
    auto dense = dense_q_index(g, tol);
    if (dense.residual <= tol * std::max(1.0, dense.q)) return dense;
  }
  throw ConvergenceError(std::move(res));
}

enum class Verdict { ge, lt, indeterminate };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ge: return "ge";
    case Verdict::lt: return "lt";
    default: return "indeterminate";
  }
}

struct Comparison {
  Verdict verdict = Verdict::indeterminate;
  double margin = 0.0;  // q - threshold
};

/// Threshold test against the interval [q - residual, q + residual].
inline Comparison certified_compare(const SpectralResult& r, double threshold) {
  Comparison c;
  c.margin = r.q - threshold;
  if (r.q - r.residual >= threshold)
    c.verdict = Verdict::ge;
  else if (r.q + r.residual < threshold)
    c.verdict = Verdict::lt;
  else
    c.verdict = Verdict::indeterminate;
  return c;
}

}  // namespace qext
