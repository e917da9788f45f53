#include "bcfwt/hermite.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "bcfwt/quadrature.hpp"

namespace bcfwt {

namespace {

// exp(-x) underflows to subnormals past ~708.
constexpr double kGaussianExponentLimit = 700.0;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

HermiteValue hermite_real_checked(int n, Scale sigma, double t) {
  if (n < 0) throw std::invalid_argument("hermite_real: negative order");
  const double s = sigma.value();
  const double u = std::sqrt(s) * t;
  if (0.5 * u * u > kGaussianExponentLimit) return {0.0, true};
  // psi_k = H_k(u) exp(-u^2/2), physicists' recurrence.
  double prev = 0.0;
  double cur = std::exp(-0.5 * u * u);
  for (int k = 0; k < n; ++k) {
    const double next = 2.0 * u * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return {std::pow(s, 0.5 * n) * cur, false};
}

double hermite_real(int n, Scale sigma, double t) { return hermite_real_checked(n, sigma, t).value; }

double hermite_real_norm_sq(int n, Scale sigma) {
  if (n < 0) throw std::invalid_argument("hermite_real_norm_sq: negative order");
  const double s = sigma.value();
  return std::sqrt(std::numbers::pi / s) * std::pow(2.0 * s, n) * factorial(n);
}

cplx hermite_complex_poly(HermiteIndex idx, Scale alpha, cplx z) {
  const double a = alpha.value();
  const cplx zb = std::conj(z);
  const int rows = idx.m + 1;
  const int cols = idx.n + 1;
  // Stack storage covers the default max order; larger tables go to the heap.
  std::array<cplx, (kDefaultMaxOrder + 1) * (kDefaultMaxOrder + 1)> small;
  std::vector<cplx> large;
  cplx* g = small.data();
  if (rows * cols > static_cast<int>(small.size())) {
    large.resize(static_cast<std::size_t>(rows * cols));
    g = large.data();
  }
  auto at = [&](int i, int k) -> cplx& { return g[i * cols + k]; };
  at(0, 0) = 1.0;
  for (int i = 1; i < rows; ++i) at(i, 0) = a * z * at(i - 1, 0);
  for (int i = 0; i < rows; ++i) {
    for (int k = 1; k < cols; ++k) {
      cplx v = a * zb * at(i, k - 1);
      if (i > 0) v -= a * double(i) * at(i - 1, k - 1);
      at(i, k) = v;
    }
  }
  return at(idx.m, idx.n);
}

cplx hermite_complex(HermiteIndex idx, Scale alpha, cplx z) {
  const double e = 0.5 * alpha.value() * std::norm(z);
  if (e > kGaussianExponentLimit) return 0.0;
  return hermite_complex_poly(idx, alpha, z) * std::exp(-e);
}

double hermite_complex_norm_sq_at(HermiteIndex idx, Scale alpha, int order) {
  // |h|^2 carries exp(-a|z|^2); scale 1/sqrt(a) matches it exactly.
  const TensorRule rule(2, order, 1.0 / std::sqrt(alpha.value()));
  const PlaneFn sq = [&](double x, double y) {
    return cplx(std::norm(hermite_complex(idx, alpha, cplx(x, y))));
  };
  return integrate(rule, sq).real();
}

double hermite_complex_norm_sq(HermiteIndex idx, Scale alpha) {
  using Key = std::tuple<int, int, double>;
  static std::shared_mutex mu;
  static std::map<Key, double> cache;
  const Key key{idx.m, idx.n, alpha.value()};
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double v = hermite_complex_norm_sq_at(idx, alpha, 64);
  std::unique_lock lock(mu);
  cache.emplace(key, v);
  return cache.at(key);
}

}  // namespace bcfwt
