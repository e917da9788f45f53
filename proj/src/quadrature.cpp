#include "bcfwt/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "bcfwt/parallel.hpp"

namespace bcfwt {

namespace {

// Orthonormal Hermite functions phi_k(x) = p_k(x) exp(-x^2/2), k = n-1 and n.
struct HermitePair {
  double prev;  // phi_{n-1}
  double last;  // phi_n
  double sum_sq;  // sum_{k<n} phi_k^2
};

HermitePair orthonormal_hermite(int n, double x) {
  double prev = 0.0;
  double cur = std::exp(-0.5 * x * x) / std::pow(std::numbers::pi, 0.25);
  double sum_sq = 0.0;
  for (int k = 0; k < n; ++k) {
    sum_sq += cur * cur;
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {prev, cur, sum_sq};
}

void check_finite(cplx v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NumericalError(std::string(what) + ": non-finite value in quadrature");
  }
}

}  // namespace

QuadratureRule QuadratureRule::gauss_hermite(int order) {
  if (order < kMinOrder || order > kMaxOrder) {
    throw std::out_of_range("gauss_hermite: order must lie in [2, 256], got " +
                            std::to_string(order));
  }
  const int n = order;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  std::vector<double> x(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  for (double& xi : x) {
    for (int it = 0; it < 3; ++it) {
      const auto h = orthonormal_hermite(n, xi);
      xi -= h.last / (std::sqrt(2.0 * n) * h.prev);
    }
  }
  std::sort(x.begin(), x.end());
  for (int i = 0; i < n / 2; ++i) {
    const double a = 0.5 * (x[n - 1 - i] - x[i]);
    x[i] = -a;
    x[n - 1 - i] = a;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;

  QuadratureRule rule;
  rule.nodes_ = x;
  rule.weights_.resize(n);
  rule.scaled_weights_.resize(n);
  for (int i = 0; i < n; ++i) {
    const double sw = 1.0 / orthonormal_hermite(n, x[i]).sum_sq;
    rule.scaled_weights_[i] = sw;
    rule.weights_[i] = sw * std::exp(-x[i] * x[i]);
  }
  return rule;
}

std::shared_ptr<const QuadratureRule> gauss_hermite_rule(int order) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto rule = std::make_shared<const QuadratureRule>(QuadratureRule::gauss_hermite(order));
  cache.emplace(order, rule);
  return rule;
}

double measure_factor(Measure m) {
  return m == Measure::bicomplex ? kBicomplexMeasureFactor : 1.0;
}

TensorRule::TensorRule(int dim, int order, double scale, bool force)
    : TensorRule(dim, order, std::array<double, 4>{scale, scale, scale, scale}, force) {}

TensorRule::TensorRule(int dim, int order, std::array<double, 4> scales, bool force)
    : dim_(dim), scale_(scales), force_(force) {
  if (dim != 1 && dim != 2 && dim != 4) {
    throw std::invalid_argument("TensorRule: dim must be 1, 2 or 4");
  }
  for (int a = 0; a < dim; ++a) {
    if (!(scales[a] > 0.0)) throw std::invalid_argument("TensorRule: scales must be positive");
  }
  if (order < kMinOrder || order > kMaxOrder) {
    throw std::out_of_range("TensorRule: order must lie in [2, 256], got " +
                            std::to_string(order));
  }
  const double nodes = std::pow(double(order), dim);
  if (!force && nodes > double(kNodeBudget)) {
    throw std::length_error("TensorRule: " + std::to_string(order) + "^" + std::to_string(dim) +
                            " nodes exceeds the 2^26 budget (use --force)");
  }
  base_ = gauss_hermite_rule(order);
}

std::size_t TensorRule::node_count() const {
  std::size_t n = 1;
  for (int a = 0; a < dim_; ++a) n *= static_cast<std::size_t>(order());
  return n;
}

TensorRule TensorRule::centered_at(std::array<double, 4> centers) const {
  TensorRule r = *this;
  r.center_ = centers;
  return r;
}

TensorRule TensorRule::with_order(int order) const {
  TensorRule r(dim_, order, scale_, force_);
  r.center_ = center_;
  return r;
}

std::vector<double> TensorRule::axis_points(int axis) const {
  const auto& u = base_->nodes();
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = center_.at(axis) + scale_.at(axis) * u[i];
  return out;
}

std::vector<double> TensorRule::axis_weights(int axis) const {
  const auto& w = base_->scaled_weights();
  std::vector<double> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = scale_.at(axis) * w[i];
  return out;
}

cplx integrate(const TensorRule& rule, const RealFn& f) {
  if (rule.dim() != 1) throw std::invalid_argument("integrate: expected a 1-d rule");
  const auto x = rule.axis_points(0);
  const auto w = rule.axis_weights(0);
  std::vector<cplx> terms(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) terms[i] = w[i] * f(x[i]);
  const cplx s = pairwise_sum(terms);
  check_finite(s, "integrate");
  return s;
}

cplx integrate(const TensorRule& rule, const PlaneFn& f) {
  if (rule.dim() != 2) throw std::invalid_argument("integrate: expected a 2-d rule");
  const auto u = rule.axis_points(0);
  const auto v = rule.axis_points(1);
  const auto wu = rule.axis_weights(0);
  const auto wv = rule.axis_weights(1);
  const std::size_t n = u.size();
  std::vector<cplx> terms(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) terms[i * n + j] = wu[i] * wv[j] * f(u[i], v[j]);
  }
  const cplx s = pairwise_sum(terms);
  check_finite(s, "integrate");
  return s;
}

cplx inner_product_L2R(const RealFn& f, const RealFn& g, const TensorRule& rule) {
  return integrate(rule, RealFn([&](double t) { return f(t) * std::conj(g(t)); }));
}

cplx inner_product_L2R2(const PlaneFn& f, const PlaneFn& g, const TensorRule& rule) {
  return integrate(rule,
                   PlaneFn([&](double u, double v) { return f(u, v) * std::conj(g(u, v)); }));
}

Bicomplex inner_product_bc_1d(const BCFunction1D& phi, const BCFunction1D& psi,
                              const TensorRule& rule) {
  return Bicomplex::from_idempotent(inner_product_L2R(phi.plus, psi.plus, rule),
                                    inner_product_L2R(phi.minus, psi.minus, rule));
}

Bicomplex inner_product_bc_2d(const BCFunction2D& phi, const BCFunction2D& psi,
                              const TensorRule& rule) {
  return Bicomplex::from_idempotent(inner_product_L2R2(phi.plus, psi.plus, rule),
                                    inner_product_L2R2(phi.minus, psi.minus, rule));
}

Bicomplex GridAxes::point(std::size_t index) const {
  const std::size_t d = index % axis[3].size();
  index /= axis[3].size();
  const std::size_t c = index % axis[2].size();
  index /= axis[2].size();
  const std::size_t b = index % axis[1].size();
  const std::size_t a = index / axis[1].size();
  return {cplx(axis[0][a], axis[1][b]), cplx(axis[2][c], axis[3][d])};
}

GridAxes axes_of(const TensorRule& rule) {
  if (rule.dim() != 4) throw std::invalid_argument("axes_of: expected a 4-d rule");
  GridAxes g;
  for (int a = 0; a < 4; ++a) g.axis[a] = rule.axis_points(a);
  return g;
}

std::vector<Bicomplex> grid_points(const GridAxes& axes) {
  std::vector<Bicomplex> pts;
  pts.reserve(axes.size());
  for (double x1 : axes.axis[0])
    for (double y1 : axes.axis[1])
      for (double x2 : axes.axis[2])
        for (double y2 : axes.axis[3]) pts.emplace_back(cplx(x1, y1), cplx(x2, y2));
  return pts;
}

std::vector<Bicomplex> grid_points_4d(const TensorRule& rule) { return grid_points(axes_of(rule)); }

GridSamples sample_grid(const GridAxes& axes, const BicomplexFn& f) {
  const auto pts = grid_points(axes);
  GridSamples out;
  out.plus.resize(pts.size());
  out.minus.resize(pts.size());
  parallel_for(pts.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto v = f(pts[i]).to_idempotent();
      out.plus[i] = v.beta_plus;
      out.minus[i] = v.beta_minus;
    }
  });
  return out;
}

GridSamples sample_4d(const TensorRule& rule, const BicomplexFn& f) {
  return sample_grid(axes_of(rule), f);
}

Bicomplex inner_product_samples(const TensorRule& rule, const GridSamples& f,
                                const GridSamples& g, Measure measure) {
  if (rule.dim() != 4) throw std::invalid_argument("inner_product_samples: expected a 4-d rule");
  const std::size_t total = rule.node_count();
  if (f.size() != total || g.size() != total) {
    throw std::invalid_argument("inner_product_samples: sample count does not match the rule");
  }
  const std::size_t n = static_cast<std::size_t>(rule.order());
  const auto w0 = rule.axis_weights(0);
  const auto w1 = rule.axis_weights(1);
  const auto w2 = rule.axis_weights(2);
  const auto w3 = rule.axis_weights(3);
  std::vector<cplx> tp(total), tm(total);
  parallel_for(n, [&](std::size_t ab, std::size_t ae) {
    for (std::size_t a = ab; a < ae; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d) {
            const std::size_t i = ((a * n + b) * n + c) * n + d;
            const double w = w0[a] * w1[b] * w2[c] * w3[d];
            tp[i] = w * f.plus[i] * std::conj(g.plus[i]);
            tm[i] = w * f.minus[i] * std::conj(g.minus[i]);
          }
  });
  const double mf = measure_factor(measure);
  const cplx sp = mf * pairwise_sum(tp);
  const cplx sm = mf * pairwise_sum(tm);
  check_finite(sp, "inner_product_samples");
  check_finite(sm, "inner_product_samples");
  return Bicomplex::from_idempotent(sp, sm);
}

Bicomplex inner_product_bc_c2(const BicomplexFn& f, const BicomplexFn& g, const TensorRule& rule,
                              Measure measure) {
  return inner_product_samples(rule, sample_4d(rule, f), sample_4d(rule, g), measure);
}

namespace {

int doubled_order(const TensorRule& rule) { return std::min(kMaxOrder, 2 * rule.order()); }

double relative_drift(cplx a, cplx b) {
  const double denom = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / denom;
}

}  // namespace

double square_integrability_drift(const RealFn& f, const TensorRule& rule) {
  const RealFn sq = [&](double t) { return cplx(std::norm(f(t))); };
  return relative_drift(integrate(rule, sq), integrate(rule.with_order(doubled_order(rule)), sq));
}

double square_integrability_drift(const PlaneFn& f, const TensorRule& rule) {
  const PlaneFn sq = [&](double u, double v) { return cplx(std::norm(f(u, v))); };
  return relative_drift(integrate(rule, sq), integrate(rule.with_order(doubled_order(rule)), sq));
}

bool square_integrable(const BCFunction1D& f, const TensorRule& rule, double tol) {
  return square_integrability_drift(f.plus, rule) <= tol &&
         square_integrability_drift(f.minus, rule) <= tol;
}

bool square_integrable(const BCFunction2D& f, const TensorRule& rule, double tol) {
  return square_integrability_drift(f.plus, rule) <= tol &&
         square_integrability_drift(f.minus, rule) <= tol;
}

}  // namespace bcfwt
