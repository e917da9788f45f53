#pragma once

// Gauss-Hermite rules and tensor-product integration over R, R^2 and
// BC ~ R^4. Every integrand handled here is Gaussian-enveloped; a rule's
// per-axis scale s and center c map the weight exp(-u^2) onto
// exp(-((x - c)/s)^2), so that
//
//   int F(x) dx  ~=  sum_i  s * w_i * exp(u_i^2) * F(c + s u_i).

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "bcfwt/bicomplex.hpp"

namespace bcfwt {

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureRule {
 public:
  /// Nodes and weights for int f(x) exp(-x^2) dx, 2 <= order <= 256.
  /// Golub-Welsch eigenvalues of the Jacobi matrix, Newton-polished, with
  /// weights from the Christoffel sum of orthonormal Hermite functions.
  static QuadratureRule gauss_hermite(int order);

  [[nodiscard]] int order() const { return static_cast<int>(nodes_.size()); }
  [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<double>& weights() const { return weights_; }
  /// w_i * exp(u_i^2), accurate in the tails where w_i itself underflows.
  [[nodiscard]] const std::vector<double>& scaled_weights() const { return scaled_weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> scaled_weights_;
};

/// Process-wide cache of immutable rules.
std::shared_ptr<const QuadratureRule> gauss_hermite_rule(int order);

inline constexpr int kMinOrder = 2;
inline constexpr int kMaxOrder = 256;
inline constexpr std::size_t kNodeBudget = std::size_t{1} << 26;

/// Measure on BC ~ R^4. `bicomplex` is a quarter of Lebesgue measure in the
/// coordinates (x1, y1, x2, y2); it is the normalization under which the
/// bicomplex transforms are isometric.
enum class Measure { lebesgue, bicomplex };
inline constexpr double kBicomplexMeasureFactor = 0.25;
double measure_factor(Measure m);

class TensorRule {
 public:
  /// Refuses order^dim > kNodeBudget unless force is set.
  TensorRule(int dim, int order, double scale, bool force = false);
  TensorRule(int dim, int order, std::array<double, 4> scales, bool force = false);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int order() const { return base_->order(); }
  [[nodiscard]] const QuadratureRule& base() const { return *base_; }
  [[nodiscard]] double scale(int axis) const { return scale_.at(axis); }
  [[nodiscard]] double center(int axis) const { return center_.at(axis); }
  [[nodiscard]] bool forced() const { return force_; }
  [[nodiscard]] std::size_t node_count() const;

  [[nodiscard]] TensorRule centered_at(std::array<double, 4> centers) const;
  /// Same geometry, different order.
  [[nodiscard]] TensorRule with_order(int order) const;

  /// c + s u_i along one axis.
  [[nodiscard]] std::vector<double> axis_points(int axis) const;
  /// s * w_i * exp(u_i^2) along one axis.
  [[nodiscard]] std::vector<double> axis_weights(int axis) const;

 private:
  int dim_;
  std::shared_ptr<const QuadratureRule> base_;
  std::array<double, 4> scale_{1.0, 1.0, 1.0, 1.0};
  std::array<double, 4> center_{0.0, 0.0, 0.0, 0.0};
  bool force_ = false;
};

using RealFn = std::function<cplx(double)>;
using PlaneFn = std::function<cplx(double, double)>;
using BicomplexFn = std::function<Bicomplex(const Bicomplex&)>;

/// Bicomplex-valued signal on R given by its idempotent components.
struct BCFunction1D {
  RealFn plus;
  RealFn minus;

  static BCFunction1D scalar(RealFn f) { return {f, f}; }
  [[nodiscard]] Bicomplex operator()(double t) const {
    return Bicomplex::from_idempotent(plus(t), minus(t));
  }
};

/// Bicomplex-valued signal on R^2 given by its idempotent components.
struct BCFunction2D {
  PlaneFn plus;
  PlaneFn minus;

  static BCFunction2D scalar(PlaneFn f) { return {f, f}; }
  [[nodiscard]] Bicomplex operator()(double u, double v) const {
    return Bicomplex::from_idempotent(plus(u, v), minus(u, v));
  }
};

/// Samples of a bicomplex-valued function at the nodes of a 4-d tensor rule,
/// stored by idempotent component. Node (a, b, c, d) sits at
/// Z = (x1 + i y1) + j (x2 + i y2) with x1, y1, x2, y2 the points of axes
/// 0..3, flattened as ((a n + b) n + c) n + d.
struct GridSamples {
  std::vector<cplx> plus;
  std::vector<cplx> minus;

  [[nodiscard]] std::size_t size() const { return plus.size(); }
};

/// Product grid over the four real coordinates (x1, y1, x2, y2) of Z, with
/// point (a, b, c, d) flattened as ((a n1 + b) n2 + c) n3 + d.
struct GridAxes {
  std::array<std::vector<double>, 4> axis;

  [[nodiscard]] std::size_t size() const {
    return axis[0].size() * axis[1].size() * axis[2].size() * axis[3].size();
  }
  [[nodiscard]] Bicomplex point(std::size_t index) const;
};

/// Node coordinates of a 4-d rule as grid axes; sample order matches GridSamples.
GridAxes axes_of(const TensorRule& rule);
std::vector<Bicomplex> grid_points(const GridAxes& axes);
GridSamples sample_grid(const GridAxes& axes, const BicomplexFn& f);

cplx integrate(const TensorRule& rule, const RealFn& f);
cplx integrate(const TensorRule& rule, const PlaneFn& f);

/// int f(t) conj(g(t)) dt
cplx inner_product_L2R(const RealFn& f, const RealFn& g, const TensorRule& rule);
/// int f(U) conj(g(U)) dU over R^2
cplx inner_product_L2R2(const PlaneFn& f, const PlaneFn& g, const TensorRule& rule);

/// <phi+, psi+> e+ + <phi-, psi-> e-
Bicomplex inner_product_bc_1d(const BCFunction1D& phi, const BCFunction1D& psi,
                              const TensorRule& rule);
Bicomplex inner_product_bc_2d(const BCFunction2D& phi, const BCFunction2D& psi,
                              const TensorRule& rule);
/// int F(Z) G(Z)^* dmu(Z) over BC ~ R^4, the star acting as conjugation of the
/// idempotent components.
Bicomplex inner_product_bc_c2(const BicomplexFn& f, const BicomplexFn& g, const TensorRule& rule,
                              Measure measure = Measure::lebesgue);

GridSamples sample_4d(const TensorRule& rule, const BicomplexFn& f);
/// Node coordinates of a 4-d rule, in sample order.
std::vector<Bicomplex> grid_points_4d(const TensorRule& rule);
Bicomplex inner_product_samples(const TensorRule& rule, const GridSamples& f,
                                const GridSamples& g, Measure measure);

/// Relative change of int |f|^2 between rule.order() and 2*rule.order().
double square_integrability_drift(const RealFn& f, const TensorRule& rule);
double square_integrability_drift(const PlaneFn& f, const TensorRule& rule);
bool square_integrable(const BCFunction1D& f, const TensorRule& rule, double tol = 1e-6);
bool square_integrable(const BCFunction2D& f, const TensorRule& rule, double tol = 1e-6);

}  // namespace bcfwt
