#include "bcfwt/fwt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bcfwt/parallel.hpp"

namespace bcfwt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

void check_finite(std::span<const cplx> values, const char* what) {
  for (const cplx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalError(std::string(what) + ": non-finite transform value");
    }
  }
}

// e^{-s|w|^2/4}
double quarter_gaussian(double sigma, cplx w) { return std::exp(-0.25 * sigma * std::norm(w)); }

double rel_change(cplx a, cplx b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

PhasePoint2D phase_point(const Bicomplex& Z) {
  return {{Z.z1().real(), Z.z2().real()}, {Z.z1().imag(), Z.z2().imag()}};
}

TensorRule transform_rule_1d(Scale sigma, const QuadratureOrders& orders) {
  return TensorRule(1, orders.order1d, 1.0 / std::sqrt(sigma.value()), orders.force);
}

TensorRule transform_rule_2d(Scale sigma, const QuadratureOrders& orders) {
  return TensorRule(2, orders.order2d, 1.0 / std::sqrt(sigma.value()), orders.force);
}

TensorRule phase_space_rule(Scale sigma, const QuadratureOrders& orders) {
  return TensorRule(4, orders.order4d, std::sqrt(2.0 / sigma.value()), orders.force);
}

ReportConfig report_config(Scale sigma, const QuadratureOrders& orders, std::vector<int> indices) {
  return {sigma.value(), orders.order1d, orders.order2d, orders.order4d, std::move(indices)};
}

RealFn hermite_fn(int n, Scale sigma) {
  return [n, sigma](double t) { return cplx(hermite_real(n, sigma, t)); };
}

BCFunction1D elementary(int m, int n, Scale sigma) {
  return {hermite_fn(m, sigma), hermite_fn(n, sigma)};
}

PlaneFn complex_hermite_fn(HermiteIndex idx, Scale sigma) {
  return [idx, sigma](double u, double v) { return hermite_complex(idx, sigma, cplx(u, v)); };
}

// ---- classical transforms ----------------------------------------------

std::vector<cplx> fwt1d_grid(const RealFn& f, const RealFn& g, Scale sigma,
                             std::span<const double> ps, std::span<const double> qs,
                             const TensorRule& rule) {
  if (rule.dim() != 1) throw std::invalid_argument("fwt1d: expected a 1-d rule");
  const double s = sigma.value();
  const double pref = std::sqrt(s / (2.0 * kPi));
  const auto& t = rule.base().nodes();
  const double scale = rule.scale(0);
  const std::size_t n = t.size();
  const std::size_t nq = qs.size();

  // x - p/2 = scale * t_k for every p once the rule sits at p/2.
  std::vector<cplx> phase(nq * n);
  for (std::size_t k = 0; k < nq; ++k)
    for (std::size_t i = 0; i < n; ++i) phase[k * n + i] = std::exp(kI * (s * scale * t[i] * qs[k]));

  std::vector<cplx> out(ps.size() * nq);
  parallel_for(ps.size(), [&](std::size_t b, std::size_t e) {
    std::vector<cplx> a(n), terms(n);
    for (std::size_t j = b; j < e; ++j) {
      const double p = ps[j];
      const TensorRule r = rule.centered_at({0.5 * p, 0, 0, 0});
      const auto x = r.axis_points(0);
      const auto w = r.axis_weights(0);
      for (std::size_t i = 0; i < n; ++i) a[i] = w[i] * f(x[i]) * std::conj(g(x[i] - p));
      for (std::size_t k = 0; k < nq; ++k) {
        for (std::size_t i = 0; i < n; ++i) terms[i] = a[i] * phase[k * n + i];
        out[j * nq + k] = pref * pairwise_sum(terms);
      }
    }
  });
  check_finite(out, "fwt1d");
  return out;
}

cplx fwt1d(const RealFn& f, const RealFn& g, Scale sigma, PhasePoint1D pt, const TensorRule& rule) {
  const double p = pt.p;
  const double q = pt.q;
  return fwt1d_grid(f, g, sigma, {&p, 1}, {&q, 1}, rule).front();
}

double fwt1d_envelope_drift(const RealFn& f, const RealFn& g, Scale sigma, PhasePoint1D pt,
                            const TensorRule& rule) {
  const int doubled = std::min(kMaxOrder, 2 * rule.order());
  return rel_change(fwt1d(f, g, sigma, pt, rule), fwt1d(f, g, sigma, pt, rule.with_order(doubled)));
}

cplx fwt1d_hermite_closed(int m, int n, Scale sigma, PhasePoint1D pt) {
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::ldexp(1.0, m + n) / std::sqrt(2.0) *
         hermite_complex(HermiteIndex(m, n), sigma.half(), pt.z());
}

std::vector<cplx> fwt2d_grid(const PlaneFn& f, const PlaneFn& g, Scale sigma,
                             const GridAxes& axes, const TensorRule& rule2d) {
  if (rule2d.dim() != 2) throw std::invalid_argument("fwt2d: expected a 2-d rule");
  const double s = sigma.value();
  const double pref = 1.0 / std::sqrt(2.0 * kPi);
  const auto& t = rule2d.base().nodes();
  const std::size_t n = t.size();
  const auto& x1s = axes.axis[0];
  const auto& y1s = axes.axis[1];
  const auto& x2s = axes.axis[2];
  const auto& y2s = axes.axis[3];
  const std::size_t n1 = y1s.size();
  const std::size_t n3 = y2s.size();

  std::vector<cplx> e1(n1 * n), e2(n3 * n);
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t i = 0; i < n; ++i)
      e1[b * n + i] = std::exp(kI * (s * rule2d.scale(0) * t[i] * y1s[b]));
  for (std::size_t d = 0; d < n3; ++d)
    for (std::size_t k = 0; k < n; ++k)
      e2[d * n + k] = std::exp(kI * (s * rule2d.scale(1) * t[k] * y2s[d]));

  std::vector<cplx> out(axes.size());
  const std::size_t pairs = x1s.size() * x2s.size();
  parallel_for(pairs, [&](std::size_t pb, std::size_t pe) {
    std::vector<cplx> A(n * n), B(n * n3);
    for (std::size_t pc = pb; pc < pe; ++pc) {
      const std::size_t a = pc / x2s.size();
      const std::size_t c = pc % x2s.size();
      const double x1 = x1s[a];
      const double x2 = x2s[c];
      const TensorRule r = rule2d.centered_at({0.5 * x1, 0.5 * x2, 0, 0});
      const auto u1 = r.axis_points(0);
      const auto u2 = r.axis_points(1);
      const auto w1 = r.axis_weights(0);
      const auto w2 = r.axis_weights(1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          A[i * n + k] = w1[i] * w2[k] * f(u1[i], u2[k]) * std::conj(g(u1[i] - x1, u2[k] - x2));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t d = 0; d < n3; ++d) {
          cplx acc = 0.0;
          for (std::size_t k = 0; k < n; ++k) acc += A[i * n + k] * e2[d * n + k];
          B[i * n3 + d] = acc;
        }
      for (std::size_t b = 0; b < n1; ++b)
        for (std::size_t d = 0; d < n3; ++d) {
          cplx acc = 0.0;
          for (std::size_t i = 0; i < n; ++i) acc += e1[b * n + i] * B[i * n3 + d];
          out[((a * n1 + b) * x2s.size() + c) * n3 + d] = pref * acc;
        }
    }
  });
  check_finite(out, "fwt2d");
  return out;
}

cplx fwt2d(const PlaneFn& f, const PlaneFn& g, Scale sigma, const PhasePoint2D& pt,
           const TensorRule& rule2d) {
  GridAxes axes;
  axes.axis = {std::vector<double>{pt.X[0]}, std::vector<double>{pt.Y[0]},
               std::vector<double>{pt.X[1]}, std::vector<double>{pt.Y[1]}};
  return fwt2d_grid(f, g, sigma, axes, rule2d).front();
}

// ---- bicomplex transforms ------------------------------------------------

GridSamples sample_fwt_bc_1d(const BCFunction1D& phi, const BCFunction1D& psi, Scale sigma,
                             const GridAxes& axes, const TensorRule& rule1d) {
  const double s = sigma.value();
  const double pref = std::sqrt(2.0 * s / kPi);
  const auto vp = fwt1d_grid(phi.plus, psi.plus, sigma, axes.axis[0], axes.axis[1], rule1d);
  const auto vm = fwt1d_grid(phi.minus, psi.minus, sigma, axes.axis[2], axes.axis[3], rule1d);
  const std::size_t n1 = axes.axis[1].size();
  const std::size_t n2 = axes.axis[2].size();
  const std::size_t n3 = axes.axis[3].size();
  GridSamples out;
  out.plus.resize(axes.size());
  out.minus.resize(axes.size());
  std::size_t idx = 0;
  for (std::size_t a = 0; a < axes.axis[0].size(); ++a)
    for (std::size_t b = 0; b < n1; ++b) {
      const double gp = quarter_gaussian(s, cplx(axes.axis[0][a], axes.axis[1][b]));
      for (std::size_t c = 0; c < n2; ++c)
        for (std::size_t d = 0; d < n3; ++d, ++idx) {
          const double gm = quarter_gaussian(s, cplx(axes.axis[2][c], axes.axis[3][d]));
          out.plus[idx] = pref * gm * vp[a * n1 + b];
          out.minus[idx] = pref * gp * vm[c * n3 + d];
        }
    }
  return out;
}

Bicomplex fwt_bc_1d(const BCFunction1D& phi, const BCFunction1D& psi, Scale sigma,
                    const Bicomplex& Z, const TensorRule& rule1d) {
  GridAxes axes;
  axes.axis = {std::vector<double>{Z.z1().real()}, std::vector<double>{Z.z1().imag()},
               std::vector<double>{Z.z2().real()}, std::vector<double>{Z.z2().imag()}};
  const auto v = sample_fwt_bc_1d(phi, psi, sigma, axes, rule1d);
  return Bicomplex::from_idempotent(v.plus[0], v.minus[0]);
}

Bicomplex fwt_bc_1d_direct(const BCFunction1D& phi, const BCFunction1D& psi, Scale sigma,
                           const Bicomplex& Z, const TensorRule& rule1d,
                           ModulationReading reading) {
  if (rule1d.dim() != 1) throw std::invalid_argument("fwt_bc_1d_direct: expected a 1-d rule");
  const double s = sigma.value();
  const double x1 = Z.z1().real(), y1 = Z.z1().imag();
  const double x2 = Z.z2().real(), y2 = Z.z2().imag();
  const Bicomplex Xe = Bicomplex::from_hyperbolic({x1, x2});
  const Bicomplex Ye = Bicomplex::from_hyperbolic({y1, y2});
  const Bicomplex Xd = Bicomplex::from_hyperbolic(hyperbolic_dagger({x1, x2}));
  const Bicomplex Yd = Bicomplex::from_hyperbolic(hyperbolic_dagger({y1, y2}));

  // One rule for both components, halfway between their translates.
  const TensorRule r = rule1d.centered_at({0.25 * (x1 + x2), 0, 0, 0});
  const auto t = r.axis_points(0);
  const auto w = r.axis_weights(0);
  std::vector<cplx> c1(t.size()), c2(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Bicomplex phase = exp(s * kI * ((Bicomplex(t[k]) - 0.5 * Xe) * Ye));
    const Bicomplex shifted =
        Bicomplex::from_idempotent(psi.plus(t[k] - x1), psi.minus(t[k] - x2));
    const Bicomplex window = reading == ModulationReading::literal ? phase * shifted.star()
                                                                   : (phase * shifted).star();
    const Bicomplex v = w[k] * (Bicomplex::from_idempotent(phi.plus(t[k]), phi.minus(t[k])) * window);
    c1[k] = v.z1();
    c2[k] = v.z2();
  }
  const Bicomplex integral(pairwise_sum(c1), pairwise_sum(c2));
  const Bicomplex gauss = exp(-0.25 * s * (Xd * Xd + Yd * Yd));
  const Bicomplex out = (s / kPi) * (gauss * integral);
  check_finite(std::array<cplx, 2>{out.z1(), out.z2()}, "fwt_bc_1d_direct");
  return out;
}

DirectComparison compare_direct(const BCFunction1D& phi, const BCFunction1D& psi, Scale sigma,
                                const Bicomplex& Z, const TensorRule& rule1d,
                                ModulationReading reading, double floor) {
  DirectComparison c;
  c.direct = fwt_bc_1d_direct(phi, psi, sigma, Z, rule1d, reading);
  c.normative = fwt_bc_1d(phi, psi, sigma, Z, rule1d);
  const auto d = c.direct.to_idempotent();
  const auto n = c.normative.to_idempotent();
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  c.ratio_plus = std::abs(n.beta_plus) >= floor ? d.beta_plus / n.beta_plus : cplx(nan, nan);
  c.ratio_minus = std::abs(n.beta_minus) >= floor ? d.beta_minus / n.beta_minus : cplx(nan, nan);
  return c;
}

Bicomplex fwt_bc_1d_hermite(int m, int n, int r, int s, Scale sigma, const Bicomplex& Z) {
  const double sg = sigma.value();
  const Companion c = companion(Z);
  const double pref = std::sqrt(sg / kPi);
  const double sign_r = (r % 2 == 0) ? 1.0 : -1.0;
  const double sign_s = (s % 2 == 0) ? 1.0 : -1.0;
  const cplx plus = pref * sign_r * std::ldexp(1.0, m + r) * quarter_gaussian(sg, c.w_minus) *
                    hermite_complex(HermiteIndex(m, r), sigma.half(), c.w_plus);
  const cplx minus = pref * sign_s * std::ldexp(1.0, n + s) * quarter_gaussian(sg, c.w_plus) *
                     hermite_complex(HermiteIndex(n, s), sigma.half(), c.w_minus);
  return Bicomplex::from_idempotent(plus, minus);
}

GridSamples sample_fwt_bc_2d(const BCFunction2D& phi, const BCFunction2D& psi, Scale sigma,
                             const GridAxes& axes, const TensorRule& rule2d) {
  GridSamples out;
  out.plus = fwt2d_grid(phi.plus, psi.plus, sigma, axes, rule2d);
  out.minus = fwt2d_grid(phi.minus, psi.minus, sigma, axes, rule2d);
  return out;
}

Bicomplex fwt_bc_2d(const BCFunction2D& phi, const BCFunction2D& psi, Scale sigma,
                    const Bicomplex& Z, const TensorRule& rule2d) {
  const PhasePoint2D pt = phase_point(Z);
  return Bicomplex::from_idempotent(fwt2d(phi.plus, psi.plus, sigma, pt, rule2d),
                                    fwt2d(phi.minus, psi.minus, sigma, pt, rule2d));
}

Bicomplex fwt_bc_2d_direct(const BCFunction2D& phi, const BCFunction2D& psi, Scale sigma,
                           const Bicomplex& Z, const TensorRule& rule2d) {
  if (rule2d.dim() != 2) throw std::invalid_argument("fwt_bc_2d_direct: expected a 2-d rule");
  const double s = sigma.value();
  const PhasePoint2D pt = phase_point(Z);
  const TensorRule r = rule2d.centered_at({0.5 * pt.X[0], 0.5 * pt.X[1], 0, 0});
  const auto u = r.axis_points(0);
  const auto v = r.axis_points(1);
  const auto wu = r.axis_weights(0);
  const auto wv = r.axis_weights(1);
  const std::size_t n = u.size();
  std::vector<cplx> c1(n * n), c2(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double ip = (u[i] - 0.5 * pt.X[0]) * pt.Y[0] + (v[k] - 0.5 * pt.X[1]) * pt.Y[1];
      // nu e+ + mu e- is the scalar i once both planes are realized as C.
      const Bicomplex phase = exp(Bicomplex(kI * (s * ip)));
      const Bicomplex f = phi(u[i], v[k]);
      const Bicomplex g = psi(u[i] - pt.X[0], v[k] - pt.X[1]);
      const Bicomplex val = wu[i] * wv[k] * (phase * f * g.star());
      c1[i * n + k] = val.z1();
      c2[i * n + k] = val.z2();
    }
  return (1.0 / std::sqrt(2.0 * kPi)) * Bicomplex(pairwise_sum(c1), pairwise_sum(c2));
}

// ---- Moyal identities ----------------------------------------------------

double scalar_norm_sq(const Bicomplex& self_inner) {
  return modulus_sq(as_hyperbolic(self_inner));
}

namespace {

// max over components of the product of the four input norms
double moyal_reference(const Bicomplex& a, const Bicomplex& b, const Bicomplex& c,
                       const Bicomplex& d) {
  auto comp = [](const Bicomplex& z, bool plus) {
    const auto p = z.to_idempotent();
    return std::sqrt(std::abs(plus ? p.beta_plus : p.beta_minus));
  };
  const double rp = comp(a, true) * comp(b, true) * comp(c, true) * comp(d, true);
  const double rm = comp(a, false) * comp(b, false) * comp(c, false) * comp(d, false);
  return std::max(rp, rm);
}

}  // namespace

IdentityReport moyal_check_1d(const BCFunction1D& phi1, const BCFunction1D& psi1,
                              const BCFunction1D& phi2, const BCFunction1D& psi2, Scale sigma,
                              const TensorRule& rule4d, const TensorRule& rule1d) {
  const GridAxes axes = axes_of(rule4d);
  const auto a = sample_fwt_bc_1d(phi1, psi1, sigma, axes, rule1d);
  const auto b = sample_fwt_bc_1d(phi2, psi2, sigma, axes, rule1d);
  const Bicomplex lhs = inner_product_samples(rule4d, a, b, Measure::bicomplex);
  const Bicomplex rhs =
      inner_product_bc_1d(phi1, phi2, rule1d) * inner_product_bc_1d(psi1, psi2, rule1d);
  const double ref = moyal_reference(
      inner_product_bc_1d(phi1, phi1, rule1d), inner_product_bc_1d(phi2, phi2, rule1d),
      inner_product_bc_1d(psi1, psi1, rule1d), inner_product_bc_1d(psi2, psi2, rule1d));
  ReportConfig cfg{sigma.value(), rule1d.order(), 0, rule4d.order(), {}};
  return make_report("moyal1d", lhs, rhs, cfg, 1.0, ref);
}

double moyal_2d_constant(Scale sigma) {
  return kBicomplexMeasureFactor * 2.0 * kPi / (sigma.value() * sigma.value());
}

IdentityReport moyal_check_2d(const BCFunction2D& phi1, const BCFunction2D& psi1,
                              const BCFunction2D& phi2, const BCFunction2D& psi2, Scale sigma,
                              const TensorRule& rule4d, const TensorRule& rule2d) {
  const GridAxes axes = axes_of(rule4d);
  const auto a = sample_fwt_bc_2d(phi1, psi1, sigma, axes, rule2d);
  const auto b = sample_fwt_bc_2d(phi2, psi2, sigma, axes, rule2d);
  const Bicomplex lhs = inner_product_samples(rule4d, a, b, Measure::bicomplex);
  const Bicomplex rhs =
      inner_product_bc_2d(phi1, phi2, rule2d) * inner_product_bc_2d(psi1, psi2, rule2d);
  const double k = moyal_2d_constant(sigma);
  const double ref =
      k * moyal_reference(inner_product_bc_2d(phi1, phi1, rule2d), inner_product_bc_2d(phi2, phi2, rule2d),
                          inner_product_bc_2d(psi1, psi1, rule2d), inner_product_bc_2d(psi2, psi2, rule2d));
  ReportConfig cfg{sigma.value(), 0, rule2d.order(), rule4d.order(), {}};
  return make_report("moyal2d", lhs, rhs, cfg, k, ref);
}

}  // namespace bcfwt
