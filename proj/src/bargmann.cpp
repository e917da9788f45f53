#include "bcfwt/bargmann.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bcfwt/parallel.hpp"

namespace bcfwt {

namespace {

constexpr double kPi = std::numbers::pi;

double mixed_envelope(double sigma, const Companion& c) {
  return std::exp(-0.25 * sigma * (std::norm(c.w_plus) + std::norm(c.w_minus)));
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

Bicomplex phi_n(int n, Scale sigma, const Bicomplex& Z) {
  if (n < 0) throw std::invalid_argument("phi_n: negative index");
  const double s = sigma.value();
  const Companion c = companion(Z);
  const double pref = std::pow(s / kPi, 0.75) * std::pow(s, n) * mixed_envelope(s, c);
  return Bicomplex::from_idempotent(pref * std::pow(c.w_plus, n), pref * std::pow(c.w_minus, n));
}

Bicomplex kernel_K(Scale sigma, const Bicomplex& Z, const Bicomplex& W, KernelVariant variant) {
  const double s = sigma.value();
  const Companion z = companion(Z);
  const Companion w = companion(W);
  const double base = -0.5 * s * (companion_modulus_sq(z) + companion_modulus_sq(w));
  const double sign = variant == KernelVariant::corrected ? 1.0 : -1.0;
  return Bicomplex::from_idempotent(
      std::exp(base + sign * 0.5 * s * z.w_plus * std::conj(w.w_plus)),
      std::exp(base + sign * 0.5 * s * z.w_minus * std::conj(w.w_minus)));
}

double kernel_norm_sq(Scale sigma) { return kPi * kPi / (sigma.value() * sigma.value()); }

namespace {

double sn_prefactor(int n, Scale sigma) {
  const double s = sigma.value();
  return std::pow(s / kPi, 0.25) / std::sqrt(std::pow(2.0 * s, n) * factorial(n));
}

}  // namespace

Bicomplex transform_Sn(int n, const BCFunction1D& phi, Scale sigma, const Bicomplex& Z,
                       const TensorRule& rule1d) {
  return sn_prefactor(n, sigma) *
         fwt_bc_1d(phi, BCFunction1D::scalar(hermite_fn(n, sigma)), sigma, Z, rule1d);
}

GridSamples sample_Sn(int n, const BCFunction1D& phi, Scale sigma, const GridAxes& axes,
                      const TensorRule& rule1d) {
  auto out = sample_fwt_bc_1d(phi, BCFunction1D::scalar(hermite_fn(n, sigma)), sigma, axes, rule1d);
  const double pref = sn_prefactor(n, sigma);
  for (auto& v : out.plus) v *= pref;
  for (auto& v : out.minus) v *= pref;
  return out;
}

Bicomplex transform_S0_integral(const BCFunction1D& phi, Scale sigma, const Bicomplex& Z,
                                const TensorRule& rule1d) {
  const double s = sigma.value();
  const Companion c = companion(Z);
  auto component = [&](const RealFn& f, cplx w) {
    const TensorRule r = rule1d.centered_at({0.5 * w.real(), 0, 0, 0});
    return integrate(r, RealFn([&](double t) {
      return std::exp(-s * (t - 0.5 * w) * (t - 0.5 * w) + 0.5 * s * t * t) * f(t);
    }));
  };
  const double pref = (s / kPi) * mixed_envelope(s, c);
  return Bicomplex::from_idempotent(pref * component(phi.plus, c.w_plus),
                                    pref * component(phi.minus, c.w_minus));
}

double s0_integral_constant(Scale sigma) { return std::pow(kPi / sigma.value(), 0.25); }

Bicomplex psi_mn_polynomial(HermiteIndex idx, Scale sigma, const Bicomplex& Z) {
  const Companion c = companion(Z);
  return Bicomplex::from_idempotent(hermite_complex_poly(idx, sigma.half(), c.w_plus),
                                    hermite_complex_poly(idx, sigma.half(), c.w_minus));
}

Bicomplex psi_mn(HermiteIndex idx, Scale sigma, const Bicomplex& Z) {
  return mixed_envelope(sigma.value(), companion(Z)) * psi_mn_polynomial(idx, sigma, Z);
}

Bicomplex psi_mn_from_transform(HermiteIndex idx, Scale sigma, const Bicomplex& Z) {
  const double sign = (idx.n % 2 == 0) ? 1.0 : -1.0;
  const double pref = sign * std::ldexp(1.0, -(idx.m + idx.n)) * std::sqrt(kPi / sigma.value());
  return pref * fwt_bc_1d_hermite(idx.m, idx.m, idx.n, idx.n, sigma, Z);
}

Bicomplex psi_mn_printed(HermiteIndex idx, Scale sigma, const Bicomplex& Z) {
  const Companion c = companion(Z);
  return mixed_envelope(sigma.value(), c) *
         Bicomplex::from_idempotent(hermite_complex(idx, sigma.half(), c.w_plus),
                                    hermite_complex(idx, sigma.half(), c.w_minus));
}

FourIndex::FourIndex(int m_, int n_, int mp_, int np_, int max_order)
    : m(m_), n(n_), mp(mp_), np(np_) {
  for (int v : {m, n, mp, np}) {
    if (v < 0) throw std::invalid_argument("FourIndex: negative index");
    if (v > max_order) throw std::out_of_range("FourIndex: index above the configured max order");
  }
}

BCFunction2D complex_hermite_input(HermiteIndex idx, Scale sigma) {
  return BCFunction2D::scalar(complex_hermite_fn(idx, sigma));
}

Bicomplex four_index_basis(const FourIndex& idx, Scale sigma, const Bicomplex& Z,
                           const TensorRule& rule2d) {
  return fwt_bc_2d(complex_hermite_input(HermiteIndex(idx.m, idx.n), sigma),
                   complex_hermite_input(HermiteIndex(idx.mp, idx.np), sigma), sigma, Z, rule2d);
}

GridSamples sample_four_index(const FourIndex& idx, Scale sigma, const GridAxes& axes,
                              const TensorRule& rule2d) {
  // Both components carry the same input, so one grid serves both.
  const auto v = fwt2d_grid(complex_hermite_fn(HermiteIndex(idx.m, idx.n), sigma),
                            complex_hermite_fn(HermiteIndex(idx.mp, idx.np), sigma), sigma, axes,
                            rule2d);
  return {v, v};
}

Bicomplex strictness_witness(int m, int n, Scale sigma, const Bicomplex& Z) {
  if (m == n) throw std::invalid_argument("strictness_witness: indices must differ");
  if (m < 0 || n < 0) throw std::invalid_argument("strictness_witness: negative index");
  const double s = sigma.value();
  const Companion c = companion(Z);
  const double env = mixed_envelope(s, c);
  return Bicomplex::from_idempotent(env * std::pow(s, m) * std::pow(c.w_minus, m),
                                    env * std::pow(s, n) * std::pow(c.w_plus, n));
}

// ---- Gram systems ---------------------------------------------------------

GramMatrix gram_matrix(const std::vector<GridSamples>& fns, const TensorRule& rule4d,
                       Measure measure) {
  GramMatrix g;
  g.size = fns.size();
  g.entry.assign(g.size * g.size, Bicomplex{});
  std::vector<std::pair<std::size_t, std::size_t>> upper;
  for (std::size_t i = 0; i < g.size; ++i)
    for (std::size_t j = i; j < g.size; ++j) upper.emplace_back(i, j);
  parallel_for(upper.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      const auto [i, j] = upper[k];
      g.entry[i * g.size + j] = inner_product_samples(rule4d, fns[i], fns[j], measure);
    }
  });
  // <f_j, f_i> is the component-wise conjugate, i.e. the star.
  for (std::size_t i = 0; i < g.size; ++i)
    for (std::size_t j = 0; j < i; ++j) g.entry[i * g.size + j] = g.at(j, i).star();
  return g;
}

double normalized_gram_deviation(const GramMatrix& g) {
  std::vector<double> d(g.size);
  for (std::size_t i = 0; i < g.size; ++i) d[i] = scalar_norm_sq(g.at(i, i));
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size; ++i)
    for (std::size_t j = 0; j < g.size; ++j) {
      const Bicomplex n = (1.0 / std::sqrt(d[i] * d[j])) * g.at(i, j);
      worst = std::max(worst, coordinate_norm(n - Bicomplex(i == j ? 1.0 : 0.0)));
    }
  return worst;
}

namespace {

std::vector<double> component_weights(const TensorRule& rule4d) {
  const std::size_t n = static_cast<std::size_t>(rule4d.order());
  const auto w0 = rule4d.axis_weights(0), w1 = rule4d.axis_weights(1);
  const auto w2 = rule4d.axis_weights(2), w3 = rule4d.axis_weights(3);
  std::vector<double> w(rule4d.node_count());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) w[((a * n + b) * n + c) * n + d] = w0[a] * w1[b] * w2[c] * w3[d];
  return w;
}

cplx weighted_inner(const std::vector<double>& w, const std::vector<cplx>& a,
                    const std::vector<cplx>& b) {
  std::vector<cplx> terms(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) terms[i] = w[i] * a[i] * std::conj(b[i]);
  return kBicomplexMeasureFactor * pairwise_sum(terms);
}

// Residual energy of one component after projection.
std::pair<double, double> project_component(const std::vector<double>& w,
                                            const std::vector<cplx>& f,
                                            const std::vector<const std::vector<cplx>*>& basis,
                                            double cutoff) {
  const std::size_t k = basis.size();
  Eigen::MatrixXcd M(k, k);
  Eigen::VectorXcd rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs(i) = weighted_inner(w, f, *basis[i]);
    for (std::size_t j = i; j < k; ++j) {
      M(i, j) = weighted_inner(w, *basis[j], *basis[i]);
      M(j, i) = std::conj(M(i, j));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  const auto& lam = es.eigenvalues();
  const double top = lam.cwiseAbs().maxCoeff();
  Eigen::VectorXcd coef = Eigen::VectorXcd::Zero(k);
  const Eigen::VectorXcd proj = es.eigenvectors().adjoint() * rhs;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) > cutoff * top) coef += es.eigenvectors().col(i) * (proj(i) / lam(i));
  }
  std::vector<cplx> r = f;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= coef(static_cast<Eigen::Index>(j)) * (*basis[j])[i];
  return {weighted_inner(w, f, f).real(), weighted_inner(w, r, r).real()};
}

}  // namespace

ProjectionResult projection_residual(const GridSamples& f, const std::vector<GridSamples>& basis,
                                     const TensorRule& rule4d, double cutoff) {
  const auto w = component_weights(rule4d);
  std::vector<const std::vector<cplx>*> bp, bm;
  for (const auto& b : basis) {
    bp.push_back(&b.plus);
    bm.push_back(&b.minus);
  }
  const auto [np, rp] = project_component(w, f.plus, bp, cutoff);
  const auto [nm, rm] = project_component(w, f.minus, bm, cutoff);
  return {0.5 * (np + nm), 0.5 * (rp + rm)};
}

// ---- tensor-product fits --------------------------------------------------

FactorizationFit product_fit(const FourIndex& idx, Scale sigma, ProductFamily family,
                             const std::vector<Bicomplex>& eval_points, const TensorRule& rule2d,
                             int max_degree) {
  // Fitting grid: 6 points per axis on [-1.5, 1.5].
  GridAxes fit_axes;
  for (auto& a : fit_axes.axis) {
    for (int i = 0; i < 6; ++i) a.push_back(-1.5 + 0.6 * i);
  }
  const auto fit_pts = grid_points(fit_axes);
  const auto F = sample_four_index(idx, sigma, fit_axes, rule2d);
  std::vector<Bicomplex> F_eval;
  for (const auto& z : eval_points) F_eval.push_back(four_index_basis(idx, sigma, z, rule2d));

  // Factors at scale s/2 share the e^{-s|.|^2/4} envelope of F.
  const Scale half = sigma.half();
  auto candidate = [&](int a, int b, int c, int d, const Bicomplex& Z) -> cplx {
    const double x1 = Z.z1().real(), y1 = Z.z1().imag();
    const double x2 = Z.z2().real(), y2 = Z.z2().imag();
    if (family == ProductFamily::real) {
      return hermite_real(a, half, x1) * hermite_real(b, half, y1) * hermite_real(c, half, x2) *
             hermite_real(d, half, y2);
    }
    return hermite_complex(HermiteIndex(a, b), half, Z.z1()) *
           hermite_complex(HermiteIndex(c, d), half, Z.z2());
  };

  double eval_norm = 0.0;
  for (const auto& v : F_eval) eval_norm += std::norm(v.plus()) + std::norm(v.minus());
  eval_norm = std::sqrt(eval_norm);

  FactorizationFit best{std::numeric_limits<double>::infinity(), ""};
  const int D = max_degree + 1;
  for (int code = 0; code < D * D * D * D; ++code) {
    const int a = code / (D * D * D), b = (code / (D * D)) % D, c = (code / D) % D, d = code % D;
    cplx num_p = 0.0, num_m = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < fit_pts.size(); ++i) {
      const cplx p = candidate(a, b, c, d, fit_pts[i]);
      num_p += std::conj(p) * F.plus[i];
      num_m += std::conj(p) * F.minus[i];
      den += std::norm(p);
    }
    if (den == 0.0) continue;
    const cplx cp = num_p / den, cm = num_m / den;
    double miss = 0.0;
    for (std::size_t i = 0; i < eval_points.size(); ++i) {
      const cplx p = candidate(a, b, c, d, eval_points[i]);
      miss += std::norm(F_eval[i].plus() - cp * p) + std::norm(F_eval[i].minus() - cm * p);
    }
    const double rel = std::sqrt(miss) / std::max(eval_norm, 1e-300);
    if (rel < best.min_residual) {
      best.min_residual = rel;
      best.best = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                  std::to_string(d);
    }
  }
  return best;
}

// ---- 2-d window and surjectivity -------------------------------------------

double window_display_constant() { return std::pow(2.0 * kPi, -0.25); }

Bicomplex window_display_2d(const BCFunction2D& phi, Scale sigma, const Bicomplex& Z,
                            const TensorRule& rule2d) {
  const double s = sigma.value();
  const PhasePoint2D pt = phase_point(Z);
  const cplx s1(pt.X[0], pt.Y[0]);
  const cplx s2(pt.X[1], pt.Y[1]);
  const double c = std::pow(2.0 * kPi, -0.25);
  const double x2sum = pt.X[0] * pt.X[0] + pt.X[1] * pt.X[1];
  const double y2sum = pt.Y[0] * pt.Y[0] + pt.Y[1] * pt.Y[1];
  const cplx pref = c * std::exp(-0.25 * s * (x2sum + y2sum) + 0.25 * s * (s1 * s1 + s2 * s2));
  const TensorRule r = rule2d.centered_at({0.5 * pt.X[0], 0.5 * pt.X[1], 0, 0});
  auto component = [&](const PlaneFn& f) {
    return integrate(r, PlaneFn([&](double u, double v) {
      const cplx d1 = u - s1, d2 = v - s2;
      return std::exp(-0.5 * s * (d1 * d1 + d2 * d2)) * f(u, v);
    }));
  };
  return Bicomplex::from_idempotent(pref * component(phi.plus), pref * component(phi.minus));
}

Bicomplex basis_target(const BasisTarget& t, Scale sigma, const Bicomplex& Z,
                       const TensorRule& rule2d) {
  return Bicomplex::from_idempotent(t.c_plus * four_index_basis(t.plus, sigma, Z, rule2d).plus(),
                                    t.c_minus * four_index_basis(t.minus, sigma, Z, rule2d).minus());
}

Preimage surjectivity_preimage(const BasisTarget& t, Scale sigma) {
  const PlaneFn hp = complex_hermite_fn(HermiteIndex(t.plus.m, t.plus.n), sigma);
  const PlaneFn hm = complex_hermite_fn(HermiteIndex(t.minus.m, t.minus.n), sigma);
  const cplx cp = t.c_plus, cm = t.c_minus;
  Preimage p;
  p.phi.plus = [hp, cp](double u, double v) { return cp * hp(u, v); };
  p.phi.minus = [hm, cm](double u, double v) { return cm * hm(u, v); };
  p.psi.plus = complex_hermite_fn(HermiteIndex(t.plus.mp, t.plus.np), sigma);
  p.psi.minus = complex_hermite_fn(HermiteIndex(t.minus.mp, t.minus.np), sigma);
  return p;
}

// ---- polyanalytic orders ----------------------------------------------------

std::vector<double> central_weights(int d) {
  if (d < 0) throw std::invalid_argument("central_weights: negative order");
  const int p = (d + 1) / 2;
  const int n = 2 * p + 1;
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = i - p;
  // Fornberg (1988), expansion point 0.
  std::vector<std::vector<double>> c(n, std::vector<double>(d + 1, 0.0));
  double c1 = 1.0, c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, d);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][d];
  return w;
}

namespace {

struct PlaneDerivative {
  bool second_plane;  // vary (x2, y2) instead of (x1, y1)
  bool conjugate;     // d/d conj(w) rather than d/dw
};

PlaneDerivative plane_for(Direction dir, bool plus) {
  switch (dir) {
    case Direction::star:
      return {!plus, true};
    case Direction::bar:
      return {plus, true};
    case Direction::dagger:
      return {plus, false};
  }
  return {false, true};
}

// Central-difference K-th Wirtinger derivative of one idempotent component.
cplx wirtinger_fd(const BicomplexFn& f, bool plus, PlaneDerivative pd, int K, const Bicomplex& Z0,
                  double h) {
  const cplx unit = pd.conjugate ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
  cplx total = 0.0;
  cplx ipow = 1.0;
  for (int j = 0; j <= K; ++j, ipow *= unit) {
    const auto wx = central_weights(K - j);
    const auto wy = central_weights(j);
    const int px = static_cast<int>(wx.size() / 2), py = static_cast<int>(wy.size() / 2);
    cplx acc = 0.0;
    for (int a = -px; a <= px; ++a) {
      for (int b = -py; b <= py; ++b) {
        const double wgt = wx[a + px] * wy[b + py];
        if (wgt == 0.0) continue;
        const cplx shift(a * h, b * h);
        const Bicomplex Z = pd.second_plane ? Bicomplex(Z0.z1(), Z0.z2() + shift)
                                            : Bicomplex(Z0.z1() + shift, Z0.z2());
        const Bicomplex v = f(Z);
        acc += wgt * (plus ? v.plus() : v.minus());
      }
    }
    total += binomial(K, j) * ipow * acc;
  }
  return std::ldexp(1.0, -K) * total / std::pow(h, K);
}

}  // namespace

OrderCheck polyanalytic_order(const BicomplexFn& f, Direction dir, int k, const Bicomplex& Z0,
                              double h) {
  if (!(h >= 1e-3 && h <= 1e-1)) {
    throw std::invalid_argument("polyanalytic_order: step must lie in [1e-3, 1e-1]");
  }
  if (k < 0) throw std::invalid_argument("polyanalytic_order: negative order");
  const int K = k + 1;
  const double scale = coordinate_norm(f(Z0));
  cplx comps[2];
  for (int c = 0; c < 2; ++c) {
    const bool plus = c == 0;
    const PlaneDerivative pd = plane_for(dir, plus);
    const cplx d1 = wirtinger_fd(f, plus, pd, K, Z0, h);
    const cplx d2 = wirtinger_fd(f, plus, pd, K, Z0, 0.5 * h);
    const cplx d4 = wirtinger_fd(f, plus, pd, K, Z0, 0.25 * h);
    const cplx r1h = (4.0 * d2 - d1) / 3.0;
    const cplx r1h2 = (4.0 * d4 - d2) / 3.0;
    const cplx r2 = (16.0 * r1h2 - r1h) / 15.0;
    if (std::abs(r1h2 - r1h) > 1e-3 * std::max({scale, std::abs(r2), 1e-12})) {
      throw NumericalError("polyanalytic_order: Richardson levels disagree, step too small");
    }
    comps[c] = r2;
  }
  OrderCheck out;
  out.derivative = Bicomplex::from_idempotent(comps[0], comps[1]);
  out.residual = coordinate_norm(out.derivative);
  out.scale = scale;
  return out;
}

}  // namespace bcfwt
