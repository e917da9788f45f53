#include "doctest.h"

#include <random>

#include "bcfwt/fwt.hpp"
#include "oracles.hpp"

using namespace bcfwt;

namespace {

const double kPi = oracle::pi;

std::function<double(double)> h(int n, double s) {
  return [n, s](double t) { return oracle::real_hermite(n, s, t); };
}

Bicomplex random_bc(std::mt19937_64& g, double w) {
  std::uniform_real_distribution<double> u(-w, w);
  return {cplx(u(g), u(g)), cplx(u(g), u(g))};
}

double bc_rel(const Bicomplex& a, const Bicomplex& b, double floor = 0.0) {
  return coordinate_norm(a - b) / std::max({coordinate_norm(a), coordinate_norm(b), floor, 1e-300});
}

}  // namespace

TEST_CASE("fwt1d on Gaussians") {
  const Scale s(1.0);
  const TensorRule r = transform_rule_1d(s);
  CHECK(oracle::rel(fwt1d(hermite_fn(0, s), hermite_fn(0, s), s, {0, 0}, r), 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(fwt1d(hermite_fn(0, s), hermite_fn(1, s), s, {0, 0}, r)) < 1e-14);
  CHECK(oracle::rel(fwt1d(hermite_fn(1, s), hermite_fn(0, s), s, {1, 0.5}, r),
                    fwt1d_hermite_closed(1, 0, s, {1, 0.5})) < 1e-8);
}

TEST_CASE("fwt1d against the trapezoid oracle") {
  std::mt19937_64 g(21);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (double sv : {0.5, 1.0, 2.0}) {
    const Scale s(sv);
    const TensorRule r = transform_rule_1d(s);
    for (int k = 0; k < 10; ++k) {
      const int m = k % 5, n = (3 * k + 1) % 5;
      const double p = u(g), q = u(g);
      const cplx want = oracle::fwt1d(h(m, sv), h(n, sv), sv, p, q);
      const double ref = std::sqrt(sv / (2 * kPi)) *
                         std::sqrt(hermite_real_norm_sq(m, s) * hermite_real_norm_sq(n, s));
      CHECK(oracle::rel(fwt1d(hermite_fn(m, s), hermite_fn(n, s), s, {p, q}, r), want, ref) < 1e-10);
      CHECK(oracle::rel(fwt1d_hermite_closed(m, n, s, {p, q}), want, ref) < 1e-10);
    }
  }
}

TEST_CASE("closed form at special points") {
  CHECK(oracle::rel(fwt1d_hermite_closed(0, 0, Scale(1.0), {0, 0}), 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(fwt1d_hermite_closed(1, 0, Scale(1.0), {0, 0})) == 0.0);
  const Scale s(2.0);
  CHECK(oracle::rel(fwt1d(hermite_fn(1, s), hermite_fn(1, s), s, {1, 1}, transform_rule_1d(s)),
                    fwt1d_hermite_closed(1, 1, s, {1, 1})) < 1e-8);
}

TEST_CASE("rescaling identity") {
  std::mt19937_64 g(4);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_real_distribution<double> us(0.5, 2.5);
  for (int k = 0; k < 30; ++k) {
    const int m = k % 4, n = (k / 4) % 4;
    const double sv = us(g), p = u(g), q = u(g);
    const Scale s(sv), one(1.0);
    const cplx a = fwt1d(hermite_fn(m, s), hermite_fn(n, s), s, {p, q}, transform_rule_1d(s));
    const cplx b = std::pow(sv, 0.5 * (m + n)) *
                   fwt1d(hermite_fn(m, one), hermite_fn(n, one), one,
                         {std::sqrt(sv) * p, std::sqrt(sv) * q}, transform_rule_1d(one));
    const double ref = std::pow(sv, 0.5 * (m + n)) * std::sqrt(hermite_real_norm_sq(m, one) * hermite_real_norm_sq(n, one));
    CHECK(oracle::rel(a, b, ref) < 1e-8);
  }
}

TEST_CASE("grid and pointwise evaluations agree bit for bit") {
  const Scale s(1.3);
  const TensorRule r = transform_rule_1d(s);
  const std::vector<double> ps{-1.0, 0.25, 1.5}, qs{-0.5, 0.0, 2.0};
  const auto grid = fwt1d_grid(hermite_fn(2, s), hermite_fn(1, s), s, ps, qs, r);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t k = 0; k < qs.size(); ++k)
      CHECK(grid[i * qs.size() + k] == fwt1d(hermite_fn(2, s), hermite_fn(1, s), s, {ps[i], qs[k]}, r));

  GridAxes axes;
  axes.axis = {std::vector<double>{-0.5, 0.5}, {0.0, 1.0}, {0.3}, {-1.0, 0.2}};
  const auto phi = elementary(1, 2, s), psi = elementary(0, 1, s);
  const GridSamples bc = sample_fwt_bc_1d(phi, psi, s, axes, r);
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const Bicomplex v = fwt_bc_1d(phi, psi, s, axes.point(i), r);
    CHECK(v == Bicomplex::from_idempotent(bc.plus[i], bc.minus[i]));
  }

  const TensorRule r2 = transform_rule_2d(s);
  const PlaneFn f = complex_hermite_fn(HermiteIndex(1, 0), s);
  const PlaneFn gg = complex_hermite_fn(HermiteIndex(0, 1), s);
  const auto v2 = fwt2d_grid(f, gg, s, axes, r2);
  for (std::size_t i = 0; i < axes.size(); ++i) {
    CHECK(v2[i] == fwt2d(f, gg, s, phase_point(axes.point(i)), r2));
  }
}

TEST_CASE("fwt2d") {
  const Scale s(1.0);
  const TensorRule r2 = transform_rule_2d(s);
  const PlaneFn g00 = [](double u, double v) { return cplx(std::exp(-0.5 * (u * u + v * v))); };
  CHECK(oracle::rel(fwt2d(g00, g00, s, {}, r2), kPi / std::sqrt(2 * kPi)) < 1e-14);
  const PlaneFn g10 = [](double u, double v) { return cplx(2 * u * std::exp(-0.5 * (u * u + v * v))); };
  CHECK(std::abs(fwt2d(g10, g00, s, {}, r2)) < 1e-14);

  // Tensor inputs factor into 1-d transforms with ratio sqrt(2 pi) / s.
  std::mt19937_64 g(8);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (double sv : {0.7, 1.0, 1.8}) {
    const Scale sc(sv);
    const TensorRule a1 = transform_rule_1d(sc), a2 = transform_rule_2d(sc);
    for (int k = 0; k < 7; ++k) {
      const int i1 = k % 3, i2 = (k + 1) % 3, j1 = (2 * k) % 3, j2 = (k / 2) % 3;
      const PhasePoint2D pt{{u(g), u(g)}, {u(g), u(g)}};
      const RealFn f1 = hermite_fn(i1, sc), f2 = hermite_fn(i2, sc), g1 = hermite_fn(j1, sc), g2 = hermite_fn(j2, sc);
      const PlaneFn F = [&](double x, double y) { return f1(x) * f2(y); };
      const PlaneFn G = [&](double x, double y) { return g1(x) * g2(y); };
      const cplx two = fwt2d(F, G, sc, pt, a2);
      const cplx one = oracle::fwt1d(h(i1, sv), h(j1, sv), sv, pt.X[0], pt.Y[0]) *
                       oracle::fwt1d(h(i2, sv), h(j2, sv), sv, pt.X[1], pt.Y[1]);
      const double ref = std::sqrt(hermite_real_norm_sq(i1, sc) * hermite_real_norm_sq(i2, sc) *
                                   hermite_real_norm_sq(j1, sc) * hermite_real_norm_sq(j2, sc)) / (2 * kPi);
      CHECK(oracle::rel(two, std::sqrt(2 * kPi) / sv * one, ref) < 1e-10);
    }
  }
}

TEST_CASE("bicomplex 1-d transform") {
  const Scale s(1.0);
  const TensorRule r = transform_rule_1d(s);
  // sqrt(2/pi) times the 1-d Gaussian value 1/sqrt(2).
  const Bicomplex g = fwt_bc_1d(elementary(0, 0, s), elementary(0, 0, s), s, Bicomplex(0.0), r);
  CHECK(bc_rel(g, Bicomplex(1.0 / std::sqrt(kPi))) < 1e-14);
  CHECK(bc_rel(fwt_bc_1d_hermite(0, 0, 0, 0, s, Bicomplex(0.0)), Bicomplex(1.0 / std::sqrt(kPi))) < 1e-15);

  const Bicomplex odd = fwt_bc_1d(elementary(1, 0, s), elementary(0, 0, s), s, Bicomplex(0.0), r);
  CHECK(std::abs(odd.plus()) < 1e-14);

  const Bicomplex Z(cplx(0.5, 0.2), cplx(0.1, -0.3));
  CHECK(bc_rel(fwt_bc_1d(elementary(1, 0, s), elementary(0, 1, s), s, Z, r), fwt_bc_1d_hermite(1, 0, 0, 1, s, Z)) < 1e-8);

  // Component formula with trapezoid transforms.
  std::mt19937_64 gen(12);
  for (int k = 0; k < 10; ++k) {
    const int m = k % 3, n = (k + 1) % 3, a = (k / 3) % 3, b = (2 * k) % 3;
    const double sv = 0.5 + 0.25 * k;
    const Scale sc(sv);
    const Bicomplex W = random_bc(gen, 1.5);
    const Companion c = companion(W);
    const double pre = std::sqrt(2 * sv / kPi);
    const cplx vp = pre * std::exp(-sv * std::norm(c.w_minus) / 4) *
                    oracle::fwt1d(h(m, sv), h(a, sv), sv, c.w_plus.real(), c.w_plus.imag());
    const cplx vm = pre * std::exp(-sv * std::norm(c.w_plus) / 4) *
                    oracle::fwt1d(h(n, sv), h(b, sv), sv, c.w_minus.real(), c.w_minus.imag());
    const double ref = (sv / kPi) * std::max(std::sqrt(hermite_real_norm_sq(m, sc) * hermite_real_norm_sq(a, sc)),
                                             std::sqrt(hermite_real_norm_sq(n, sc) * hermite_real_norm_sq(b, sc)));
    const Bicomplex got = fwt_bc_1d(elementary(m, n, sc), elementary(a, b, sc), sc, W, transform_rule_1d(sc));
    CHECK(bc_rel(got, Bicomplex::from_idempotent(vp, vm), ref) < 1e-10);
    CHECK(bc_rel(fwt_bc_1d_hermite(m, n, a, b, sc, W), Bicomplex::from_idempotent(vp, vm), ref) < 1e-10);
  }
}

TEST_CASE("direct bicomplex quadrature") {
  const Scale s(1.0);
  const TensorRule r = transform_rule_1d(s);
  std::mt19937_64 g(2);
  double drift_literal = 0.0, drift_conj = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Bicomplex Z = random_bc(g, 1.0);
    const auto phi = elementary(k % 3, (k + 1) % 3, s), psi = elementary((k / 3) % 3, k % 2, s);
    const auto a = compare_direct(phi, psi, s, Z, r, ModulationReading::literal);
    const auto b = compare_direct(phi, psi, s, Z, r, ModulationReading::conjugated);
    for (cplx v : {a.ratio_plus, a.ratio_minus})
      if (!std::isnan(v.real())) drift_literal = std::max(drift_literal, std::abs(v - 1.0));
    for (cplx v : {b.ratio_plus, b.ratio_minus})
      if (!std::isnan(v.real())) drift_conj = std::max(drift_conj, std::abs(v - 1.0));
  }
  CHECK(drift_literal < 1e-10);
  CHECK(drift_conj > 1e-2);
}

TEST_CASE("bicomplex 2-d transform") {
  const Scale s(1.0);
  const TensorRule r2 = transform_rule_2d(s);
  const auto gauss = BCFunction2D::scalar(complex_hermite_fn(HermiteIndex(0, 0), s));
  CHECK(bc_rel(fwt_bc_2d(gauss, gauss, s, Bicomplex(0.0), r2), Bicomplex(kPi / std::sqrt(2 * kPi))) < 1e-14);

  const BCFunction2D odd{complex_hermite_fn(HermiteIndex(1, 0), s), complex_hermite_fn(HermiteIndex(0, 0), s)};
  CHECK(std::abs(fwt_bc_2d(odd, gauss, s, Bicomplex(0.0), r2).plus()) < 1e-14);

  std::mt19937_64 g(17);
  for (int k = 0; k < 20; ++k) {
    const BCFunction2D phi{complex_hermite_fn(HermiteIndex(k % 2, (k / 2) % 2), s),
                           complex_hermite_fn(HermiteIndex((k / 4) % 3, k % 3), s)};
    const BCFunction2D psi{complex_hermite_fn(HermiteIndex((k + 1) % 2, 0), s),
                           complex_hermite_fn(HermiteIndex(1, (k + 1) % 2), s)};
    const Bicomplex Z = random_bc(g, 1.0);
    const Bicomplex a = fwt_bc_2d(phi, psi, s, Z, r2);
    const Bicomplex b = fwt_bc_2d_direct(phi, psi, s, Z, r2);
    CHECK(bc_rel(a, b, 0.1) < 1e-10);
  }
}

TEST_CASE("Moyal identities") {
  const Scale s(1.0);
  const TensorRule r4 = phase_space_rule(s), r1 = transform_rule_1d(s), r2 = transform_rule_2d(s);
  const auto g = elementary(0, 0, s);
  const IdentityReport a = moyal_check_1d(g, g, g, g, s, r4, r1);
  CHECK(bc_rel(a.lhs, Bicomplex(kPi)) < 1e-8);
  CHECK(bc_rel(a.rhs, Bicomplex(kPi)) < 1e-12);
  CHECK(a.passes(1e-8));

  const IdentityReport o = moyal_check_1d(g, elementary(1, 1, s), g, elementary(0, 0, s), s, r4, r1);
  CHECK(coordinate_norm(o.rhs) < 1e-12);
  CHECK(o.passes(1e-8));

  const auto G = BCFunction2D::scalar(complex_hermite_fn(HermiteIndex(0, 0), s));
  const IdentityReport b = moyal_check_2d(G, G, G, G, s, r4, r2);
  CHECK(b.constant == doctest::Approx(kPi / 2));
  CHECK(bc_rel(b.rhs, Bicomplex(kPi * kPi)) < 1e-12);
  CHECK(b.passes(1e-8));
}
