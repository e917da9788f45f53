#include "doctest.h"

#include <random>

#include "bcfwt/bargmann.hpp"
#include "oracles.hpp"

using namespace bcfwt;

namespace {

const double kPi = oracle::pi;

Bicomplex random_bc(std::mt19937_64& g, double w) {
  std::uniform_real_distribution<double> u(-w, w);
  return {cplx(u(g), u(g)), cplx(u(g), u(g))};
}

Bicomplex annulus_point(std::mt19937_64& g) {
  std::uniform_real_distribution<double> r(0.8, 1.5), t(0.0, 2 * kPi);
  return {std::polar(r(g), t(g)), std::polar(r(g), t(g))};
}

double bc_rel(const Bicomplex& a, const Bicomplex& b, double floor = 0.0) {
  return coordinate_norm(a - b) / std::max({coordinate_norm(a), coordinate_norm(b), floor, 1e-300});
}

// e^{-s(|w+|^2 + |w-|^2)/4}
double envelope(double s, const Bicomplex& Z) {
  const Companion c = companion(Z);
  return std::exp(-0.25 * s * (std::norm(c.w_plus) + std::norm(c.w_minus)));
}

}  // namespace

TEST_CASE("phi_n") {
  CHECK(bc_rel(phi_n(0, Scale(1.0), Bicomplex(0.0)), Bicomplex(std::pow(kPi, -0.75))) < 1e-15);
  std::mt19937_64 g(1);
  for (int n = 0; n <= 4; ++n) {
    const double s = 0.5 + 0.4 * n;
    const Bicomplex Z = random_bc(g, 1.5);
    const Companion c = companion(Z);
    const double pre = std::pow(s / kPi, 0.75) * std::pow(s, n) * envelope(s, Z);
    const Bicomplex want = Bicomplex::from_idempotent(pre * std::pow(c.w_plus, n), pre * std::pow(c.w_minus, n));
    CHECK(bc_rel(phi_n(n, Scale(s), Z), want) < 1e-13);
  }
}

TEST_CASE("reproducing kernel") {
  const Scale s(1.0);
  for (auto v : {KernelVariant::printed, KernelVariant::corrected}) {
    CHECK(kernel_K(s, Bicomplex(0.0), Bicomplex(0.0), v) == Bicomplex(1.0));
  }
  std::mt19937_64 g(6);
  for (int k = 0; k < 5; ++k) {
    const Bicomplex Z = random_bc(g, 2.0);
    CHECK(bc_rel(kernel_K(s, Z, Bicomplex(0.0), KernelVariant::corrected), Bicomplex(envelope(1.0, Z))) < 1e-15);
  }
  // ||K(., 0)||^2 under the quarter measure.
  const TensorRule r4 = phase_space_rule(s);
  const BicomplexFn k0 = [&](const Bicomplex& Z) { return kernel_K(s, Z, Bicomplex(0.0), KernelVariant::corrected); };
  CHECK(oracle::rel(inner_product_bc_c2(k0, k0, r4, Measure::bicomplex).z1(), kernel_norm_sq(s)) < 1e-12);

  // Corrected variant reproduces phi_n, the printed one reflects W for odd n.
  for (int n = 0; n <= 3; ++n) {
    const Bicomplex W = random_bc(g, 0.75);
    const GridSamples p = sample_4d(r4, [&](const Bicomplex& Z) { return phi_n(n, s, Z); });
    for (auto v : {KernelVariant::corrected, KernelVariant::printed}) {
      const GridSamples K = sample_4d(r4, [&](const Bicomplex& Z) { return kernel_K(s, Z, W, v); });
      const Bicomplex got = (1.0 / kernel_norm_sq(s)) * inner_product_samples(r4, p, K, Measure::bicomplex);
      const Bicomplex want = phi_n(n, s, v == KernelVariant::corrected ? W : -W);
      CHECK(bc_rel(got, want) < 1e-10);
    }
  }
}

TEST_CASE("S_0 on Hermite functions") {
  for (double sv : {0.7, 1.0, 2.0}) {
    const Scale s(sv);
    const TensorRule r = transform_rule_1d(s);
    std::mt19937_64 g(31);
    for (int n = 0; n <= 3; ++n) {
      const Bicomplex Z = random_bc(g, 1.2);
      const auto hn = BCFunction1D::scalar(hermite_fn(n, s));
      // (s/pi)^{1/4} sqrt(2s/pi) e^{-s|w-+|^2/4} V(h_n, h_0)(w+-), with trapezoid transforms.
      const Companion c = companion(Z);
      auto h = [&](int k) { return [k, sv](double t) { return oracle::real_hermite(k, sv, t); }; };
      const double pre = std::pow(sv / kPi, 0.25) * std::sqrt(2 * sv / kPi);
      const cplx vp = pre * std::exp(-sv * std::norm(c.w_minus) / 4) * oracle::fwt1d(h(n), h(0), sv, c.w_plus.real(), c.w_plus.imag());
      const cplx vm = pre * std::exp(-sv * std::norm(c.w_plus) / 4) * oracle::fwt1d(h(n), h(0), sv, c.w_minus.real(), c.w_minus.imag());
      const Bicomplex S = transform_S0(hn, s, Z, r);
      CHECK(bc_rel(S, Bicomplex::from_idempotent(vp, vm), 1e-3) < 1e-10);
      CHECK(bc_rel(S, phi_n(n, s, Z), 1e-3) < 1e-10);
      CHECK(bc_rel(transform_S0_integral(hn, s, Z, r), s0_integral_constant(s) * S, 1e-3) < 1e-10);
    }
    const auto g0 = BCFunction1D::scalar(hermite_fn(0, s));
    CHECK(bc_rel(transform_S0(g0, s, Bicomplex(0.0), r), Bicomplex(std::pow(sv / kPi, 0.25) / std::sqrt(kPi) * std::sqrt(sv))) < 1e-13);
  }
}

TEST_CASE("psi_{m,n}") {
  const Scale s(1.0);
  CHECK(psi_mn(HermiteIndex(0, 0), s, Bicomplex(0.0)) == Bicomplex(1.0));
  std::mt19937_64 g(41);
  for (int k = 0; k < 20; ++k) {
    const Bicomplex Z = random_bc(g, 1.2);
    CHECK(bc_rel(psi_mn(HermiteIndex(0, 0), s, Z), Bicomplex(envelope(1.0, Z))) < 1e-15);
    const HermiteIndex idx(k % 3, (k / 3) % 3);
    CHECK(bc_rel(psi_mn_from_transform(idx, s, Z), psi_mn(idx, s, Z), 1e-3) < 1e-10);
    // Component formula with the symbolic complex Hermite oracle.
    const Companion c = companion(Z);
    const double e = envelope(1.0, Z);
    auto G = [&](cplx w) { return oracle::complex_hermite(idx.m, idx.n, 0.5, w) * std::exp(0.25 * std::norm(w)); };
    CHECK(bc_rel(psi_mn(idx, s, Z), Bicomplex::from_idempotent(e * G(c.w_plus), e * G(c.w_minus)), 1e-3) < 1e-11);
  }
}

TEST_CASE("four-index basis") {
  const Scale s(1.0);
  const TensorRule r2 = transform_rule_2d(s);
  CHECK(bc_rel(four_index_basis(FourIndex(0, 0, 0, 0), s, Bicomplex(0.0), r2), Bicomplex(kPi / std::sqrt(2 * kPi))) < 1e-14);
  CHECK_THROWS_AS(FourIndex(-1, 0, 0, 0), std::invalid_argument);

  std::mt19937_64 g(51);
  std::vector<Bicomplex> pts;
  for (int k = 0; k < 5; ++k) pts.push_back(random_bc(g, 1.0));
  const FactorizationFit real = product_fit(FourIndex(1, 1, 0, 1), s, ProductFamily::real, pts, r2);
  MESSAGE("real product fit residual " << real.min_residual << " at " << real.best);
  CHECK(real.min_residual > 1e-3);
}

TEST_CASE("strictness witness") {
  const Scale s(1.0);
  CHECK(strictness_witness(1, 0, s, Bicomplex(0.0)).plus() == cplx(0.0));
  const BicomplexFn w = [&](const Bicomplex& Z) { return strictness_witness(2, 0, s, Z); };
  const TensorRule r4 = phase_space_rule(s);
  const double a = inner_product_bc_c2(w, w, r4, Measure::bicomplex).z1().real();
  const double b = inner_product_bc_c2(w, w, r4.with_order(32), Measure::bicomplex).z1().real();
  CHECK(oracle::rel(a, b) < 1e-6);

  const GridAxes axes = axes_of(r4);
  const GridSamples f = sample_grid(axes, w);
  std::vector<GridSamples> basis;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const HermiteIndex idx(m, n);
      basis.push_back(sample_grid(axes, [&](const Bicomplex& Z) { return psi_mn(idx, s, Z); }));
    }
  const ProjectionResult p = projection_residual(f, basis, r4);
  CHECK(p.fraction() >= 0.5);
  // Projecting a basis element onto its own span leaves nothing.
  CHECK(projection_residual(basis[7], basis, r4).fraction() < 1e-10);
}

TEST_CASE("2-d window display and surjectivity") {
  const Scale s(1.0);
  const TensorRule r2 = transform_rule_2d(s);
  const auto gauss = complex_hermite_input(HermiteIndex(0, 0), s);
  std::mt19937_64 g(61);
  for (int k = 0; k < 10; ++k) {
    const BCFunction2D phi{complex_hermite_fn(HermiteIndex(k % 2, (k / 2) % 2), s),
                           complex_hermite_fn(HermiteIndex((k / 4) % 2, (k + 1) % 2), s)};
    const Bicomplex Z = random_bc(g, 1.0);
    CHECK(bc_rel(fwt_bc_2d(phi, gauss, s, Z, r2), window_display_constant() * window_display_2d(phi, s, Z, r2), 1e-3) < 1e-6);
  }

  const BasisTarget t{FourIndex(1, 0, 0, 1), FourIndex(0, 1, 1, 1), cplx(0.5, -1.0), cplx(2.0, 0.25)};
  const Preimage pre = surjectivity_preimage(t, s);
  for (int k = 0; k < 20; ++k) {
    const Bicomplex Z = random_bc(g, 1.5);
    CHECK(bc_rel(fwt_bc_2d(pre.phi, pre.psi, s, Z, r2), basis_target(t, s, Z, r2), 1e-3) < 1e-6);
  }
}

TEST_CASE("central difference weights") {
  const auto d1 = central_weights(1);
  REQUIRE(d1.size() == 3);
  CHECK(d1[0] == doctest::Approx(-0.5));
  CHECK(d1[1] == doctest::Approx(0.0));
  CHECK(d1[2] == doctest::Approx(0.5));
  const auto d2 = central_weights(2);
  CHECK(d2[0] == doctest::Approx(1.0));
  CHECK(d2[1] == doctest::Approx(-2.0));
  CHECK(d2[2] == doctest::Approx(1.0));
  // Exact on polynomials of degree d + 1.
  for (int d = 1; d <= 5; ++d) {
    const auto w = central_weights(d);
    const int p = (static_cast<int>(w.size()) - 1) / 2;
    double acc = 0.0;
    for (int i = -p; i <= p; ++i) acc += w[i + p] * std::pow(double(i), d);
    CHECK(acc == doctest::Approx(oracle::factorial(d)).epsilon(1e-12));
  }
}

TEST_CASE("polyanalytic orders") {
  const Scale s(1.0);
  std::mt19937_64 g(71);
  for (int m = 1; m <= 3; ++m) {
    for (int a = 0; a <= 1; ++a) {
      const HermiteIndex idx(a, m);
      const BicomplexFn f = [&](const Bicomplex& Z) { return psi_mn_polynomial(idx, s, Z); };
      for (int k = 0; k < 5; ++k) {
        const Bicomplex Z0 = annulus_point(g);
        CHECK(polyanalytic_order(f, Direction::star, m, Z0).residual <= 1e-4);
        const OrderCheck nv = polyanalytic_order(f, Direction::star, m - 1, Z0);
        CHECK(nv.residual >= 1e-2);
        // m! (s/2)^{a+m} w^a in each component.
        const Companion c = companion(Z0);
        const double k0 = oracle::factorial(m) * std::pow(0.5, a + m);
        CHECK(bc_rel(nv.derivative, Bicomplex::from_idempotent(k0 * std::pow(c.w_plus, a), k0 * std::pow(c.w_minus, a))) < 1e-6);
      }
    }
  }
  const BicomplexFn power = [](const Bicomplex& Z) {
    const Companion c = companion(Z);
    return Bicomplex::from_idempotent(std::pow(c.w_plus, 3), std::pow(c.w_minus, 3));
  };
  const BicomplexFn conj_cube = [](const Bicomplex& Z) {
    const Companion c = companion(Z);
    return Bicomplex::from_idempotent(std::pow(std::conj(c.w_plus), 3), std::pow(std::conj(c.w_minus), 3));
  };
  for (int k = 0; k < 5; ++k) {
    const Bicomplex Z0 = annulus_point(g);
    CHECK(polyanalytic_order(power, Direction::bar, 0, Z0).residual <= 1e-6);
    CHECK(polyanalytic_order(power, Direction::dagger, 0, Z0).residual <= 1e-6);
    CHECK(polyanalytic_order(power, Direction::star, 0, Z0).residual <= 1e-6);
    CHECK(polyanalytic_order(conj_cube, Direction::star, 2, Z0).residual >= 1e-2);
    CHECK(polyanalytic_order(conj_cube, Direction::star, 3, Z0).residual <= 1e-4);
  }
  CHECK_THROWS_AS(polyanalytic_order(power, Direction::star, 0, Bicomplex(1.0), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(polyanalytic_order(power, Direction::star, 0, Bicomplex(1.0), 1e-4), std::invalid_argument);
}
