#pragma once

// Rescaled Fourier-Wigner transforms
//
//   V^s(f, g)(p, q) = (s/2pi)^{d/2} int e^{i s <x - p/2, q>} f(x) conj(g(x - p)) dx
//
// in d = 1, the d = 2 variant with prefactor (1/2pi)^{1/2}, and the two
// bicomplex transforms built on them through the idempotent split.
//
// Every transform has a pointwise entry and a grid entry; the pointwise one
// is the grid kernel on a single point, so both give identical bits.

#include <array>
#include <span>
#include <vector>

#include "bcfwt/hermite.hpp"
#include "bcfwt/quadrature.hpp"
#include "bcfwt/report.hpp"

namespace bcfwt {

struct PhasePoint1D {
  double p = 0.0;
  double q = 0.0;

  [[nodiscard]] cplx z() const { return {p, q}; }
};

struct PhasePoint2D {
  std::array<double, 2> X{};
  std::array<double, 2> Y{};
};

/// X = (x1, x2), Y = (y1, y2) for Z = (x1 + i y1) + j (x2 + i y2).
PhasePoint2D phase_point(const Bicomplex& Z);

struct QuadratureOrders {
  int order1d = 80;
  int order2d = 48;
  int order4d = 24;
  bool force = false;
};

/// Rules matched to the Gaussian envelopes of sigma-rescaled Hermite data:
/// scale 1/sqrt(sigma) for transform integrals on R and R^2, and
/// sqrt(2/sigma) for |transform|^2 over phase space.
TensorRule transform_rule_1d(Scale sigma, const QuadratureOrders& orders = {});
TensorRule transform_rule_2d(Scale sigma, const QuadratureOrders& orders = {});
TensorRule phase_space_rule(Scale sigma, const QuadratureOrders& orders = {});

ReportConfig report_config(Scale sigma, const QuadratureOrders& orders, std::vector<int> indices = {});

/// h^s_n as a callable.
RealFn hermite_fn(int n, Scale sigma);
/// Elementary bicomplex signal f^s_{m,n} = h^s_m e+ + h^s_n e-.
BCFunction1D elementary(int m, int n, Scale sigma);
/// h^s_{m,n}(u + i v) as a function on R^2.
PlaneFn complex_hermite_fn(HermiteIndex idx, Scale sigma);

// ---- classical transforms ----------------------------------------------

/// The rule is recentered at p/2 so that f and the translate of g are both
/// resolved; its scale must match the product envelope.
cplx fwt1d(const RealFn& f, const RealFn& g, Scale sigma, PhasePoint1D pt, const TensorRule& rule);
/// Values at (ps[i], qs[k]), row-major in i.
std::vector<cplx> fwt1d_grid(const RealFn& f, const RealFn& g, Scale sigma,
                             std::span<const double> ps, std::span<const double> qs,
                             const TensorRule& rule);
/// Relative change of fwt1d when the order is doubled.
double fwt1d_envelope_drift(const RealFn& f, const RealFn& g, Scale sigma, PhasePoint1D pt,
                            const TensorRule& rule);

/// (-1)^n 2^{m+n} / sqrt(2) h^{s/2}_{m,n}(p + i q)
cplx fwt1d_hermite_closed(int m, int n, Scale sigma, PhasePoint1D pt);

cplx fwt2d(const PlaneFn& f, const PlaneFn& g, Scale sigma, const PhasePoint2D& pt,
           const TensorRule& rule2d);
/// Values on the product grid (x1, y1, x2, y2), X = (x1, x2), Y = (y1, y2).
std::vector<cplx> fwt2d_grid(const PlaneFn& f, const PlaneFn& g, Scale sigma,
                             const GridAxes& axes, const TensorRule& rule2d);

// ---- bicomplex transforms ------------------------------------------------

/// sqrt(2s/pi) e^{-s|w-|^2/4} V^s(phi+, psi+)(w+) e+
///   + sqrt(2s/pi) e^{-s|w+|^2/4} V^s(phi-, psi-)(w-) e-
Bicomplex fwt_bc_1d(const BCFunction1D& phi, const BCFunction1D& psi, Scale sigma,
                    const Bicomplex& Z, const TensorRule& rule1d);
GridSamples sample_fwt_bc_1d(const BCFunction1D& phi, const BCFunction1D& psi, Scale sigma,
                             const GridAxes& axes, const TensorRule& rule1d);

/// How the modulation in the defining integral meets the star of the
/// translated window: `literal` conjugates the translate only, `conjugated`
/// conjugates the modulated translate as a whole.
enum class ModulationReading { literal, conjugated };

/// Single bicomplex-valued quadrature of
///   (s/pi) e^{-s((X^dagger)^2 + (Y^dagger)^2)/4} int phi(t) M(T psi)(t)^* dt.
Bicomplex fwt_bc_1d_direct(const BCFunction1D& phi, const BCFunction1D& psi, Scale sigma,
                           const Bicomplex& Z, const TensorRule& rule1d,
                           ModulationReading reading = ModulationReading::literal);

struct DirectComparison {
  Bicomplex direct;
  Bicomplex normative;
  cplx ratio_plus;   // direct / normative on e+, NaN where normative vanishes
  cplx ratio_minus;
};

DirectComparison compare_direct(const BCFunction1D& phi, const BCFunction1D& psi, Scale sigma,
                                const Bicomplex& Z, const TensorRule& rule1d,
                                ModulationReading reading = ModulationReading::literal,
                                double floor = 1e-4);

/// sqrt(s/pi) (-1)^r 2^{m+r} e^{-s|w-|^2/4} h^{s/2}_{m,r}(w+) e+
///   + sqrt(s/pi) (-1)^s 2^{n+s} e^{-s|w+|^2/4} h^{s/2}_{n,s}(w-) e-
Bicomplex fwt_bc_1d_hermite(int m, int n, int r, int s, Scale sigma, const Bicomplex& Z);

/// fwt2d on each idempotent component at (X, Y) = phase_point(Z).
Bicomplex fwt_bc_2d(const BCFunction2D& phi, const BCFunction2D& psi, Scale sigma,
                    const Bicomplex& Z, const TensorRule& rule2d);
/// Single bicomplex-valued quadrature of the defining integral.
Bicomplex fwt_bc_2d_direct(const BCFunction2D& phi, const BCFunction2D& psi, Scale sigma,
                           const Bicomplex& Z, const TensorRule& rule2d);
GridSamples sample_fwt_bc_2d(const BCFunction2D& phi, const BCFunction2D& psi, Scale sigma,
                             const GridAxes& axes, const TensorRule& rule2d);

// ---- Moyal identities ----------------------------------------------------

/// lhs = <V(phi1, psi1), V(phi2, psi2)> over BC with the bicomplex measure,
/// rhs = <phi1, phi2> <psi1, psi2>. reference = product of the four norms.
IdentityReport moyal_check_1d(const BCFunction1D& phi1, const BCFunction1D& psi1,
                              const BCFunction1D& phi2, const BCFunction1D& psi2, Scale sigma,
                              const TensorRule& rule4d, const TensorRule& rule1d);

/// pi / (2 s^2): the 2-d transform carries (1/2pi)^{1/2} rather than the
/// (s/2pi) that would make it unitary.
double moyal_2d_constant(Scale sigma);

/// Same shape as moyal_check_1d; report.constant = moyal_2d_constant(sigma).
IdentityReport moyal_check_2d(const BCFunction2D& phi1, const BCFunction2D& psi1,
                              const BCFunction2D& phi2, const BCFunction2D& psi2, Scale sigma,
                              const TensorRule& rule4d, const TensorRule& rule2d);

/// Scalar modulus of a bicomplex self-inner-product.
double scalar_norm_sq(const Bicomplex& self_inner);

}  // namespace bcfwt
