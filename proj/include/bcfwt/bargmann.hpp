#pragma once

// Companion Bargmann-space objects on BC ~ R^4: the bases phi_n and
// psi_{m,n}, the reproducing kernel, the Segal-Bargmann type transforms S_n,
// the four-index basis of the 2-d transform, and a finite-difference checker
// for polyanalytic orders along the three conjugate directions.
//
// Components always act on the companion (w+, w-) = (x1 + i y1, x2 + i y2);
// the mixed envelope is e^{-s(|w+|^2 + |w-|^2)/4}.

#include <string>
#include <vector>

#include "bcfwt/fwt.hpp"

namespace bcfwt {

/// (s/pi)^{3/4} s^n (Z^e)^n e^{-s|Z^e|^2/2}, component-wise.
Bicomplex phi_n(int n, Scale sigma, const Bicomplex& Z);

/// `printed`:   exp(-s(|Z^e|^2 + |W^e|^2)/2 - s/2 Z^e (W^e)^*)
/// `corrected`: exp(-s(|Z^e|^2 + |W^e|^2)/2 + s/2 Z^e (W^e)^*)
/// with |Z^e|^2 the scalar companion modulus.
enum class KernelVariant { printed, corrected };
Bicomplex kernel_K(Scale sigma, const Bicomplex& Z, const Bicomplex& W, KernelVariant variant);

/// ||K(., 0)||^2 = pi^2 / s^2 under the bicomplex measure.
double kernel_norm_sq(Scale sigma);

/// (s/pi)^{1/4} (2^n s^n n!)^{-1/2} V(phi, h^s_n)(Z); n = 0 is S_0.
Bicomplex transform_Sn(int n, const BCFunction1D& phi, Scale sigma, const Bicomplex& Z,
                       const TensorRule& rule1d);
inline Bicomplex transform_S0(const BCFunction1D& phi, Scale sigma, const Bicomplex& Z,
                              const TensorRule& rule1d) {
  return transform_Sn(0, phi, sigma, Z, rule1d);
}
GridSamples sample_Sn(int n, const BCFunction1D& phi, Scale sigma, const GridAxes& axes,
                      const TensorRule& rule1d);

/// (s/pi) e^{-s|Z^e|^2/2} int e^{-s(t - Z^e/2)^2} e^{s t^2/2} phi(t) dt,
/// each component evaluated with its own companion coordinate.
Bicomplex transform_S0_integral(const BCFunction1D& phi, Scale sigma, const Bicomplex& Z,
                                const TensorRule& rule1d);
/// transform_S0_integral / transform_S0 = (pi/s)^{1/4}.
double s0_integral_constant(Scale sigma);

/// e^{-s|Z^e|^2/2} (G^{s/2}_{m,n}(w+) e+ + G^{s/2}_{m,n}(w-) e-), G the
/// polynomial part of the complex Hermite function.
Bicomplex psi_mn(HermiteIndex idx, Scale sigma, const Bicomplex& Z);
/// Same function from the transform: (-1)^n 2^{-(m+n)} sqrt(pi/s) V(h_m, h_n)(Z).
Bicomplex psi_mn_from_transform(HermiteIndex idx, Scale sigma, const Bicomplex& Z);
/// Mixed envelope times the full h^{s/2}_{m,n}, its own Gaussian included.
/// Not proportional to psi_mn; kept for comparison.
Bicomplex psi_mn_printed(HermiteIndex idx, Scale sigma, const Bicomplex& Z);
/// G^{s/2}_{m,n}(w+) e+ + G^{s/2}_{m,n}(w-) e-
Bicomplex psi_mn_polynomial(HermiteIndex idx, Scale sigma, const Bicomplex& Z);

struct FourIndex {
  int m = 0;
  int n = 0;
  int mp = 0;
  int np = 0;

  FourIndex() = default;
  FourIndex(int m_, int n_, int mp_, int np_, int max_order = kDefaultMaxOrder);

  [[nodiscard]] std::vector<int> as_vector() const { return {m, n, mp, np}; }
};

/// h^s_{m,n}(u + i v) placed in both idempotent components.
BCFunction2D complex_hermite_input(HermiteIndex idx, Scale sigma);

/// V_2d(h^s_{m,n}, h^s_{m',n'})(Z)
Bicomplex four_index_basis(const FourIndex& idx, Scale sigma, const Bicomplex& Z,
                           const TensorRule& rule2d);
GridSamples sample_four_index(const FourIndex& idx, Scale sigma, const GridAxes& axes,
                              const TensorRule& rule2d);

/// (s^m w-^m e+ + s^n w+^n e-) e^{-s|Z^e|^2/2}, m != n.
Bicomplex strictness_witness(int m, int n, Scale sigma, const Bicomplex& Z);

// ---- Gram systems on phase-space samples ---------------------------------

struct GramMatrix {
  std::size_t size = 0;
  std::vector<Bicomplex> entry;  // row-major, entry(i, j) = <f_i, f_j>

  [[nodiscard]] const Bicomplex& at(std::size_t i, std::size_t j) const {
    return entry[i * size + j];
  }
};

GramMatrix gram_matrix(const std::vector<GridSamples>& fns, const TensorRule& rule4d,
                       Measure measure = Measure::bicomplex);

/// max_{i,j} |G_ij / sqrt(d_i d_j) - delta_ij| with d_i the scalar modulus of
/// G_ii and |.| the coordinate norm.
double normalized_gram_deviation(const GramMatrix& g);

struct ProjectionResult {
  double norm_sq = 0.0;      // scalar modulus of <f, f>
  double residual_sq = 0.0;  // scalar modulus of <r, r>, r = f - P f
  [[nodiscard]] double fraction() const { return residual_sq / norm_sq; }
};

/// Least-squares projection onto span(basis), per idempotent component, via
/// the Hermitian Gram pseudo-inverse; eigenvalues below cutoff * max are
/// discarded.
ProjectionResult projection_residual(const GridSamples& f, const std::vector<GridSamples>& basis,
                                     const TensorRule& rule4d, double cutoff = 1e-10);

// ---- tensor-product fits ------------------------------------------------

struct FactorizationFit {
  double min_residual = 0.0;  // over all candidate products
  std::string best;           // label of the closest candidate
};

/// Fits F = V_2d(h_{m,n}, h_{m',n'}) by a single coefficient per component
/// against each candidate product on a fitting grid, then measures the
/// relative misfit at the evaluation points. `real` candidates are
/// h_a(x1) h_b(y1) h_c(x2) h_d(y2); `complex` ones are
/// h_{a,b}(x1 + i y1) h_{c,d}(x2 + i y2), all indices <= max_degree and all
/// factors at scale s/2 so that their Gaussians match the envelope of F.
enum class ProductFamily { real, complex };
FactorizationFit product_fit(const FourIndex& idx, Scale sigma, ProductFamily family,
                             const std::vector<Bicomplex>& eval_points, const TensorRule& rule2d,
                             int max_degree = 3);

// ---- 2-d window and surjectivity ----------------------------------------

/// c e^{-s(X^2+Y^2)/4} e^{s(X + iY)^2/4} int e^{-s(U - (X + iY))^2/2} phi(U) dU
/// with c = (2pi)^{-1/4}, per component.
Bicomplex window_display_2d(const BCFunction2D& phi, Scale sigma, const Bicomplex& Z,
                            const TensorRule& rule2d);
/// fwt_bc_2d(phi, Gaussian) / window_display_2d(phi) = (2pi)^{-1/4}.
double window_display_constant();

/// c+ V_2d(h_{idx+}) e+ + c- V_2d(h_{idx-}) e-
struct BasisTarget {
  FourIndex plus;
  FourIndex minus;
  cplx c_plus{1.0};
  cplx c_minus{1.0};
};

struct Preimage {
  BCFunction2D phi;
  BCFunction2D psi;
};

Bicomplex basis_target(const BasisTarget& t, Scale sigma, const Bicomplex& Z,
                       const TensorRule& rule2d);
/// phi = c+ h_{m,n} e+ + c- h_{m'',n''} e-, psi = h_{m',n'} e+ + h_{m''',n'''} e-.
Preimage surjectivity_preimage(const BasisTarget& t, Scale sigma);

// ---- polyanalytic orders ------------------------------------------------

/// Conjugate companion directions. On (e+, e-):
///   star   -> (d/d conj w+, d/d conj w-)
///   bar    -> (d/d conj w-, d/d conj w+)
///   dagger -> (d/d w-,      d/d w+)
enum class Direction { star, bar, dagger };

struct OrderCheck {
  double residual = 0.0;  // coordinate norm of the extrapolated derivative
  Bicomplex derivative;   // order k+1 derivative, component-wise
  double scale = 0.0;     // coordinate norm of f(Z0)
};

/// (k+1)-st Wirtinger derivative of f in the given direction at Z0 from
/// tensor central differences, Richardson-extrapolated over {h, h/2, h/4}.
/// Throws std::invalid_argument for h outside [1e-3, 1e-1] and NumericalError
/// when the two first-level extrapolants disagree by more than 1e-3 of the
/// magnitude scale (roundoff has taken over).
OrderCheck polyanalytic_order(const BicomplexFn& f, Direction dir, int k, const Bicomplex& Z0,
                              double h = 1e-2);

/// Central finite-difference weights for the d-th derivative on the points
/// -p..p (p = ceil(d/2)), second-order accurate; Fornberg's recursion.
std::vector<double> central_weights(int d);

}  // namespace bcfwt
