#pragma once

// Rescaled real Hermite functions
//   h^s_n(t) = (-1)^n exp(s t^2/2) d^n/dt^n exp(-s t^2) = s^{n/2} h_n(sqrt(s) t)
// and polyanalytic complex Hermite functions
//   h^a_{m,n}(z, zbar) = (-1)^{m+n} exp(a|z|^2/2) d^{m+n}/dzbar^m dz^n exp(-a|z|^2),
// both evaluated as polynomial times Gaussian.

#include <stdexcept>

#include "bcfwt/bicomplex.hpp"

namespace bcfwt {

inline constexpr int kDefaultMaxOrder = 12;

/// Positive scale parameter (sigma, or alpha = sigma/2 where rescaled).
class Scale {
 public:
  explicit Scale(double value) : value_(value) {
    if (!(value > 0.0)) throw std::invalid_argument("Scale: parameter must be positive");
  }
  [[nodiscard]] double value() const { return value_; }
  [[nodiscard]] Scale half() const { return Scale(0.5 * value_); }

 private:
  double value_;
};

struct HermiteIndex {
  int m = 0;
  int n = 0;

  HermiteIndex() = default;
  HermiteIndex(int m_, int n_, int max_order = kDefaultMaxOrder) : m(m_), n(n_) {
    if (m < 0 || n < 0) throw std::invalid_argument("HermiteIndex: negative index");
    if (m > max_order || n > max_order) {
      throw std::out_of_range("HermiteIndex: index above the configured max order");
    }
  }

  friend bool operator==(const HermiteIndex&, const HermiteIndex&) = default;
};

struct HermiteValue {
  double value;
  bool underflow;  // Gaussian factor below the representable range
};

HermiteValue hermite_real_checked(int n, Scale sigma, double t);
double hermite_real(int n, Scale sigma, double t);

/// sqrt(pi/s) 2^n s^n n!
double hermite_real_norm_sq(int n, Scale sigma);

/// Polynomial part G^a_{m,n}(z, zbar), so that h^a_{m,n} = G exp(-a|z|^2/2).
/// Built from G_{m+1,n} = a z G_{m,n} - a n G_{m,n-1} and
/// G_{m,n+1} = a zbar G_{m,n} - a m G_{m-1,n}.
cplx hermite_complex_poly(HermiteIndex idx, Scale alpha, cplx z);
cplx hermite_complex(HermiteIndex idx, Scale alpha, cplx z);

/// int_C |h^a_{m,n}|^2 dlambda by 2-d Gauss-Hermite quadrature (order 64),
/// computed once per (m, n, alpha) and cached.
double hermite_complex_norm_sq(HermiteIndex idx, Scale alpha);
/// Uncached quadrature at an explicit per-axis order.
double hermite_complex_norm_sq_at(HermiteIndex idx, Scale alpha, int order);

}  // namespace bcfwt
