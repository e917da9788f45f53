#pragma once

// Bicomplex numbers Z = z1 + j z2 with commuting units i, j (i^2 = j^2 = -1),
// their idempotent form beta+ e+ + beta- e-, hyperbolic numbers and the
// companion variable used by the Bargmann-side constructions.
//
// Idempotent units are fixed as e+ = (1 + ij)/2 and e- = (1 - ij)/2, so
// beta+ = z1 - i z2 and beta- = z1 + i z2. Multiplication is component-wise
// in idempotent form.

#include <complex>

#include "json.hpp"

namespace bcfwt {

using cplx = std::complex<double>;

struct IdempotentPair {
  cplx beta_plus;
  cplx beta_minus;

  friend bool operator==(const IdempotentPair&, const IdempotentPair&) = default;
};

/// Real-valued idempotent pair a+ e+ + a- e-.
struct Hyperbolic {
  double a_plus = 0.0;
  double a_minus = 0.0;

  [[nodiscard]] bool nonnegative() const { return a_plus >= 0.0 && a_minus >= 0.0; }

  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

class Bicomplex {
 public:
  constexpr Bicomplex() = default;
  constexpr Bicomplex(cplx z1, cplx z2 = {}) : z1_(z1), z2_(z2) {}  // NOLINT: implicit from scalars
  constexpr Bicomplex(double re) : z1_(re, 0.0) {}                    // NOLINT

  static Bicomplex from_idempotent(const IdempotentPair& p);
  static Bicomplex from_idempotent(cplx beta_plus, cplx beta_minus) {
    return from_idempotent(IdempotentPair{beta_plus, beta_minus});
  }
  static Bicomplex from_hyperbolic(const Hyperbolic& h) {
    return from_idempotent(cplx(h.a_plus), cplx(h.a_minus));
  }

  [[nodiscard]] constexpr cplx z1() const { return z1_; }
  [[nodiscard]] constexpr cplx z2() const { return z2_; }

  [[nodiscard]] IdempotentPair to_idempotent() const;
  [[nodiscard]] cplx plus() const { return to_idempotent().beta_plus; }
  [[nodiscard]] cplx minus() const { return to_idempotent().beta_minus; }

  /// conj(z1) - j conj(z2)
  [[nodiscard]] Bicomplex star() const { return {std::conj(z1_), -std::conj(z2_)}; }
  /// conj(z1) + j conj(z2)
  [[nodiscard]] Bicomplex bar() const { return {std::conj(z1_), std::conj(z2_)}; }
  /// z1 - j z2
  [[nodiscard]] Bicomplex dagger() const { return {z1_, -z2_}; }

  Bicomplex& operator+=(const Bicomplex& o) {
    z1_ += o.z1_;
    z2_ += o.z2_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) {
    z1_ -= o.z1_;
    z2_ -= o.z2_;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o);

  friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
  friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
  friend Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
  friend Bicomplex operator-(const Bicomplex& a) { return {-a.z1_, -a.z2_}; }
  friend Bicomplex operator*(cplx s, const Bicomplex& a) { return {s * a.z1_, s * a.z2_}; }
  friend Bicomplex operator*(const Bicomplex& a, cplx s) { return s * a; }
  friend Bicomplex operator*(double s, const Bicomplex& a) { return {s * a.z1_, s * a.z2_}; }
  friend Bicomplex operator*(const Bicomplex& a, double s) { return s * a; }

  /// Exact comparison on the four real coordinates.
  friend bool operator==(const Bicomplex&, const Bicomplex&) = default;

 private:
  cplx z1_{};
  cplx z2_{};
};

Bicomplex e_plus();
Bicomplex e_minus();
inline constexpr Bicomplex unit_j() { return {cplx(0.0), cplx(1.0)}; }

/// Exponential, evaluated component-wise in idempotent form.
Bicomplex exp(const Bicomplex& z);

/// Euclidean norm of the four real coordinates.
double coordinate_norm(const Bicomplex& z);

struct Conjugates {
  Bicomplex star;
  Bicomplex bar;
  Bicomplex dagger;
};

Conjugates conjugations(const Bicomplex& z);

/// Z^e = w+ e+ + w- e- with w+ = x1 + i y1 and w- = x2 + i y2; the abstract
/// planes C_nu and C_mu are both realized as the standard complex plane.
struct Companion {
  cplx w_plus;
  cplx w_minus;
};

Companion companion(const Bicomplex& z);

/// Scalar |Z^e|^2 = (|w+|^2 + |w-|^2)/2, the idempotent average of the
/// hyperbolic value |w+|^2 e+ + |w-|^2 e-.
double companion_modulus_sq(const Companion& c);

Hyperbolic hyperbolic_dagger(const Hyperbolic& x);

/// (a+ + a-)/2 for a nonnegative hyperbolic value. Throws
/// std::domain_error when either component is negative.
double modulus_sq(const Hyperbolic& h);

/// sqrt((a+^2 + a-^2)/2). Diagnostic only.
double euclidean_modulus(const Hyperbolic& h);

/// Real parts of the idempotent components; throws std::domain_error when an
/// imaginary part exceeds tol times the component magnitude scale.
Hyperbolic as_hyperbolic(const Bicomplex& z, double tol = 1e-9);

void to_json(nlohmann::json& j, const Bicomplex& z);
void from_json(const nlohmann::json& j, Bicomplex& z);
void to_json(nlohmann::json& j, const Hyperbolic& h);
void from_json(const nlohmann::json& j, Hyperbolic& h);

}  // namespace bcfwt
