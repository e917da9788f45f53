#include "bcfwt/bicomplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bcfwt {

namespace {

// i * z, without the rounding a general complex product would introduce.
constexpr cplx mul_i(cplx z) { return {-z.imag(), z.real()}; }

}  // namespace

IdempotentPair Bicomplex::to_idempotent() const {
  const cplx iz2 = mul_i(z2_);
  return {z1_ - iz2, z1_ + iz2};
}

Bicomplex Bicomplex::from_idempotent(const IdempotentPair& p) {
  const cplx z1 = 0.5 * (p.beta_plus + p.beta_minus);
  const cplx z2 = 0.5 * mul_i(p.beta_plus - p.beta_minus);
  return {z1, z2};
}

Bicomplex& Bicomplex::operator*=(const Bicomplex& o) {
  const cplx a = z1_ * o.z1_ - z2_ * o.z2_;
  const cplx b = z1_ * o.z2_ + z2_ * o.z1_;
  z1_ = a;
  z2_ = b;
  return *this;
}

Bicomplex e_plus() { return Bicomplex::from_idempotent(cplx(1.0), cplx(0.0)); }
Bicomplex e_minus() { return Bicomplex::from_idempotent(cplx(0.0), cplx(1.0)); }

Bicomplex exp(const Bicomplex& z) {
  const auto p = z.to_idempotent();
  return Bicomplex::from_idempotent(std::exp(p.beta_plus), std::exp(p.beta_minus));
}

double coordinate_norm(const Bicomplex& z) {
  return std::sqrt(std::norm(z.z1()) + std::norm(z.z2()));
}

Conjugates conjugations(const Bicomplex& z) { return {z.star(), z.bar(), z.dagger()}; }

Companion companion(const Bicomplex& z) { return {z.z1(), z.z2()}; }

double companion_modulus_sq(const Companion& c) {
  return 0.5 * (std::norm(c.w_plus) + std::norm(c.w_minus));
}

Hyperbolic hyperbolic_dagger(const Hyperbolic& x) { return {x.a_minus, x.a_plus}; }

double modulus_sq(const Hyperbolic& h) {
  if (!h.nonnegative()) {
    throw std::domain_error("modulus_sq: negative hyperbolic component (not a Gram value)");
  }
  return 0.5 * (h.a_plus + h.a_minus);
}

double euclidean_modulus(const Hyperbolic& h) {
  return std::sqrt(0.5 * (h.a_plus * h.a_plus + h.a_minus * h.a_minus));
}

Hyperbolic as_hyperbolic(const Bicomplex& z, double tol) {
  const auto p = z.to_idempotent();
  const double scale = std::max({std::abs(p.beta_plus), std::abs(p.beta_minus), 1e-300});
  if (std::abs(p.beta_plus.imag()) > tol * scale || std::abs(p.beta_minus.imag()) > tol * scale) {
    throw std::domain_error("as_hyperbolic: value has non-real idempotent components");
  }
  return {p.beta_plus.real(), p.beta_minus.real()};
}

void to_json(nlohmann::json& j, const Bicomplex& z) {
  j = nlohmann::json{{"z1", {z.z1().real(), z.z1().imag()}},
                     {"z2", {z.z2().real(), z.z2().imag()}}};
}

void from_json(const nlohmann::json& j, Bicomplex& z) {
  const auto& a = j.at("z1");
  const auto& b = j.at("z2");
  z = Bicomplex(cplx(a.at(0).get<double>(), a.at(1).get<double>()),
                cplx(b.at(0).get<double>(), b.at(1).get<double>()));
}

void to_json(nlohmann::json& j, const Hyperbolic& h) {
  j = nlohmann::json{{"plus", h.a_plus}, {"minus", h.a_minus}};
}

void from_json(const nlohmann::json& j, Hyperbolic& h) {
  h.a_plus = j.at("plus").get<double>();
  h.a_minus = j.at("minus").get<double>();
}

}  // namespace bcfwt
