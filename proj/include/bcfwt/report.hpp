#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bcfwt/bicomplex.hpp"
#include "json.hpp"

namespace bcfwt {

struct ReportConfig {
  double sigma = 1.0;
  int order1d = 0;
  int order2d = 0;
  int order4d = 0;
  std::vector<int> indices;
};

/// One identity check, lhs == constant * rhs.
///
/// `constant` carries a known normalization factor between the two sides
/// (1 unless stated). `reference` is an a-priori magnitude for identities
/// whose sides may both vanish (a Cauchy-Schwarz bound, say); it enters the
/// denominator of the relative residual so that 0 == 1e-17 is not a failure.
struct IdentityReport {
  std::string name;
  Bicomplex lhs;
  Bicomplex rhs;
  double constant = 1.0;
  double reference = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  ReportConfig config;

  [[nodiscard]] bool passes(double tol) const { return rel_residual <= tol; }
};

IdentityReport make_report(std::string name, const Bicomplex& lhs, const Bicomplex& rhs,
                           ReportConfig config, double constant = 1.0, double reference = 0.0);

void to_json(nlohmann::json& j, const IdentityReport& r);

/// Serializes with every floating-point number printed as %.17g, sorted keys,
/// two-space indentation.
void write_json(std::ostream& os, const nlohmann::json& j);
std::string dump_json(const nlohmann::json& j);

/// %.17g, with non-finite values spelled as JSON strings.
std::string format_double(double v);

}  // namespace bcfwt
