#include "bcfwt/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bcfwt {

IdentityReport make_report(std::string name, const Bicomplex& lhs, const Bicomplex& rhs,
                           ReportConfig config, double constant, double reference) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant = constant;
  r.reference = reference;
  r.config = std::move(config);
  r.abs_residual = coordinate_norm(lhs - constant * rhs);
  const double denom =
      std::max({coordinate_norm(lhs), std::abs(constant) * coordinate_norm(rhs), reference, 1e-300});
  r.rel_residual = r.abs_residual / denom;
  return r;
}

void to_json(nlohmann::json& j, const IdentityReport& r) {
  j = nlohmann::json{
      {"name", r.name},
      {"lhs", r.lhs},
      {"rhs", r.rhs},
      {"constant", r.constant},
      {"reference", r.reference},
      {"abs_residual", r.abs_residual},
      {"rel_residual", r.rel_residual},
      {"config",
       {{"sigma", r.config.sigma},
        {"order1d", r.config.order1d},
        {"order2d", r.config.order2d},
        {"order4d", r.config.order4d},
        {"indices", r.config.indices}}},
  };
}

std::string format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_value(std::ostream& os, const nlohmann::json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << nlohmann::json(it.key()).dump() << ": ";
        write_value(os, it.value(), depth + 1);
      }
      os << "\n" << close << "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Short numeric arrays stay on one line.
      const bool flat = j.size() <= 4 && std::all_of(j.begin(), j.end(), [](const auto& e) {
                          return e.is_number();
                        });
      if (flat) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_value(os, j[i], depth + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_value(os, j[i], depth + 1);
      }
      os << "\n" << close << "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace

void write_json(std::ostream& os, const nlohmann::json& j) {
  write_value(os, j, 0);
  os << "\n";
}

std::string dump_json(const nlohmann::json& j) {
  std::ostringstream os;
  write_json(os, j);
  return os.str();
}

}  // namespace bcfwt
