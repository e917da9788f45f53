#pragma once

// Verification suites and grid evaluation shared by the command-line tool and
// the acceptance binary.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bcfwt/bargmann.hpp"
#include "json.hpp"

namespace bcfwt {

/// SplitMix64: small, portable and seedable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform on {0, ..., n-1}.
  int index(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

struct AxisSpec {
  std::string name;
  double min = -2.0;
  double max = 2.0;
  int count = 5;

  [[nodiscard]] std::vector<double> values() const;
};

/// "p:-2:2:5,q:-1:1:3" (name:min:max:count per axis, any order, unnamed axes
/// keep the default [-2, 2] x 5) or a bare count "7" applied to every axis.
/// Throws std::invalid_argument naming the offending token.
std::vector<AxisSpec> parse_grid(const std::string& spec, const std::vector<std::string>& names);

struct RunConfig {
  double sigma = 1.0;
  QuadratureOrders orders;
  double tol = 1e-8;
  std::uint64_t seed = 7;
  std::string grid;
  std::string out;       // empty: stdout
  std::string format = "json";

  // suite and target parameters
  std::string family = "four";  // gram: phi | psi | four
  int maxorder = -1;            // gram: default per family
  std::string variant = "both"; // kernel: printed | corrected | both
  int m = 0, n = 0, r = 0, s = 0, mp = 0, np = 0;
  std::string W = "0";          // kernel eval: "x1,y1,x2,y2" or "0"
  std::string function = "psi_poly";  // polyorder builtin
  std::string direction = "star";
  int order = 0;
  double h = 1e-2;
  double alpha = 1.0;           // hermite eval
};

struct SuiteResult {
  std::string suite;
  std::vector<IdentityReport> reports;
  nlohmann::json extra = nlohmann::json::object();
  bool pass = true;
  /// Index of the first report above tolerance, or -1.
  long first_failure = -1;
};

/// Suites: closedform, moyal1d, moyal2d, elementary, norms, gram, kernel,
/// isometry, polyorder, ledger. Throws std::invalid_argument for an unknown
/// name.
/// polyorder judges its reports at max(tol, 1e-4).
SuiteResult run_verify(const std::string& suite, const RunConfig& cfg);
std::vector<std::string> suite_names();

/// Finite-difference order probe of one builtin function (cfg.function:
/// psi_poly with indices (m, n), companion_power or conj_companion_power of
/// degree n) along cfg.direction at derivative order cfg.order + 1, at five
/// seeded points. Each report compares the derivative against zero with unit
/// reference, so the residual is the derivative magnitude.
SuiteResult run_polyorder_probe(const RunConfig& cfg);

nlohmann::json suite_json(const SuiteResult& r, const RunConfig& cfg);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Targets: fwt1d, fwt2d, fwtbc1d, fwtbc2d, phi, psi, fourindex, kernel,
/// hermite. Value columns are z1.re, z1.im, z2.re, z2.im (hermite: re, im).
Table run_eval(const std::string& target, const RunConfig& cfg);
std::vector<std::string> eval_targets();

void write_csv(std::ostream& os, const Table& t);
nlohmann::json table_json(const std::string& target, const Table& t);

/// Parses "0" or "x1,y1,x2,y2".
Bicomplex parse_bicomplex(const std::string& text);
Direction parse_direction(const std::string& text);

}  // namespace bcfwt
