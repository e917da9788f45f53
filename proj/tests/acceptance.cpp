// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "bcfwt/suites.hpp"

using namespace bcfwt;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double worst(const SuiteResult& r) {
  double w = 0.0;
  for (const auto& x : r.reports) w = std::max(w, x.rel_residual);
  return w;
}

Outcome suite_at(const std::string& suite, RunConfig cfg, double tol) {
  cfg.tol = tol;
  const SuiteResult r = run_verify(suite, cfg);
  return {r.pass, std::to_string(r.reports.size()) + " reports, max rel " + fmt("%.3g", worst(r)) +
                      " (tol " + fmt("%.0e", tol) + ")"};
}

}  // namespace

int main() {
  RunConfig base;  // sigma 1, orders 80/48/24, seed 7

  const std::vector<Criterion> criteria{
      {1, "closed-form action vs quadrature", 30, [&] { return suite_at("closedform", base, 1e-8); }},
      {2, "1-d bicomplex Moyal identity", 180, [&] { return suite_at("moyal1d", base, 1e-8); }},
      {3, "elementary-action formula", 60, [&] { return suite_at("elementary", base, 1e-8); }},
      {4, "basis norms of phi_n", 120, [&] { return suite_at("norms", base, 1e-6); }},
      {5, "four-index Gram matrix", 300,
       [&] {
         RunConfig c = base;
         c.family = "four";
         c.maxorder = 1;
         c.tol = 1e-6;
         const SuiteResult r = run_verify("gram", c);
         const double dev = r.extra.at("normalized_deviation").get<double>();
         const std::size_t n = r.extra.at("labels").size();
         return Outcome{r.pass && n == 16 && dev <= 1e-6,
                        std::to_string(n) + " functions, max |G/sqrt(d d) - I| " + fmt("%.3g", dev) + " (tol 1e-06)"};
       }},
      {6, "isometry of S_0, S_1, S_2", 180, [&] { return suite_at("isometry", base, 1e-6); }},
      {7, "reproducing-kernel adjudication", 120,
       [&] {
         RunConfig c = base;
         c.variant = "both";
         c.tol = 1e-6;
         const SuiteResult r = run_verify("kernel", c);
         const auto& v = r.extra.at("variants");
         int passing = 0;
         for (const auto& [name, info] : v.items()) passing += info.at("passes").get<bool>() ? 1 : 0;
         return Outcome{r.pass && passing == 1,
                        std::to_string(passing) + " variant(s) reproduce, normative " +
                            r.extra.at("normative").get<std::string>() + " (max rel " + fmt("%.3g", worst(r)) +
                            ", tol 1e-06)"};
       }},
      {8, "polyanalytic orders of psi_{m,n}", 30,
       [&] {
         const SuiteResult r = run_verify("polyorder", base);
         double vanish = 0.0, nonvanish = 1e300;
         for (const auto& x : r.reports) {
           if (x.name == "polyorder.psi.vanishing") vanish = std::max(vanish, x.abs_residual);
         }
         nonvanish = r.extra.at("min_nonvanishing_residual").get<double>();
         const bool ok = r.pass && vanish <= 1e-4 && nonvanish >= 1e-2;
         return Outcome{ok, "order m residual " + fmt("%.3g", vanish) + " (<= 1e-4), order m-1 residual " +
                                fmt("%.3g", nonvanish) + " (>= 1e-2)"};
       }},
      {9, "direct/split prefactor ratio is constant", 60,
       [&] {
         const SuiteResult r = run_verify("ledger", base);
         const auto& lit = r.extra.at("direct_split").at("literal");
         const double drift = lit.at("drift").get<double>();
         const double re = lit.at("ratio")[0].get<double>(), im = lit.at("ratio")[1].get<double>();
         return Outcome{drift <= 1e-8, "ratio " + fmt("%.17g", re) + fmt("%+.3gi", im) + ", drift " +
                                           fmt("%.3g", drift) + " (<= 1e-08) over " +
                                           std::to_string(lit.at("samples").get<long>()) + " samples"};
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_s;
    const bool ok = o.pass && in_time;
    all = all && ok;
    std::printf("[%s] %d %s: %s; %.2f s (limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs, c.limit_s);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
