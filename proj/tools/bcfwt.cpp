// bcfwt: verification suites and grid evaluation for the bicomplex
// Fourier-Wigner transforms.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bcfwt/suites.hpp"

using namespace bcfwt;

namespace {

struct Options {
  RunConfig cfg;
  std::string orders;  // "o1,o2,o4"
  std::string suite;
  std::string target;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--sigma", o.cfg.sigma, "scale parameter sigma > 0")->check(CLI::PositiveNumber);
  app->add_option("--order1d", o.cfg.orders.order1d, "Gauss-Hermite order on R")->check(CLI::Range(2, 256));
  app->add_option("--order2d", o.cfg.orders.order2d, "per-axis order on R^2")->check(CLI::Range(2, 256));
  app->add_option("--order4d", o.cfg.orders.order4d, "per-axis order on BC ~ R^4")->check(CLI::Range(2, 256));
  app->add_option("--orders", o.orders, "order1d,order2d,order4d");
  app->add_flag("--force", o.cfg.orders.force, "lift the node budget");
  app->add_option("--seed", o.cfg.seed, "seed for random draws");
  app->add_option("--out", o.cfg.out, "output path (default stdout)");
  app->add_option("--format", o.cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void add_indices(CLI::App* app, Options& o) {
  app->add_option("--m", o.cfg.m);
  app->add_option("--n", o.cfg.n);
  app->add_option("--r", o.cfg.r);
  app->add_option("--s", o.cfg.s);
  app->add_option("--mp", o.cfg.mp);
  app->add_option("--np", o.cfg.np);
}

void add_verify_options(CLI::App* app, Options& o) {
  app->add_option("--tol", o.cfg.tol, "relative tolerance")->check(CLI::PositiveNumber);
  app->add_option("--family", o.cfg.family, "gram family")->check(CLI::IsMember({"phi", "psi", "four"}));
  app->add_option("--maxorder", o.cfg.maxorder, "gram: highest index");
  app->add_option("--variant", o.cfg.variant, "kernel variant")
      ->check(CLI::IsMember({"printed", "corrected", "both"}));
  app->add_option("--h", o.cfg.h, "finite-difference step");
}

void add_eval_options(CLI::App* app, Options& o) {
  app->add_option("--grid", o.cfg.grid, "name:min:max:count,... or a bare count");
  add_indices(app, o);
  app->add_option("--W", o.cfg.W, "kernel point x1,y1,x2,y2 or 0");
  app->add_option("--variant", o.cfg.variant, "kernel variant")
      ->check(CLI::IsMember({"printed", "corrected"}));
  app->add_option("--alpha", o.cfg.alpha, "hermite scale")->check(CLI::PositiveNumber);
}

void apply_orders(Options& o) {
  if (o.orders.empty()) return;
  std::vector<int> v;
  std::stringstream ss(o.orders);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("--orders: cannot parse '" + tok + "'");
    }
  }
  if (v.size() != 3) throw std::invalid_argument("--orders: expected order1d,order2d,order4d");
  o.cfg.orders.order1d = v[0];
  o.cfg.orders.order2d = v[1];
  o.cfg.orders.order4d = v[2];
}

template <class Writer>
void emit(const RunConfig& cfg, Writer write) {
  if (cfg.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + cfg.out + "' for writing");
  write(f);
}

int finish_suite(const SuiteResult& r, const RunConfig& cfg, bool always_zero = false) {
  emit(cfg, [&](std::ostream& os) { write_json(os, suite_json(r, cfg)); });
  std::fprintf(stderr, "%s: %s, %zu reports\n", r.suite.c_str(), r.pass ? "pass" : "FAIL", r.reports.size());
  if (!r.pass && r.first_failure >= 0) {
    std::cerr << "first failure:\n" << dump_json(nlohmann::json(r.reports[r.first_failure])) << "\n";
  }
  return (r.pass || always_zero) ? 0 : 1;
}

int run_table(const std::string& target, const RunConfig& cfg) {
  const Table t = run_eval(target, cfg);
  emit(cfg, [&](std::ostream& os) {
    if (cfg.format == "csv") {
      write_csv(os, t);
    } else {
      write_json(os, table_json(target, t));
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicomplex Fourier-Wigner transforms: verification and evaluation"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  Options o;
  int status = 0;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suites;
  for (const auto& s : suite_names()) suites += (suites.empty() ? "" : "|") + s;
  verify->add_option("suite", o.suite, suites)->required()->check(CLI::IsMember(suite_names()));
  add_common(verify, o);
  add_verify_options(verify, o);
  verify->callback([&] {
    apply_orders(o);
    status = finish_suite(run_verify(o.suite, o.cfg), o.cfg, o.suite == "ledger");
  });

  auto* eval = app.add_subcommand("eval", "evaluate a target on a grid");
  eval->add_option("target", o.target)->required()->check(CLI::IsMember(eval_targets()));
  add_common(eval, o);
  add_eval_options(eval, o);
  eval->callback([&] {
    apply_orders(o);
    status = run_table(o.target, o.cfg);
  });

  auto* fwt = app.add_subcommand("fwt", "transform evaluation");
  fwt->require_subcommand(1);
  for (auto [name, target] : {std::pair{"eval1d", "fwt1d"}, std::pair{"eval2d", "fwt2d"},
                              std::pair{"evalbc1d", "fwtbc1d"}, std::pair{"evalbc2d", "fwtbc2d"}}) {
    auto* sub = fwt->add_subcommand(name, std::string("evaluate ") + target + " on a grid");
    add_common(sub, o);
    add_eval_options(sub, o);
    const std::string t = target;
    sub->callback([&o, &status, t] {
      apply_orders(o);
      status = run_table(t, o.cfg);
    });
  }

  auto* hermite = app.add_subcommand("hermite", "complex Hermite functions");
  hermite->require_subcommand(1);
  auto* heval = hermite->add_subcommand("eval", "h^alpha_{m,n} on a grid of z = x + i y");
  add_common(heval, o);
  add_eval_options(heval, o);
  heval->callback([&] {
    if (o.cfg.format == "json" && o.cfg.out.empty()) o.cfg.format = "csv";
    status = run_table("hermite", o.cfg);
  });

  auto* bargmann = app.add_subcommand("bargmann", "companion Bargmann-space checks");
  bargmann->require_subcommand(1);
  auto* gram = bargmann->add_subcommand("gram", "Gram matrix of a basis family");
  add_common(gram, o);
  add_verify_options(gram, o);
  gram->callback([&] {
    apply_orders(o);
    if (o.cfg.tol == 1e-8) o.cfg.tol = 1e-6;
    status = finish_suite(run_verify("gram", o.cfg), o.cfg);
  });
  auto* kernel = bargmann->add_subcommand("kernel-test", "reproducing-kernel adjudication");
  add_common(kernel, o);
  add_verify_options(kernel, o);
  kernel->callback([&] {
    apply_orders(o);
    if (o.cfg.tol == 1e-8) o.cfg.tol = 1e-6;
    status = finish_suite(run_verify("kernel", o.cfg), o.cfg);
  });
  auto* poly = bargmann->add_subcommand("polyorder", "finite-difference polyanalytic order probe");
  add_common(poly, o);
  add_indices(poly, o);
  poly->add_option("--f", o.cfg.function, "psi_poly | companion_power | conj_companion_power")
      ->check(CLI::IsMember({"psi_poly", "companion_power", "conj_companion_power"}));
  poly->add_option("--direction", o.cfg.direction)->check(CLI::IsMember({"star", "bar", "dagger"}));
  poly->add_option("--order", o.cfg.order, "k: checks the (k+1)-st derivative")->check(CLI::NonNegativeNumber);
  poly->add_option("--h", o.cfg.h, "finite-difference step");
  poly->add_option("--tol", o.cfg.tol, "vanishing threshold")->check(CLI::PositiveNumber);
  poly->callback([&] {
    if (o.cfg.tol == 1e-8) o.cfg.tol = 1e-4;
    status = finish_suite(run_polyorder_probe(o.cfg), o.cfg);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return status;
}
