#include "bcfwt/suites.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace bcfwt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPolyorderTol = 1e-4;

void finish(SuiteResult& r, double tol) {
  r.first_failure = -1;
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    if (!r.reports[i].passes(tol)) {
      r.first_failure = static_cast<long>(i);
      r.pass = false;
      break;
    }
  }
}

double max_rel(const std::vector<IdentityReport>& reports) {
  double worst = 0.0;
  for (const auto& r : reports) worst = std::max(worst, r.rel_residual);
  return worst;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Bicomplex random_point(SplitMix64& rng, double half_width) {
  const double x1 = rng.uniform(-half_width, half_width);
  const double y1 = rng.uniform(-half_width, half_width);
  const double x2 = rng.uniform(-half_width, half_width);
  const double y2 = rng.uniform(-half_width, half_width);
  return {cplx(x1, y1), cplx(x2, y2)};
}

// Companion coordinates with moduli in [lo, hi].
Bicomplex random_annulus_point(SplitMix64& rng, double lo, double hi) {
  const cplx a = std::polar(rng.uniform(lo, hi), rng.uniform(0.0, 2.0 * kPi));
  const cplx b = std::polar(rng.uniform(lo, hi), rng.uniform(0.0, 2.0 * kPi));
  return {a, b};
}

cplx random_coefficient(SplitMix64& rng) {
  const double re = rng.uniform(-1.0, 1.0);
  const double im = rng.uniform(-1.0, 1.0);
  return {re, im};
}

// sum_k c_k h^s_k with k <= 3 on each component.
BCFunction1D random_combination(SplitMix64& rng, Scale sigma) {
  std::array<cplx, 4> cp, cm;
  for (auto& c : cp) c = random_coefficient(rng);
  for (auto& c : cm) c = random_coefficient(rng);
  auto make = [sigma](std::array<cplx, 4> c) {
    return RealFn([c, sigma](double t) {
      cplx v = 0.0;
      for (int k = 0; k < 4; ++k) v += c[k] * hermite_real(k, sigma, t);
      return v;
    });
  };
  return {make(cp), make(cm)};
}

// ---- closedform ------------------------------------------------------------

SuiteResult suite_closedform(const RunConfig& cfg) {
  SuiteResult res;
  res.suite = "closedform";
  const std::vector<double> grid{-2.0, -1.0, 0.0, 1.0, 2.0};
  for (double sv : {0.5, 1.0, 2.0}) {
    const Scale sigma(sv);
    const TensorRule rule = transform_rule_1d(sigma, cfg.orders);
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        const auto vals = fwt1d_grid(hermite_fn(m, sigma), hermite_fn(n, sigma), sigma, grid, grid, rule);
        const double ref = std::sqrt(sv / (2.0 * kPi)) *
                           std::sqrt(hermite_real_norm_sq(m, sigma) * hermite_real_norm_sq(n, sigma));
        for (std::size_t i = 0; i < grid.size(); ++i)
          for (std::size_t k = 0; k < grid.size(); ++k) {
            const cplx closed = fwt1d_hermite_closed(m, n, sigma, {grid[i], grid[k]});
            res.reports.push_back(make_report("closedform", vals[i * grid.size() + k], closed,
                                              report_config(sigma, cfg.orders, {m, n}), 1.0, ref));
          }
      }
    }
  }
  res.extra["max_rel_residual"] = max_rel(res.reports);
  return res;
}

// ---- Moyal ----------------------------------------------------------------

SuiteResult suite_moyal1d(const RunConfig& cfg) {
  SuiteResult res;
  res.suite = "moyal1d";
  const Scale sigma(cfg.sigma);
  const TensorRule rule4d = phase_space_rule(sigma, cfg.orders);
  const TensorRule rule1d = transform_rule_1d(sigma, cfg.orders);
  SplitMix64 rng(cfg.seed);
  for (int q = 0; q < 20; ++q) {
    std::array<int, 8> idx{};
    for (int& v : idx) v = rng.index(4);
    auto rep = moyal_check_1d(elementary(idx[0], idx[1], sigma), elementary(idx[2], idx[3], sigma),
                              elementary(idx[4], idx[5], sigma), elementary(idx[6], idx[7], sigma),
                              sigma, rule4d, rule1d);
    rep.config = report_config(sigma, cfg.orders, std::vector<int>(idx.begin(), idx.end()));
    res.reports.push_back(rep);
  }
  res.extra["max_rel_residual"] = max_rel(res.reports);
  return res;
}

SuiteResult suite_moyal2d(const RunConfig& cfg) {
  SuiteResult res;
  res.suite = "moyal2d";
  const Scale sigma(cfg.sigma);
  const TensorRule rule4d = phase_space_rule(sigma, cfg.orders);
  const TensorRule rule2d = transform_rule_2d(sigma, cfg.orders);
  auto input = [&](int a, int b, int c, int d) {
    return BCFunction2D{complex_hermite_fn(HermiteIndex(a, b), sigma),
                        complex_hermite_fn(HermiteIndex(c, d), sigma)};
  };
  auto add = [&](const std::array<int, 16>& i) {
    auto rep = moyal_check_2d(input(i[0], i[1], i[2], i[3]), input(i[4], i[5], i[6], i[7]),
                              input(i[8], i[9], i[10], i[11]), input(i[12], i[13], i[14], i[15]),
                              sigma, rule4d, rule2d);
    rep.config = report_config(sigma, cfg.orders, std::vector<int>(i.begin(), i.end()));
    res.reports.push_back(rep);
  };
  add({});
  SplitMix64 rng(cfg.seed);
  for (int q = 0; q < 10; ++q) {
    std::array<int, 16> idx{};
    for (int& v : idx) v = rng.index(2);
    add(idx);
  }
  res.extra["constant"] = moyal_2d_constant(sigma);
  res.extra["max_rel_residual"] = max_rel(res.reports);
  return res;
}

// ---- elementary actions ------------------------------------------------------

SuiteResult suite_elementary(const RunConfig& cfg) {
  SuiteResult res;
  res.suite = "elementary";
  const Scale sigma(cfg.sigma);
  const TensorRule rule1d = transform_rule_1d(sigma, cfg.orders);
  SplitMix64 rng(cfg.seed);
  std::vector<Bicomplex> points;
  for (int i = 0; i < 20; ++i) points.push_back(random_point(rng, 1.5));
  for (int code = 0; code < 81; ++code) {
    const int m = code / 27, n = (code / 9) % 3, r = (code / 3) % 3, s = code % 3;
    const auto phi = elementary(m, n, sigma);
    const auto psi = elementary(r, s, sigma);
    const double ref =
        (cfg.sigma / kPi) *
        std::max(std::sqrt(hermite_real_norm_sq(m, sigma) * hermite_real_norm_sq(r, sigma)),
                 std::sqrt(hermite_real_norm_sq(n, sigma) * hermite_real_norm_sq(s, sigma)));
    for (const auto& Z : points) {
      res.reports.push_back(make_report("elementary", fwt_bc_1d(phi, psi, sigma, Z, rule1d),
                                        fwt_bc_1d_hermite(m, n, r, s, sigma, Z),
                                        report_config(sigma, cfg.orders, {m, n, r, s}), 1.0, ref));
    }
  }
  res.extra["max_rel_residual"] = max_rel(res.reports);
  return res;
}

// ---- norms of phi_n -----------------------------------------------------------

SuiteResult suite_norms(const RunConfig& cfg) {
  SuiteResult res;
  res.suite = "norms";
  for (double sv : {1.0, 2.0}) {
    const Scale sigma(sv);
    const TensorRule rule4d = phase_space_rule(sigma, cfg.orders);
    std::vector<GridSamples> phis;
    for (int n = 0; n <= 4; ++n) {
      phis.push_back(sample_4d(rule4d, [&](const Bicomplex& Z) { return phi_n(n, sigma, Z); }));
    }
    const GramMatrix g = gram_matrix(phis, rule4d);
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        const double dm = hermite_real_norm_sq(m, sigma), dn = hermite_real_norm_sq(n, sigma);
        if (m == n) {
          res.reports.push_back(make_report("norms.diagonal", g.at(m, m), Bicomplex(dm),
                                            report_config(sigma, cfg.orders, {m}), 1.0, 0.0));
        } else if (m < n) {
          res.reports.push_back(make_report("norms.orthogonal", g.at(m, n), Bicomplex(0.0),
                                            report_config(sigma, cfg.orders, {m, n}), 1.0,
                                            std::sqrt(dm * dn)));
        }
      }
  }
  res.extra["max_rel_residual"] = max_rel(res.reports);
  return res;
}

// ---- Gram matrices -----------------------------------------------------------

nlohmann::json gram_json(const GramMatrix& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < g.size; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < g.size; ++j) row.push_back(g.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

SuiteResult suite_gram(const RunConfig& cfg) {
  SuiteResult res;
  res.suite = "gram";
  const Scale sigma(cfg.sigma);
  const TensorRule rule4d = phase_space_rule(sigma, cfg.orders);
  const TensorRule rule2d = transform_rule_2d(sigma, cfg.orders);
  const GridAxes axes = axes_of(rule4d);
  std::vector<GridSamples> fns;
  std::vector<std::vector<int>> labels;
  std::vector<double> expected;  // diagonal values, phi and psi families

  if (cfg.family == "phi") {
    const int maxo = cfg.maxorder < 0 ? 4 : cfg.maxorder;
    for (int n = 0; n <= maxo; ++n) {
      fns.push_back(sample_grid(axes, [&](const Bicomplex& Z) { return phi_n(n, sigma, Z); }));
      labels.push_back({n});
      expected.push_back(hermite_real_norm_sq(n, sigma));
    }
  } else if (cfg.family == "psi") {
    const int maxo = cfg.maxorder < 0 ? 2 : cfg.maxorder;
    for (int m = 0; m <= maxo; ++m)
      for (int n = 0; n <= maxo; ++n) {
        const HermiteIndex idx(m, n);
        fns.push_back(sample_grid(axes, [&](const Bicomplex& Z) { return psi_mn(idx, sigma, Z); }));
        labels.push_back({m, n});
        expected.push_back(kPi / (2.0 * cfg.sigma) * hermite_complex_norm_sq(idx, sigma.half()));
      }
  } else if (cfg.family == "four") {
    const int maxo = cfg.maxorder < 0 ? 1 : cfg.maxorder;
    const int D = maxo + 1;
    for (int code = 0; code < D * D * D * D; ++code) {
      const FourIndex idx(code / (D * D * D), (code / (D * D)) % D, (code / D) % D, code % D);
      fns.push_back(sample_four_index(idx, sigma, axes, rule2d));
      labels.push_back(idx.as_vector());
    }
  } else {
    throw std::invalid_argument("gram: --family must be phi, psi or four, got '" + cfg.family + "'");
  }

  const GramMatrix g = gram_matrix(fns, rule4d);
  std::vector<double> d(g.size);
  for (std::size_t i = 0; i < g.size; ++i) d[i] = scalar_norm_sq(g.at(i, i));
  for (std::size_t i = 0; i < g.size; ++i)
    for (std::size_t j = 0; j < g.size; ++j) {
      std::vector<int> ind = labels[i];
      ind.insert(ind.end(), labels[j].begin(), labels[j].end());
      const ReportConfig rc = report_config(sigma, cfg.orders, ind);
      if (cfg.family == "four") {
        const Bicomplex normalized = (1.0 / std::sqrt(d[i] * d[j])) * g.at(i, j);
        res.reports.push_back(
            make_report("gram.four", normalized, Bicomplex(i == j ? 1.0 : 0.0), rc, 1.0, 1.0));
      } else if (i == j) {
        res.reports.push_back(
            make_report("gram." + cfg.family + ".diagonal", g.at(i, i), Bicomplex(expected[i]), rc));
      } else {
        res.reports.push_back(make_report("gram." + cfg.family + ".orthogonal", g.at(i, j),
                                          Bicomplex(0.0), rc, 1.0, std::sqrt(d[i] * d[j])));
      }
    }
  res.extra["family"] = cfg.family;
  res.extra["labels"] = labels;
  res.extra["gram"] = gram_json(g);
  res.extra["normalized_deviation"] = normalized_gram_deviation(g);
  res.extra["max_rel_residual"] = max_rel(res.reports);
  return res;
}

// ---- reproducing kernel --------------------------------------------------------

struct KernelRun {
  std::vector<IdentityReport> reproducing;
  std::vector<IdentityReport> symmetry;
  bool passes = false;
};

KernelRun kernel_run(KernelVariant variant, const RunConfig& cfg, double tol) {
  const Scale sigma(cfg.sigma);
  const TensorRule rule4d = phase_space_rule(sigma, cfg.orders);
  const GridAxes axes = axes_of(rule4d);
  const std::string tag = variant == KernelVariant::corrected ? "corrected" : "printed";
  SplitMix64 rng(cfg.seed);
  std::vector<Bicomplex> Ws;
  for (int i = 0; i < 5; ++i) Ws.push_back(random_point(rng, 0.75));
  std::vector<GridSamples> phis;
  for (int n = 0; n <= 3; ++n) {
    phis.push_back(sample_grid(axes, [&](const Bicomplex& Z) { return phi_n(n, sigma, Z); }));
  }
  KernelRun out;
  const double knorm = kernel_norm_sq(sigma);
  for (std::size_t w = 0; w < Ws.size(); ++w) {
    const Bicomplex W = Ws[w];
    const auto K = sample_grid(axes, [&](const Bicomplex& Z) { return kernel_K(sigma, Z, W, variant); });
    for (int n = 0; n <= 3; ++n) {
      const Bicomplex lhs = (1.0 / knorm) * inner_product_samples(rule4d, phis[n], K, Measure::bicomplex);
      out.reproducing.push_back(make_report("kernel." + tag + ".reproducing", lhs, phi_n(n, sigma, W),
                                            report_config(sigma, cfg.orders, {n, static_cast<int>(w)})));
    }
  }
  for (int i = 0; i < 20; ++i) {
    const Bicomplex Z = random_point(rng, 1.0);
    const Bicomplex W = random_point(rng, 1.0);
    out.symmetry.push_back(make_report("kernel." + tag + ".hermitian", kernel_K(sigma, Z, W, variant),
                                       kernel_K(sigma, W, Z, variant).star(),
                                       report_config(sigma, cfg.orders, {i})));
  }
  out.passes = true;
  for (const auto& r : out.reproducing) out.passes = out.passes && r.passes(tol);
  for (const auto& r : out.symmetry) out.passes = out.passes && r.passes(tol);
  return out;
}

SuiteResult suite_kernel(const RunConfig& cfg) {
  SuiteResult res;
  res.suite = "kernel";
  std::vector<std::pair<std::string, KernelVariant>> variants;
  if (cfg.variant == "both" || cfg.variant == "printed") variants.emplace_back("printed", KernelVariant::printed);
  if (cfg.variant == "both" || cfg.variant == "corrected") {
    variants.emplace_back("corrected", KernelVariant::corrected);
  }
  if (variants.empty()) {
    throw std::invalid_argument("kernel: --variant must be printed, corrected or both, got '" +
                                cfg.variant + "'");
  }
  std::map<std::string, KernelRun> runs;
  nlohmann::json summary = nlohmann::json::object();
  std::vector<std::string> passing;
  for (const auto& [name, v] : variants) {
    runs[name] = kernel_run(v, cfg, cfg.tol);
    summary[name] = {{"reproducing_max_rel", max_rel(runs[name].reproducing)},
                     {"hermitian_max_rel", max_rel(runs[name].symmetry)},
                     {"passes", runs[name].passes}};
    if (runs[name].passes) passing.push_back(name);
  }
  res.extra["variants"] = summary;
  if (variants.size() == 2) {
    // Adjudication: exactly one variant may reproduce.
    res.extra["normative"] = passing.size() == 1 ? passing.front() : "undetermined";
    const std::string keep = passing.size() == 1 ? passing.front() : "";
    for (const auto& [name, run] : runs) {
      if (!keep.empty() && name != keep) continue;
      res.reports.insert(res.reports.end(), run.reproducing.begin(), run.reproducing.end());
      res.reports.insert(res.reports.end(), run.symmetry.begin(), run.symmetry.end());
    }
    res.pass = passing.size() == 1;
  } else {
    const auto& run = runs.begin()->second;
    res.reports = run.reproducing;
    res.reports.insert(res.reports.end(), run.symmetry.begin(), run.symmetry.end());
  }
  return res;
}

// ---- isometries ---------------------------------------------------------------

SuiteResult suite_isometry(const RunConfig& cfg) {
  SuiteResult res;
  res.suite = "isometry";
  const Scale sigma(cfg.sigma);
  const TensorRule rule4d = phase_space_rule(sigma, cfg.orders);
  const TensorRule rule1d = transform_rule_1d(sigma, cfg.orders);
  const GridAxes axes = axes_of(rule4d);
  SplitMix64 rng(cfg.seed);
  std::vector<BCFunction1D> inputs;
  for (int i = 0; i < 10; ++i) inputs.push_back(random_combination(rng, sigma));
  for (int n = 0; n <= 2; ++n) {
    for (int i = 0; i < 10; ++i) {
      const auto S = sample_Sn(n, inputs[i], sigma, axes, rule1d);
      const Bicomplex lhs = inner_product_samples(rule4d, S, S, Measure::bicomplex);
      const Bicomplex rhs = inner_product_bc_1d(inputs[i], inputs[i], rule1d);
      res.reports.push_back(make_report("isometry.S" + std::to_string(n), lhs, rhs,
                                        report_config(sigma, cfg.orders, {n, i})));
    }
  }
  res.extra["max_rel_residual"] = max_rel(res.reports);
  return res;
}

// ---- polyanalytic orders ------------------------------------------------------

SuiteResult suite_polyorder(const RunConfig& cfg) {
  SuiteResult res;
  res.suite = "polyorder";
  const Scale sigma(cfg.sigma);
  const double alpha = 0.5 * cfg.sigma;
  SplitMix64 rng(cfg.seed);
  std::vector<Bicomplex> points;
  for (int i = 0; i < 5; ++i) points.push_back(random_annulus_point(rng, 0.8, 1.5));
  double min_nonvanishing = std::numeric_limits<double>::infinity();
  double max_vanishing = 0.0;

  for (int m = 1; m <= 3; ++m) {
    for (int a = 0; a <= 1; ++a) {
      const HermiteIndex idx(a, m);
      const BicomplexFn f = [idx, sigma](const Bicomplex& Z) { return psi_mn_polynomial(idx, sigma, Z); };
      for (std::size_t p = 0; p < points.size(); ++p) {
        const Bicomplex Z0 = points[p];
        const ReportConfig rc = report_config(sigma, {}, {a, m, static_cast<int>(p)});
        const OrderCheck v = polyanalytic_order(f, Direction::star, m, Z0, cfg.h);
        res.reports.push_back(make_report("polyorder.psi.vanishing", v.derivative, Bicomplex(0.0), rc, 1.0, 1.0));
        max_vanishing = std::max(max_vanishing, v.residual);
        const OrderCheck nv = polyanalytic_order(f, Direction::star, m - 1, Z0, cfg.h);
        const double c = factorial(m) * std::pow(alpha, a + m);
        const Companion w = companion(Z0);
        const Bicomplex expect = Bicomplex::from_idempotent(c * std::pow(w.w_plus, a), c * std::pow(w.w_minus, a));
        res.reports.push_back(make_report("polyorder.psi.nonvanishing", nv.derivative, expect, rc));
        min_nonvanishing = std::min(min_nonvanishing, nv.residual);
      }
    }
  }

  // Companion monomials: holomorphic powers and conjugate cubes.
  const BicomplexFn power = [](const Bicomplex& Z) {
    const Companion c = companion(Z);
    return Bicomplex::from_idempotent(std::pow(c.w_plus, 3), std::pow(c.w_minus, 3));
  };
  const BicomplexFn conj_cube = [](const Bicomplex& Z) {
    const Companion c = companion(Z);
    return Bicomplex::from_idempotent(std::pow(std::conj(c.w_plus), 3), std::pow(std::conj(c.w_minus), 3));
  };
  for (std::size_t p = 0; p < points.size(); ++p) {
    const Bicomplex Z0 = points[p];
    const ReportConfig rc = report_config(sigma, {}, {3, static_cast<int>(p)});
    for (Direction d : {Direction::bar, Direction::dagger}) {
      const OrderCheck v = polyanalytic_order(power, d, 0, Z0, cfg.h);
      res.reports.push_back(make_report(d == Direction::bar ? "polyorder.power.bar" : "polyorder.power.dagger",
                                        v.derivative, Bicomplex(0.0), rc, 1.0, 1.0));
      max_vanishing = std::max(max_vanishing, v.residual);
    }
    const OrderCheck v3 = polyanalytic_order(conj_cube, Direction::star, 3, Z0, cfg.h);
    res.reports.push_back(make_report("polyorder.conjcube.vanishing", v3.derivative, Bicomplex(0.0), rc, 1.0, 1.0));
    max_vanishing = std::max(max_vanishing, v3.residual);
    const OrderCheck v2 = polyanalytic_order(conj_cube, Direction::star, 2, Z0, cfg.h);
    res.reports.push_back(make_report("polyorder.conjcube.nonvanishing", v2.derivative, Bicomplex(6.0), rc));
    min_nonvanishing = std::min(min_nonvanishing, v2.residual);
  }
  res.extra["max_vanishing_residual"] = max_vanishing;
  res.extra["min_nonvanishing_residual"] = min_nonvanishing;
  res.extra["nonvanishing_floor"] = 1e-2;
  res.extra["h"] = cfg.h;
  return res;
}

// ---- ledger --------------------------------------------------------------------

struct RatioSpread {
  cplx reference{std::numeric_limits<double>::quiet_NaN(), 0.0};
  double drift = 0.0;
  long samples = 0;

  void add(cplx ratio) {
    if (std::isnan(ratio.real())) return;
    if (samples == 0) reference = ratio;
    drift = std::max(drift, std::abs(ratio - reference));
    ++samples;
  }
  [[nodiscard]] nlohmann::json json() const {
    return {{"ratio", {reference.real(), reference.imag()}}, {"drift", drift}, {"samples", samples}};
  }
};

SuiteResult suite_ledger(const RunConfig& cfg) {
  SuiteResult res;
  res.suite = "ledger";
  const Scale sigma(cfg.sigma);
  const double s = cfg.sigma;
  const TensorRule rule1d = transform_rule_1d(sigma, cfg.orders);
  const TensorRule rule2d = transform_rule_2d(sigma, cfg.orders);
  const TensorRule rule4d = phase_space_rule(sigma, cfg.orders);

  // Direct defining integral vs the splitting formula.
  {
    const std::vector<double> g{-1.0, 0.25, 1.0};
    RatioSpread literal, conjugated;
    for (int code = 0; code < 81; ++code) {
      const int m = code / 27, n = (code / 9) % 3, r = (code / 3) % 3, q = code % 3;
      const auto phi = elementary(m, n, sigma);
      const auto psi = elementary(r, q, sigma);
      // Gaussian pair at the origin first, so it anchors the reference ratio.
      for (int zc = -1; zc < 81; ++zc) {
        const Bicomplex Z = zc < 0 ? Bicomplex(0.0)
                                   : Bicomplex(cplx(g[zc / 27], g[(zc / 9) % 3]), cplx(g[(zc / 3) % 3], g[zc % 3]));
        if (zc < 0 && code != 0) continue;
        const auto a = compare_direct(phi, psi, sigma, Z, rule1d, ModulationReading::literal);
        literal.add(a.ratio_plus);
        literal.add(a.ratio_minus);
        const auto b = compare_direct(phi, psi, sigma, Z, rule1d, ModulationReading::conjugated);
        conjugated.add(b.ratio_plus);
        conjugated.add(b.ratio_minus);
      }
    }
    res.extra["direct_split"] = {{"literal", literal.json()}, {"conjugated", conjugated.json()}};
    res.reports.push_back(make_report("ledger.direct_split_ratio", Bicomplex(literal.reference), Bicomplex(1.0),
                                      report_config(sigma, cfg.orders)));
  }

  // Value of the bicomplex transform of the Gaussian pair at the origin.
  {
    const auto g = elementary(0, 0, sigma);
    const Bicomplex v = fwt_bc_1d(g, g, sigma, Bicomplex(0.0), rule1d);
    res.extra["gaussian_origin"] = v;
    res.reports.push_back(make_report("ledger.gaussian_origin", v, Bicomplex(1.0 / std::sqrt(kPi)),
                                      report_config(sigma, cfg.orders)));
  }

  // Kernel variant.
  {
    RunConfig kc = cfg;
    kc.variant = "both";
    kc.tol = 1e-6;
    const SuiteResult k = suite_kernel(kc);
    res.extra["kernel"] = k.extra;
  }

  // psi_{m,n}: transform path and the full-Hermite product form against the
  // component formula.
  {
    SplitMix64 rng(cfg.seed);
    std::vector<Bicomplex> pts;
    for (int i = 0; i < 20; ++i) pts.push_back(random_point(rng, 1.0));
    RatioSpread transform, printed;
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (const auto& Z : pts) {
          const HermiteIndex idx(m, n);
          const auto base = psi_mn(idx, sigma, Z).to_idempotent();
          const auto t = psi_mn_from_transform(idx, sigma, Z).to_idempotent();
          const auto p = psi_mn_printed(idx, sigma, Z).to_idempotent();
          for (auto [num, den] : {std::pair{t.beta_plus, base.beta_plus}, std::pair{t.beta_minus, base.beta_minus}}) {
            if (std::abs(den) > 1e-4) transform.add(num / den);
          }
          for (auto [num, den] : {std::pair{p.beta_plus, base.beta_plus}, std::pair{p.beta_minus, base.beta_minus}}) {
            if (std::abs(den) > 1e-4) printed.add(num / den);
          }
        }
    res.extra["psi"] = {{"transform_over_component", transform.json()},
                        {"printed_over_component", printed.json()}};
    res.reports.push_back(make_report("ledger.psi_transform_ratio", Bicomplex(transform.reference),
                                      Bicomplex(1.0), report_config(sigma, cfg.orders)));
  }

  // S_0 on Hermite functions vs phi_n, and the integral form of S_0.
  {
    SplitMix64 rng(cfg.seed + 1);
    RatioSpread s0_phi, integral;
    for (int n = 0; n <= 3; ++n) {
      const auto h = BCFunction1D::scalar(hermite_fn(n, sigma));
      for (int i = 0; i < 10; ++i) {
        const Bicomplex Z = random_point(rng, 1.0);
        const auto a = transform_S0(h, sigma, Z, rule1d).to_idempotent();
        const auto b = phi_n(n, sigma, Z).to_idempotent();
        const auto c = transform_S0_integral(h, sigma, Z, rule1d).to_idempotent();
        s0_phi.add(a.beta_plus / b.beta_plus);
        s0_phi.add(a.beta_minus / b.beta_minus);
        integral.add(c.beta_plus / a.beta_plus);
        integral.add(c.beta_minus / a.beta_minus);
      }
    }
    res.extra["s0_over_phi"] = s0_phi.json();
    res.extra["s0_integral_over_s0"] = integral.json();
    res.extra["s0_integral_expected"] = s0_integral_constant(sigma);
    res.reports.push_back(make_report("ledger.s0_phi_ratio", Bicomplex(s0_phi.reference), Bicomplex(1.0),
                                      report_config(sigma, cfg.orders)));
    res.reports.push_back(make_report("ledger.s0_integral_ratio", Bicomplex(integral.reference),
                                      Bicomplex(s0_integral_constant(sigma)), report_config(sigma, cfg.orders)));
  }

  // Constant in the 2-d Moyal identity, measured on Gaussians.
  {
    const auto g = complex_hermite_input(HermiteIndex(0, 0), sigma);
    const auto rep = moyal_check_2d(g, g, g, g, sigma, rule4d, rule2d);
    const double measured = rep.lhs.z1().real() / rep.rhs.z1().real();
    res.extra["moyal2d_constant"] = {{"measured", measured}, {"expected", moyal_2d_constant(sigma)}};
    res.reports.push_back(make_report("ledger.moyal2d_constant", Bicomplex(measured),
                                      Bicomplex(moyal_2d_constant(sigma)), report_config(sigma, cfg.orders)));
  }

  // Prefactor between the 2-d and a product of 1-d transforms.
  {
    const PhasePoint2D pt{{0.3, -0.4}, {0.7, 0.2}};
    const auto h0 = hermite_fn(0, sigma), h1 = hermite_fn(1, sigma);
    const PlaneFn f = [&](double u, double v) { return h1(u) * h0(v); };
    const PlaneFn gg = [&](double u, double v) { return h0(u) * h1(v); };
    const cplx two = fwt2d(f, gg, sigma, pt, rule2d);
    const cplx one = fwt1d(h1, h0, sigma, {pt.X[0], pt.Y[0]}, rule1d) * fwt1d(h0, h1, sigma, {pt.X[1], pt.Y[1]}, rule1d);
    res.extra["fwt2d_over_product"] = {{"measured", std::abs(two / one)},
                                       {"expected", std::sqrt(2.0 * kPi) / s}};
  }

  // Window display of the 2-d transform.
  {
    SplitMix64 rng(cfg.seed + 2);
    RatioSpread ratio;
    const auto gauss = complex_hermite_input(HermiteIndex(0, 0), sigma);
    for (int i = 0; i < 10; ++i) {
      const int a = rng.index(2), b = rng.index(2), c = rng.index(2), d = rng.index(2);
      const BCFunction2D phi{complex_hermite_fn(HermiteIndex(a, b), sigma),
                             complex_hermite_fn(HermiteIndex(c, d), sigma)};
      const Bicomplex Z = random_point(rng, 1.0);
      const auto v = fwt_bc_2d(phi, gauss, sigma, Z, rule2d).to_idempotent();
      const auto w = window_display_2d(phi, sigma, Z, rule2d).to_idempotent();
      ratio.add(v.beta_plus / w.beta_plus);
      ratio.add(v.beta_minus / w.beta_minus);
    }
    res.extra["window_display"] = {{"transform_over_display", ratio.json()},
                                   {"expected", window_display_constant()}};
  }

  // Measure normalization: ||phi_0||^2 under Lebesgue measure over the formula.
  {
    const auto p0 = sample_4d(rule4d, [&](const Bicomplex& Z) { return phi_n(0, sigma, Z); });
    const double leb = inner_product_samples(rule4d, p0, p0, Measure::lebesgue).z1().real();
    res.extra["lebesgue_over_formula"] = leb / hermite_real_norm_sq(0, sigma);
  }

  // The ledger measures; it never fails.
  res.extra["note"] = "measured constants; exit status is always 0";
  return res;
}

using SuiteFn = std::function<SuiteResult(const RunConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"closedform", suite_closedform}, {"moyal1d", suite_moyal1d},
      {"moyal2d", suite_moyal2d},       {"elementary", suite_elementary},
      {"norms", suite_norms},           {"gram", suite_gram},
      {"kernel", suite_kernel},         {"isometry", suite_isometry},
      {"polyorder", suite_polyorder},   {"ledger", suite_ledger},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [n, f] : registry()) names.push_back(n);
  return names;
}

SuiteResult run_verify(const std::string& suite, const RunConfig& cfg) {
  for (const auto& [name, fn] : registry()) {
    if (name != suite) continue;
    SuiteResult r = fn(cfg);
    if (suite == "ledger") {
      r.pass = true;
      return r;
    }
    const bool adjudicated = r.pass;
    // Finite differences cannot resolve below ~1e-6; 1e-4 is the floor.
    finish(r, suite == "polyorder" ? std::max(cfg.tol, kPolyorderTol) : cfg.tol);
    r.pass = r.pass && adjudicated;
    if (suite == "polyorder") {
      r.pass = r.pass && r.extra["min_nonvanishing_residual"].get<double>() >= 1e-2;
    }
    return r;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

SuiteResult run_polyorder_probe(const RunConfig& cfg) {
  const Scale sigma(cfg.sigma);
  BicomplexFn f;
  if (cfg.function == "psi_poly") {
    const HermiteIndex idx(cfg.m, cfg.n);
    f = [idx, sigma](const Bicomplex& Z) { return psi_mn_polynomial(idx, sigma, Z); };
  } else if (cfg.function == "companion_power") {
    const int n = cfg.n;
    f = [n](const Bicomplex& Z) {
      const Companion c = companion(Z);
      return Bicomplex::from_idempotent(std::pow(c.w_plus, n), std::pow(c.w_minus, n));
    };
  } else if (cfg.function == "conj_companion_power") {
    const int n = cfg.n;
    f = [n](const Bicomplex& Z) {
      const Companion c = companion(Z);
      return Bicomplex::from_idempotent(std::pow(std::conj(c.w_plus), n), std::pow(std::conj(c.w_minus), n));
    };
  } else {
    throw std::invalid_argument("polyorder: unknown --f '" + cfg.function +
                                "' (psi_poly, companion_power, conj_companion_power)");
  }
  const Direction dir = parse_direction(cfg.direction);
  SuiteResult res;
  res.suite = "polyorder-probe";
  SplitMix64 rng(cfg.seed);
  for (int p = 0; p < 5; ++p) {
    const Bicomplex Z0 = random_annulus_point(rng, 0.8, 1.5);
    const OrderCheck c = polyanalytic_order(f, dir, cfg.order, Z0, cfg.h);
    res.reports.push_back(make_report("polyorder." + cfg.function + "." + cfg.direction, c.derivative,
                                      Bicomplex(0.0), report_config(sigma, {}, {cfg.m, cfg.n, cfg.order, p}),
                                      1.0, 1.0));
  }
  res.extra["function"] = cfg.function;
  res.extra["direction"] = cfg.direction;
  res.extra["order"] = cfg.order;
  finish(res, cfg.tol);
  return res;
}

nlohmann::json suite_json(const SuiteResult& r, const RunConfig& cfg) {
  nlohmann::json j;
  j["schema"] = "bcfwt-report/1";
  j["suite"] = r.suite;
  j["config"] = {{"sigma", cfg.sigma},
                 {"order1d", cfg.orders.order1d},
                 {"order2d", cfg.orders.order2d},
                 {"order4d", cfg.orders.order4d},
                 {"tol", cfg.tol},
                 {"seed", cfg.seed}};
  j["pass"] = r.pass;
  j["report_count"] = r.reports.size();
  j["first_failure"] = r.first_failure;
  j["reports"] = r.reports;
  j["extra"] = r.extra;
  return j;
}

}  // namespace bcfwt
