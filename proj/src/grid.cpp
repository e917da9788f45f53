#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "bcfwt/suites.hpp"

namespace bcfwt {

namespace {

double parse_number(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::logic_error&) {
    throw std::invalid_argument(what + ": cannot parse '" + token + "' as a number");
  }
}

int parse_count(const std::string& token, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || v < 1) {
    throw std::invalid_argument(what + ": count must be a positive integer, got '" + token + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

const std::vector<std::string> kCoord4{"x1", "y1", "x2", "y2"};
const std::vector<std::string> kValue4{"z1.re", "z1.im", "z2.re", "z2.im"};

std::vector<std::string> axis_names(const std::string& target) {
  if (target == "fwt1d") return {"p", "q"};
  if (target == "hermite") return {"x", "y"};
  return kCoord4;
}

GridAxes grid_axes(const std::vector<AxisSpec>& specs) {
  GridAxes g;
  for (int a = 0; a < 4; ++a) g.axis[a] = specs[a].values();
  return g;
}

void push_bicomplex(std::vector<double>& row, const Bicomplex& z) {
  row.push_back(z.z1().real());
  row.push_back(z.z1().imag());
  row.push_back(z.z2().real());
  row.push_back(z.z2().imag());
}

Table table_from_samples(const GridAxes& axes, const std::vector<Bicomplex>& values) {
  Table t;
  t.columns = kCoord4;
  t.columns.insert(t.columns.end(), kValue4.begin(), kValue4.end());
  for (std::size_t i = 0; i < axes.size(); ++i) {
    std::vector<double> row;
    push_bicomplex(row, axes.point(i));
    push_bicomplex(row, values[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table_from_samples(const GridAxes& axes, const GridSamples& s) {
  std::vector<Bicomplex> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = Bicomplex::from_idempotent(s.plus[i], s.minus[i]);
  return table_from_samples(axes, v);
}

BCFunction2D complex_pair(int a, int b, Scale sigma) {
  return BCFunction2D::scalar(complex_hermite_fn(HermiteIndex(a, b), sigma));
}

}  // namespace

std::vector<double> AxisSpec::values() const {
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = min;
    return v;
  }
  for (int i = 0; i < count; ++i) v[i] = min + (max - min) * i / (count - 1);
  return v;
}

std::vector<AxisSpec> parse_grid(const std::string& spec, const std::vector<std::string>& names) {
  std::vector<AxisSpec> axes;
  for (const auto& n : names) axes.push_back(AxisSpec{n});
  if (spec.empty()) return axes;
  if (spec.find(':') == std::string::npos) {
    const int c = parse_count(spec, "--grid");
    for (auto& a : axes) a.count = c;
    return axes;
  }
  for (const auto& token : split(spec, ',')) {
    const auto parts = split(token, ':');
    if (parts.size() != 4) {
      throw std::invalid_argument("--grid: expected name:min:max:count, got '" + token + "'");
    }
    AxisSpec* target = nullptr;
    for (auto& a : axes) {
      if (a.name == parts[0]) target = &a;
    }
    if (target == nullptr) {
      std::string known;
      for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
      throw std::invalid_argument("--grid: unknown axis '" + parts[0] + "' (axes: " + known + ")");
    }
    target->min = parse_number(parts[1], "--grid " + parts[0]);
    target->max = parse_number(parts[2], "--grid " + parts[0]);
    target->count = parse_count(parts[3], "--grid " + parts[0]);
  }
  return axes;
}

std::vector<std::string> eval_targets() {
  return {"fwt1d", "fwt2d", "fwtbc1d", "fwtbc2d", "phi", "psi", "fourindex", "kernel", "hermite"};
}

Table run_eval(const std::string& target, const RunConfig& cfg) {
  const Scale sigma(cfg.sigma);
  const auto specs = parse_grid(cfg.grid, axis_names(target));

  if (target == "fwt1d") {
    const auto ps = specs[0].values();
    const auto qs = specs[1].values();
    const auto vals = fwt1d_grid(hermite_fn(cfg.m, sigma), hermite_fn(cfg.n, sigma), sigma, ps, qs,
                                 transform_rule_1d(sigma, cfg.orders));
    Table t{{"p", "q", "re", "im"}, {}};
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t k = 0; k < qs.size(); ++k) {
        const cplx v = vals[i * qs.size() + k];
        t.rows.push_back({ps[i], qs[k], v.real(), v.imag()});
      }
    return t;
  }
  if (target == "hermite") {
    const HermiteIndex idx(cfg.m, cfg.n);
    const Scale alpha(cfg.alpha);
    Table t{{"m", "n", "alpha", "z.re", "z.im", "h.re", "h.im"}, {}};
    for (double x : specs[0].values())
      for (double y : specs[1].values()) {
        const cplx h = hermite_complex(idx, alpha, {x, y});
        t.rows.push_back({double(cfg.m), double(cfg.n), cfg.alpha, x, y, h.real(), h.imag()});
      }
    return t;
  }

  const GridAxes axes = grid_axes(specs);
  if (target == "fwt2d") {
    const auto vals = fwt2d_grid(complex_hermite_fn(HermiteIndex(cfg.m, cfg.n), sigma),
                                 complex_hermite_fn(HermiteIndex(cfg.mp, cfg.np), sigma), sigma, axes,
                                 transform_rule_2d(sigma, cfg.orders));
    Table t;
    t.columns = kCoord4;
    t.columns.insert(t.columns.end(), {"re", "im"});
    for (std::size_t i = 0; i < axes.size(); ++i) {
      std::vector<double> row;
      push_bicomplex(row, axes.point(i));
      row.push_back(vals[i].real());
      row.push_back(vals[i].imag());
      t.rows.push_back(std::move(row));
    }
    return t;
  }
  if (target == "fwtbc1d") {
    return table_from_samples(axes, sample_fwt_bc_1d(elementary(cfg.m, cfg.n, sigma),
                                                     elementary(cfg.r, cfg.s, sigma), sigma, axes,
                                                     transform_rule_1d(sigma, cfg.orders)));
  }
  if (target == "fwtbc2d") {
    return table_from_samples(axes, sample_fwt_bc_2d(complex_pair(cfg.m, cfg.n, sigma),
                                                     complex_pair(cfg.mp, cfg.np, sigma), sigma, axes,
                                                     transform_rule_2d(sigma, cfg.orders)));
  }
  if (target == "fourindex") {
    return table_from_samples(axes, sample_four_index(FourIndex(cfg.m, cfg.n, cfg.mp, cfg.np), sigma,
                                                      axes, transform_rule_2d(sigma, cfg.orders)));
  }

  BicomplexFn f;
  if (target == "phi") {
    const int n = cfg.n;
    f = [n, sigma](const Bicomplex& Z) { return phi_n(n, sigma, Z); };
  } else if (target == "psi") {
    const HermiteIndex idx(cfg.m, cfg.n);
    f = [idx, sigma](const Bicomplex& Z) { return psi_mn(idx, sigma, Z); };
  } else if (target == "kernel") {
    if (cfg.variant != "printed" && cfg.variant != "corrected" && cfg.variant != "both") {
      throw std::invalid_argument("eval kernel: --variant must be printed or corrected");
    }
    const KernelVariant v = cfg.variant == "printed" ? KernelVariant::printed : KernelVariant::corrected;
    const Bicomplex W = parse_bicomplex(cfg.W);
    f = [sigma, W, v](const Bicomplex& Z) { return kernel_K(sigma, Z, W, v); };
  } else {
    std::string known;
    for (const auto& n : eval_targets()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown eval target '" + target + "' (targets: " + known + ")");
  }
  const auto s = sample_grid(axes, f);
  return table_from_samples(axes, s);
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << '\n';
  char buf[32];
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", row[c]);
      os << (c ? "," : "") << buf;
    }
    os << '\n';
  }
}

nlohmann::json table_json(const std::string& target, const Table& t) {
  nlohmann::json j;
  j["schema"] = "bcfwt-eval/1";
  j["target"] = target;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j;
}

Bicomplex parse_bicomplex(const std::string& text) {
  if (text == "0") return Bicomplex(0.0);
  const auto parts = split(text, ',');
  if (parts.size() != 4) {
    throw std::invalid_argument("expected a bicomplex point as x1,y1,x2,y2, got '" + text + "'");
  }
  double v[4];
  for (int i = 0; i < 4; ++i) v[i] = parse_number(parts[i], "bicomplex point");
  return {cplx(v[0], v[1]), cplx(v[2], v[3])};
}

Direction parse_direction(const std::string& text) {
  if (text == "star") return Direction::star;
  if (text == "bar") return Direction::bar;
  if (text == "dagger") return Direction::dagger;
  throw std::invalid_argument("direction must be star, bar or dagger, got '" + text + "'");
}

}  // namespace bcfwt
