#include "doctest.h"

#include <sstream>

#include "bcfwt/suites.hpp"
#include "oracles.hpp"

using namespace bcfwt;

TEST_CASE("report residuals") {
  const IdentityReport r = make_report("x", Bicomplex(2.0), Bicomplex(1.0), {}, 2.0);
  CHECK(r.abs_residual == 0.0);
  CHECK(r.passes(0.0));
  const IdentityReport z = make_report("z", Bicomplex(1e-17), Bicomplex(0.0), {}, 1.0, 1.0);
  CHECK(z.rel_residual == doctest::Approx(1e-17));
  const IdentityReport b = make_report("b", Bicomplex(1.0), Bicomplex(1.5), {});
  CHECK(b.rel_residual == doctest::Approx(0.5 / 1.5));
}

TEST_CASE("json formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "\"nan\"");
  nlohmann::json j = {{"b", 1.0}, {"a", {1.0, 2.5}}};
  const std::string s = dump_json(j);
  CHECK(s.find("\"a\"") < s.find("\"b\""));
  CHECK(nlohmann::json::parse(s) == j);
}

TEST_CASE("suite output is deterministic") {
  RunConfig cfg;
  const std::string a = dump_json(suite_json(run_verify("elementary", cfg), cfg));
  const std::string b = dump_json(suite_json(run_verify("elementary", cfg), cfg));
  CHECK(a == b);
  cfg.seed = 8;
  CHECK(dump_json(suite_json(run_verify("elementary", cfg), cfg)) != a);
  CHECK_THROWS_AS(run_verify("nope", cfg), std::invalid_argument);
}

TEST_CASE("SplitMix64 reference values") {
  // First outputs for seed 0 from the reference implementation.
  SplitMix64 g(0);
  CHECK(g.next() == 0xe220a8397b1dcdafULL);
  CHECK(g.next() == 0x6e789e6aa1b965f4ULL);
  SplitMix64 u(7);
  for (int k = 0; k < 1000; ++k) {
    const double v = u.uniform();
    CHECK((v >= 0.0 && v < 1.0));
  }
}

TEST_CASE("grid parsing") {
  const auto d = parse_grid("", {"p", "q"});
  CHECK(d[0].values() == std::vector<double>{-2, -1, 0, 1, 2});
  const auto c = parse_grid("3", {"x1", "y1", "x2", "y2"});
  CHECK(c[3].count == 3);
  const auto n = parse_grid("q:0:1:2", {"p", "q"});
  CHECK(n[0].count == 5);
  CHECK(n[1].values() == std::vector<double>{0, 1});
  CHECK_THROWS_AS(parse_grid("r:0:1:2", {"p", "q"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("p:0:1", {"p", "q"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("p:0:x:2", {"p", "q"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0", {"p", "q"}), std::invalid_argument);
}

TEST_CASE("evaluation tables") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.grid = "5";
  const Table phi = run_eval("phi", cfg);
  CHECK(phi.rows.size() == 625);
  CHECK(phi.columns.size() == 8);

  RunConfig f;
  f.grid = "p:-2:2:5,q:-2:2:5";
  const Table t = run_eval("fwt1d", f);
  REQUIRE(t.rows.size() == 25);
  const auto& mid = t.rows[12];
  CHECK(mid[0] == 0.0);
  CHECK(mid[1] == 0.0);
  CHECK(mid[2] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  RunConfig k;
  k.variant = "corrected";
  k.grid = "3";
  const Table kt = run_eval("kernel", k);
  for (const auto& row : kt.rows) {
    const double e = std::exp(-0.25 * (row[0] * row[0] + row[1] * row[1] + row[2] * row[2] + row[3] * row[3]));
    CHECK(row[4] == doctest::Approx(e).epsilon(1e-14));
    CHECK(std::abs(row[6]) < 1e-15);
  }

  RunConfig h;
  h.m = 2;
  h.n = 1;
  h.grid = "x:0.7:0.7:1,y:-0.3:-0.3:1";
  const Table ht = run_eval("hermite", h);
  REQUIRE(ht.rows.size() == 1);
  const cplx want = oracle::complex_hermite(2, 1, 1.0, {0.7, -0.3});
  CHECK(ht.rows[0][5] == doctest::Approx(want.real()).epsilon(1e-12));
  CHECK(ht.rows[0][6] == doctest::Approx(want.imag()).epsilon(1e-12));

  std::ostringstream os;
  write_csv(os, t);
  const std::string csv = os.str();
  CHECK(csv.rfind("p,q,re,im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 26);
  CHECK_THROWS_AS(run_eval("nothing", cfg), std::invalid_argument);
}

TEST_CASE("bicomplex and direction parsing") {
  CHECK(parse_bicomplex("0") == Bicomplex(0.0));
  CHECK(parse_bicomplex("1,2,3,4") == Bicomplex(cplx(1, 2), cplx(3, 4)));
  CHECK_THROWS_AS(parse_bicomplex("1,2"), std::invalid_argument);
  CHECK(parse_direction("dagger") == Direction::dagger);
  CHECK_THROWS_AS(parse_direction("up"), std::invalid_argument);
}
