#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "poico/dsl.hpp"
#include "poico/models.hpp"
#include "poico/report.hpp"

using namespace poico;

TEST_CASE("parsing the fold-circle document") {
  auto doc = parse_structure("coords(t,x1,x2,x3) x1*dx2^dx3 + x2*dx1^dx3 - x3*dx1^dx2");
  PoissonStructure gamma = model("blf-circle");
  CHECK(doc.coords == gamma.coords);
  CHECK(doc.bivector == gamma.bivector);
  CHECK_FALSE(doc.weights.has_value());
}

TEST_CASE("zero bivector and weight clause") {
  auto doc = parse_structure("coords(a,b) 0");
  CHECK(doc.bivector.is_zero());
  CHECK(doc.bivector.nvars() == 2);

  auto wd = parse_structure("coords(a,b,c,d) weights(1,1,1,2) a*da^db");
  REQUIRE(wd.weights.has_value());
  CHECK(*wd.weights == std::vector<int>{1, 1, 1, 2});
  CHECK(wd.bivector.component(3) == Polynomial::variable(4, 0));
}

TEST_CASE("parse errors carry positions") {
  // malformed basis: error at the caret column
  try {
    parse_structure("coords(x) dx^");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 13);  // the '^'
  }

  CHECK_THROWS_AS(parse_structure("coords(x,y) z*dx^dy"), ParseError);      // unknown ident
  CHECK_THROWS_AS(parse_structure("coords(x,y) (x+y*dx^dy"), ParseError);   // unbalanced paren
  CHECK_THROWS_AS(parse_structure("coords(x,y) x"), ParseError);            // missing basis
  CHECK_THROWS_AS(parse_structure("coords(x,x) x*dx^dx"), ParseError);      // duplicate coord
  CHECK_THROWS_AS(parse_structure("weights(1) dx^dy"), ParseError);         // missing coords

  try {
    parse_structure("coords(x,y)\n  q*dx^dy");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 3);
  }
}

TEST_CASE("malformed documents never crash, only raise ParseError") {
  for (const auto* text :
       {"", "coords", "coords()", "coords(x))", "coords(x) dx^dx^dx", "coords(x) *dx^dx",
        "coords(x,y) dx^dy dx^dy", "coords(x,y) x**dx^dy", "coords(x,y) (dx^dy)",
        "coords(x,y) 1/0*dx^dy", "coords(x,y) weights(0,1) dx^dy", "coords(x,y) x^y*dx^dy",
        "coords(x,y) x^-2*dx^dy", "coords(x,y) @", "coords(x,y) dx^\ndz"}) {
    CHECK_THROWS_AS(parse_structure(text), std::exception);
  }
  // these must be ParseErrors specifically, with positions
  for (const auto* text : {"coords(x) dx^", "coords(x,y) z*dx^dy", "coords(x,y) x"}) {
    try {
      parse_structure(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line >= 1);
      CHECK(e.col >= 1);
    }
  }
}

TEST_CASE("rational literals and powers in coefficients") {
  auto doc = parse_structure("coords(x,y) 1/2*x^2*dx^dy + (x - 3/4*y)*dy^dx");
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  // dy^dx = -dx^dy
  Polynomial expect = x * x * Rational(1, 2) - (x - y * Rational(3, 4));
  CHECK(doc.bivector.component(3) == expect);
}

TEST_CASE("catalog models round-trip through the DSL") {
  for (const auto& name : model_names()) {
    PoissonStructure pi = model(name, model_default_parameter(name));
    std::string text = print_structure(to_doc(pi));
    auto doc = parse_structure(text);
    CHECK(doc.coords == pi.coords);
    CHECK(doc.bivector == pi.bivector);
    CHECK(print_structure(doc) == text);
  }
}

TEST_CASE("random structures round-trip") {
  std::mt19937 rng(515);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + rng() % 3;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    Multivector biv(n, 2);
    for (IndexMask m : multi_index_masks(n, 2)) {
      Polynomial p(n);
      for (long d = 0; d <= 2; ++d)
        for (const auto& mono : monomial_basis(n, d, WeightVector::ones(n)))
          if (rng() % 4 == 0) p.add_term(mono, make_rational(coeff(rng), 1 + rng() % 3));
      biv.add_term(m, p);
    }
    StructureDoc doc;
    doc.coords = names;
    doc.bivector = biv;
    auto parsed = parse_structure(print_structure(doc));
    CHECK(parsed.bivector == biv);
  }
}

TEST_CASE("run: validate") {
  ReportConfig cfg;
  cfg.operation = "validate";
  cfg.model_name = "blf-circle";
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["results"]["jacobi"] == true);
  CHECK(j["engine_version"].is_string());
  CHECK(j["structure"]["name"] == "blf-circle");

  // non-Poisson input: exit 1 and a printed witness
  ReportConfig bad;
  bad.operation = "validate";
  bad.input_text = "coords(x0,x1,x2,x3) dx0^dx1 + x0*dx2^dx3";
  std::ostringstream out2, err2;
  CHECK(run(bad, out2, err2) == 1);
  auto j2 = nlohmann::json::parse(out2.str());
  CHECK(j2["results"]["jacobi"] == false);
  CHECK(j2["results"]["witness"] == "-2*dx1^dx2^dx3");
}

TEST_CASE("run: cohomology with reference block") {
  ReportConfig cfg;
  cfg.operation = "cohomology";
  cfg.model_name = "near-positive";
  cfg.max_degree = 2;
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["results"]["dims_by_k"]["H1"] == std::vector<long>{2, 0, 0});
  CHECK(j["results"]["reference"]["H1"] == std::vector<long>{2, 0, 0});
  // representatives of H1_0
  bool found = false;
  for (const auto& s : j["results"]["slices"]) {
    if (s["k"] == 1 && s["i"] == 0) {
      CHECK(s["representatives"] == std::vector<std::string>{"dx0", "dx2"});
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("run: usage errors exit 2") {
  ReportConfig cfg;
  cfg.operation = "cohomology";  // no model, no input
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 2);

  ReportConfig unknown;
  unknown.operation = "frobnicate";
  std::ostringstream o2, e2;
  CHECK(run(unknown, o2, e2) == 2);

  ReportConfig badfmt;
  badfmt.operation = "models";
  badfmt.format = "yaml";
  std::ostringstream o3, e3;
  CHECK(run(badfmt, o3, e3) == 2);
}

TEST_CASE("json output is byte-stable") {
  for (const auto& op : {"validate", "modular", "casimirs", "cohomology", "report"}) {
    ReportConfig cfg;
    cfg.operation = op;
    cfg.model_name = "blf-circle";
    cfg.max_degree = 2;
    std::ostringstream a, b, err;
    REQUIRE(run(cfg, a, err) == 0);
    REQUIRE(run(cfg, b, err) == 0);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("run: free-module fits in the cohomology report") {
  ReportConfig cfg;
  cfg.operation = "cohomology";
  cfg.model_name = "blf-circle";
  cfg.max_degree = 6;
  cfg.with_representatives = false;
  cfg.fit_degrees = {1, 2};
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  auto j = nlohmann::json::parse(out.str());
  const auto& fits = j["results"]["free_module_fits"];
  CHECK(fits["casimir_degrees"] == std::vector<long>{1, 2});
  for (const auto& key : {"H0", "H1", "H3", "H4"}) {
    CHECK(fits[key]["rank"] == 1);
    CHECK(fits[key]["generator_degrees"] == std::vector<long>{0});
    CHECK(fits[key]["exact"] == true);
  }
  CHECK(fits["H2"]["rank"] == 0);
}

TEST_CASE("run: k-range restriction and conformal factor") {
  ReportConfig cfg;
  cfg.operation = "cohomology";
  cfg.model_name = "blf-circle";
  cfg.max_degree = 3;
  cfg.k_min = 1;
  cfg.k_max = 1;
  cfg.with_representatives = false;
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["results"]["dims_by_k"].size() == 1);
  CHECK(j["results"]["dims_by_k"]["H1"] == std::vector<long>{1, 1, 2, 2});

  ReportConfig withk;
  withk.operation = "validate";
  withk.model_name = "blf-circle";
  withk.conformal_factor = "1 + x1^2 + 1/2*x2*x3";
  std::ostringstream o2, e2;
  REQUIRE(run(withk, o2, e2) == 0);
  CHECK(nlohmann::json::parse(o2.str())["results"]["jacobi"] == true);
}

TEST_CASE("run: full report with samples") {
  ReportConfig cfg;
  cfg.operation = "report";
  cfg.model_name = "near-positive";
  cfg.max_degree = 2;
  cfg.samples = {"0,1,0,0", "1,0,2,0", "0,-1/2,0,1/2"};
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["results"]["jacobi"] == true);
  CHECK(j["results"]["modular_field"] == "2*dx0");
  CHECK(j["results"]["modular_is_cocycle"] == true);
  CHECK(j["results"]["exactness_witness"] == "x0*dx0 + x1*dx1 + x2*dx2 + x3*dx3");
  CHECK(j["results"]["near_positivity"]["all_nonnegative"] == true);
  CHECK(j["results"]["near_positivity"]["points_checked"] == 3);
  CHECK(j["results"]["rank_samples"][0]["rank"] == 4);
  CHECK(j["results"]["rank_samples"][1]["rank"] == 0);  // on the locus x1 = x3 = 0
  CHECK(j["results"]["rank_samples"][2]["rank"] == 4);

  // a counterexample surfaces in the verdict
  ReportConfig anti;
  anti.operation = "report";
  anti.input_text = "coords(x0,x1,x2,x3) dx0^dx1 - dx2^dx3";
  anti.max_degree = 1;
  std::ostringstream o2, e2;
  REQUIRE(run(anti, o2, e2) == 0);
  auto j2 = nlohmann::json::parse(o2.str());
  CHECK(j2["results"]["near_positivity"]["all_nonnegative"] == false);
  CHECK(j2["results"]["near_positivity"].contains("counterexample"));
}

TEST_CASE("run: output file") {
  ReportConfig cfg;
  cfg.operation = "validate";
  cfg.model_name = "sl2-dual";
  cfg.output_path = "/tmp/poico_test_report.json";
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  CHECK(out.str().empty());
  std::ifstream in(cfg.output_path);
  REQUIRE(in.good());
  auto j = nlohmann::json::parse(in);
  CHECK(j["results"]["jacobi"] == true);
}

TEST_CASE("markdown rendering") {
  ReportConfig cfg;
  cfg.operation = "modular";
  cfg.model_name = "near-positive";
  cfg.format = "markdown";
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  CHECK(out.str().find("# poico modular report") != std::string::npos);
  CHECK(out.str().find("2*dx0") != std::string::npos);
}

TEST_CASE("run: assemble") {
  ReportConfig cfg;
  cfg.operation = "assemble";
  cfg.betti = std::array<long, 5>{1, 0, 1, 0, 1};
  cfg.circles = 1;
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["results"]["dims"]["H1"] == 2);
  CHECK(j["results"]["dims"]["H2"] == 2);

  ReportConfig formal;
  formal.operation = "assemble";
  formal.circles = 1;
  formal.points = 0;
  formal.max_degree = 4;
  std::ostringstream o2, e2;
  REQUIRE(run(formal, o2, e2) == 0);
  auto j2 = nlohmann::json::parse(o2.str());
  CHECK(j2["results"]["slices"]["H0"][4]["total"] == 3);
}

TEST_CASE("run: modular and rank") {
  ReportConfig cfg;
  cfg.operation = "modular";
  cfg.model_name = "near-positive";
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["results"]["field"] == "2*dx0");
  CHECK(j["results"]["is_cocycle"] == true);

  ReportConfig rk;
  rk.operation = "rank";
  rk.model_name = "near-positive";
  rk.samples = {"0,1,0,0", "0,0,0,0"};
  std::ostringstream o2, e2;
  REQUIRE(run(rk, o2, e2) == 0);
  auto j2 = nlohmann::json::parse(o2.str());
  CHECK(j2["results"]["points"][0]["rank"] == 4);
  CHECK(j2["results"]["points"][1]["rank"] == 0);
}
