#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <random>

#include "polarforge/core.hpp"
#include "polarforge/io.hpp"
#include "polarforge/polarize.hpp"
#include "test_util.hpp"

using namespace polarforge;

TEST_CASE("parsing the two header kinds") {
  auto p = parse_ideal("ring x y z\nx^2, x*y");
  CHECK(p.ideal.ring().size() == 3);
  CHECK(p.input_was_minimal);
  CHECK(to_string(p.ideal.gens()[0]) == "x^2");

  auto q = parse_ideal("polar 2 3 x y\nx_1*y_2");
  CHECK(q.ideal.ring().size() == 6);
  CHECK(q.ideal.ring().is_bi_indexed());
  CHECK(q.ideal.ring().var(5).name == "y_3");
}

TEST_CASE("separators, unit, zero, and big exponents") {
  auto p = parse_ideal("ring x y\nx^2\nx*y, y^3");
  CHECK(p.ideal.gens().size() == 3);
  CHECK(parse_ideal("ring x\n1").ideal.is_unit());
  CHECK(parse_ideal("ring x y\n").ideal.is_zero());
  CHECK(parse_ideal("ring x y\n\n").ideal.is_zero());
  auto big = parse_ideal("ring x\nx^123456789012345678901234567890");
  CHECK(big.ideal.gens()[0].degree() == Exp("123456789012345678901234567890"));
}

TEST_CASE("non-minimal input is flagged but minimalized") {
  auto p = parse_ideal("ring x y\nx, x^2, x*y");
  CHECK_FALSE(p.input_was_minimal);
  CHECK(p.ideal.gens().size() == 1);
  auto dup = parse_ideal("ring x y\nx*y, y*x");
  CHECK_FALSE(dup.input_was_minimal);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_ideal("field x y\nx"), ParseError);
  CHECK_THROWS_AS(parse_ideal("ring\nx"), ParseError);
  CHECK_THROWS_AS(parse_ideal("polar 2 0 x y\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("polar 2 2 x\n"), ParseError);
  try {
    parse_ideal("ring x y\nx^2, x*q");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 8);
  }
  try {
    parse_ideal("ring x y\nx^");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_ideal("ring x y\nx*"), ParseError);
  CHECK_THROWS_AS(parse_ideal("ring x y\nx^y"), ParseError);
}

TEST_CASE("serialize round trips") {
  const char* texts[] = {
      "ring x y z\nx^2, x*y, x*z, y^2, y*z",
      "polar 3 2 x y z\nx_1*x_2, x_1*y_2, x_1*z_2, y_1*y_2, y_1*z_2",
      "ring x\n",
      "ring x y\n1",
  };
  for (const char* t : texts) {
    auto p = parse_ideal(t);
    auto q = parse_ideal(serialize(p.ideal));
    CHECK(q.ideal == p.ideal);
    CHECK(q.input_was_minimal);
  }
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(61);
  Ring r = Ring::plain({"x", "y", "z", "w"});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 5; ++k)
      gens.push_back(pftest::random_monomial(rng, r, 6));
    auto I = minimalize(r, gens);
    CHECK(parse_ideal(serialize(I)).ideal == I);
  }
}

TEST_CASE("json shapes") {
  auto I = parse_ideal("ring x y\nx^2, x*y").ideal;
  auto j = to_json(I);
  CHECK(j["ring"]["kind"] == "plain");
  CHECK(j["generators"].size() == 2);
  CHECK(j["generators"][0] == "x^2");

  auto J = apply_pol(I, {PolMethod::box, {}, 0});
  auto jr = to_json(J.ring());
  CHECK(jr["kind"] == "polar");
  CHECK(jr["n"] == 2);
  CHECK(jr["d"] == 2);

  auto bt = to_json(betti_table(I));
  REQUIRE(bt.is_array());
  CHECK(bt.size() == 2);
  CHECK(bt[0]["i"] == 0);
  CHECK(bt[0]["value"] == 2);

  auto kp = to_json(k_polynomial(I));
  REQUIRE(kp.is_array());
  CHECK(kp[0]["degree"] == 0);
  CHECK(kp[0]["coeff"] == 1);

  Monomial huge(Ring::plain({"x"}), {Exp("123456789012345678901234567890")});
  std::vector<Monomial> hg{huge};
  auto hk = to_json(k_polynomial(
      MonomialIdeal::from_generators(huge.ring(), hg)));
  bool saw_string_degree = false;
  for (const auto& term : hk)
    if (term["degree"].is_string()) saw_string_degree = true;
  CHECK(saw_string_degree);
}

TEST_CASE("filtration and report json") {
  auto I = parse_ideal("ring x y z\nx^2, x*y, x*z, y^2, y*z").ideal;
  auto F = pretty_clean_filtration(I, {PolMethod::box, {}, 0});
  auto j = to_json(F);
  CHECK(j["method"] == "box");
  REQUIRE(j["steps"].size() == 2);
  CHECK(j["steps"][0]["adjoined"] == "x");
  CHECK(j["steps"][0]["prime"] ==
        nlohmann::json::array({"x_2", "y_2", "z_2"}));
  CHECK(j["terminal"] == nlohmann::json::array({"x_1", "y_1"}));

  auto r = verify_polarization(I, F.polarized);
  auto jr = to_json(r);
  CHECK(jr["ok"] == true);
  CHECK_FALSE(jr.contains("witness"));

  auto bad = parse_ideal("ring x y z\nx*y*z, x^2*y, x*y^2, x^3").ideal;
  auto rb = verify_polarization(bad, apply_pol(bad, {PolMethod::box, {}, 0}));
  auto jb = to_json(rb);
  CHECK(jb["ok"] == false);
  CHECK(jb.contains("witness"));
}
