#include <catch2/catch_amalgamated.hpp>

#include "qsym/annulus.hpp"
#include "qsym/io.hpp"
#include "qsym/quantum.hpp"
#include "qsym/random.hpp"
#include "qsym/transition.hpp"

using namespace qsym;

TEST_CASE("text rendering") {
  CHECK(render_text(qint(2)) == "q^1 + q^-1");
  CHECK(render_text(IntPoly::zero(q_table())) == "0");
  CHECK(render_text(qint(0)) == "0");

  const VarTable f = fundamental_table(1);
  IntPoly p = IntPoly::variable(f, "f1", 2) - IntPoly::constant(f, Int(2));
  CHECK(render_text(p) == "f1^2 - 2");

  IntPoly neg_lead = -IntPoly::variable(f, "f1", 1) + IntPoly::constant(f, Int(1));
  CHECK(render_text(neg_lead) == "-f1^1 + 1");
}

TEST_CASE("json rendering matches the document schema") {
  const VarTable f = fundamental_table(1);
  IntPoly p = IntPoly::variable(f, "f1", 2) - IntPoly::constant(f, Int(2));
  CHECK(render_json(p) ==
        R"({"vars":["f1"],"terms":[{"c":"1","e":[2]},{"c":"-2","e":[0]}]})");
  CHECK(render_json(IntPoly::zero(f)) == R"({"vars":["f1"],"terms":[]})");
}

TEST_CASE("parsing") {
  CHECK(parse_poly("q^1 + q^-1", q_table()) == qint(2));
  CHECK(parse_poly("q + q^-1", q_table()) == qint(2));  // exponent 1 optional

  AnnulusRing ring(2);
  IntPoly expected = Int(3) * ring.t(2) * ring.x(1) -
                     IntPoly::constant(ring.table(), Int(1));
  CHECK(parse_poly("3*T^2*X1 - 1", ring.table()) == expected);

  SECTION("whitespace and signs") {
    CHECK(parse_poly("  -2*q^3+ 1 ", q_table()) ==
          Int(-2) * IntPoly::variable(q_table(), "q", 3) +
              IntPoly::constant(q_table(), Int(1)));
    CHECK(parse_poly("0", q_table()).is_zero());
  }

  SECTION("repeated factors multiply") {
    CHECK(parse_poly("q*q", q_table()) == IntPoly::variable(q_table(), "q", 2));
  }

  SECTION("malformed input") {
    CHECK_THROWS_AS(parse_poly("q^^2", q_table()), parse_error);
    CHECK_THROWS_AS(parse_poly("", q_table()), parse_error);
    CHECK_THROWS_AS(parse_poly("q +", q_table()), parse_error);
    CHECK_THROWS_AS(parse_poly("2**q", q_table()), parse_error);
    try {
      parse_poly("q^^2", q_table());
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 3);
    }
  }

  SECTION("unknown variable") {
    CHECK_THROWS_AS(parse_poly("z^2", q_table()), parse_error);
  }
}

TEST_CASE("round trip on random canonical polynomials") {
  const std::vector<VarTable> tables = {
      q_table(), fundamental_table(3), AnnulusRing(3).table()};
  Rng rng(31415);
  for (const auto& table : tables) {
    for (int trial = 0; trial < 500; ++trial) {
      IntPoly p = random_poly(rng, table, 20, -9, 9);
      CHECK(parse_poly(render_text(p), table) == p);
    }
  }
}

TEST_CASE("rendering is deterministic") {
  IntPoly p = power_fundamental(2, 3, 2);
  CHECK(render_text(p) == render_text(p));
  CHECK(render_json(p) == render_json(p));
  CHECK(parse_poly(render_text(p), p.table()) == p);
}

TEST_CASE("large coefficients survive the round trip") {
  Int big(1);
  for (int i = 0; i < 200; ++i) big *= 2;
  IntPoly p = IntPoly::constant(q_table(), big) +
              Int(-1) * big * IntPoly::variable(q_table(), "q", -7);
  CHECK(parse_poly(render_text(p), q_table()) == p);

  // decimal strings in the JSON document, never numbers
  std::string json = render_json(p);
  CHECK(json.find('"' + big.get_str() + '"') != std::string::npos);
}
