#include <catch2/catch_amalgamated.hpp>

#include "qsym/random.hpp"
#include "qsym/symmetric.hpp"
#include "qsym/transition.hpp"

using namespace qsym;

namespace {

IntPoly evar(const VarTable& t, int i, std::int32_t e = 1) {
  return IntPoly::variable(t, "e" + std::to_string(i), e);
}

}  // namespace

TEST_CASE("Newton power sums in the elementary basis") {
  const VarTable t2 = elementary_table(2);
  CHECK(power_sums_from_elementary(1, 2) == evar(t2, 1));
  CHECK(power_sums_from_elementary(2, 2) ==
        evar(t2, 1) * evar(t2, 1) - Int(2) * evar(t2, 2));

  const VarTable t3 = elementary_table(3);
  CHECK(power_sums_from_elementary(3, 3) ==
        evar(t3, 1) * evar(t3, 1) * evar(t3, 1) -
            Int(3) * evar(t3, 1) * evar(t3, 2) + Int(3) * evar(t3, 3));

  // With only two elementary generators, e_3 drops out.
  CHECK(power_sums_from_elementary(3, 2) ==
        evar(t2, 1) * evar(t2, 1) * evar(t2, 1) -
            Int(3) * evar(t2, 1) * evar(t2, 2));
}

TEST_CASE("power elementary polynomials") {
  const VarTable t2 = elementary_table(2);
  CHECK(power_elementary(1, 2, 1) ==
        evar(t2, 1) * evar(t2, 1) - Int(2) * evar(t2, 2));
  CHECK(power_elementary(1, 2, 2) == evar(t2, 2) * evar(t2, 2));
  CHECK(power_elementary(1, 5, 0) == IntPoly::constant(t2, Int(1)));
  CHECK(power_elementary(1, 5, -2).is_zero());

  SECTION("N = 1 is the identity transition") {
    for (int n = 1; n <= 3; ++n) {
      const VarTable t = elementary_table(2 * n);
      for (int k = 1; k <= 2 * n; ++k) {
        CHECK(power_elementary(n, 1, k) == evar(t, k));
      }
    }
  }
}

TEST_CASE("unimodular power elementary polynomials") {
  const VarTable t1 = elementary_table(1);
  CHECK(power_elementary_sl(1, 2, 1) ==
        evar(t1, 1) * evar(t1, 1) - IntPoly::constant(t1, Int(2)));
  CHECK(power_elementary_sl(1, 3, 1) ==
        evar(t1, 1) * evar(t1, 1) * evar(t1, 1) - Int(3) * evar(t1, 1));
  CHECK(power_elementary_sl(1, 4, 0) == IntPoly::constant(t1, Int(1)));
  CHECK(power_elementary_sl(1, 4, -1).is_zero());
  for (int n = 1; n <= 3; ++n) {
    const VarTable t = elementary_table(2 * n - 1);
    for (int k = 1; k <= 2 * n - 1; ++k) {
      CHECK(power_elementary_sl(n, 1, k) == evar(t, k));
    }
  }
}

TEST_CASE("power fundamental polynomials at rank 1") {
  const VarTable f = fundamental_table(1);
  const IntPoly f1 = IntPoly::variable(f, "f1");
  CHECK(power_fundamental(1, 2, 1) == f1 * f1 - IntPoly::constant(f, Int(2)));
  CHECK(power_fundamental(1, 3, 1) == f1 * f1 * f1 - Int(3) * f1);

  SECTION("confirmed against the two-letter alphabet") {
    const VarTable l = VarTable({"L1"});
    const IntPoly u = IntPoly::variable(l, "L1", 1) + IntPoly::variable(l, "L1", -1);
    for (int N = 1; N <= 6; ++N) {
      SubstitutionMap<Int> a;
      a.emplace("f1", Substitution<Int>{u, {}});
      CHECK(substitute(power_fundamental(1, N, 1), a) ==
            IntPoly::variable(l, "L1", static_cast<std::int32_t>(N)) +
                IntPoly::variable(l, "L1", static_cast<std::int32_t>(-N)));
    }
  }
}

TEST_CASE("N = 1 power fundamental is the corresponding generator") {
  for (int n = 1; n <= 3; ++n) {
    const VarTable f = fundamental_table(n);
    for (int k = 1; k <= n; ++k) {
      CHECK(power_fundamental(n, 1, k) ==
            IntPoly::variable(f, "f" + std::to_string(k)));
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(power_fundamental(2, 2, 3), usage_error);
  CHECK_THROWS_AS(power_fundamental(2, 2, 0), usage_error);
  CHECK_THROWS_AS(power_fundamental(0, 2, 1), usage_error);
  CHECK_THROWS_AS(power_fundamental(2, 0, 1), usage_error);
  CHECK_THROWS_AS(power_elementary_sl(1, 2, 2), usage_error);
}

TEST_CASE("extended conventions") {
  CHECK(power_fundamental_ext(2, 3, 0) ==
        IntPoly::constant(fundamental_table(2), Int(1)));
  CHECK(power_fundamental_ext(2, 3, -1).is_zero());
  CHECK(power_fundamental_ext(2, 3, 3).is_zero());  // rank+1 vanishes
  CHECK(power_fundamental_ext(2, 3, 1) == power_fundamental(2, 3, 1));
  CHECK(power_fundamental_ext(0, 3, 1).is_zero());
  CHECK_THROWS_AS(power_fundamental_ext(2, 3, 4), usage_error);
}

TEST_CASE("leading-term reduction oracle") {
  const VarTable x2 = positive_table(2);
  const IntPoly x1 = IntPoly::variable(x2, "x1");
  const IntPoly x2v = IntPoly::variable(x2, "x2");
  const VarTable e2 = elementary_table(2);

  CHECK(symmetric_reduce(x1 * x2v) == evar(e2, 2));
  CHECK(symmetric_reduce(x1 * x1 + x2v * x2v) ==
        evar(e2, 1) * evar(e2, 1) - Int(2) * evar(e2, 2));
  CHECK(symmetric_reduce(x1 * x1 * x2v + x1 * x2v * x2v) ==
        evar(e2, 1) * evar(e2, 2));

  SECTION("non-symmetric input is rejected") {
    CHECK_THROWS_AS(symmetric_reduce(x1 * x1 * x2v), usage_error);
    CHECK_THROWS_AS(symmetric_reduce(IntPoly::variable(x2, "x2", 3)), usage_error);
  }
  SECTION("negative exponents are rejected") {
    CHECK_THROWS_AS(symmetric_reduce(IntPoly::variable(x2, "x1", -1)), usage_error);
  }
}

TEST_CASE("oracle agrees with the Newton route") {
  for (int n = 1; n <= 2; ++n) {
    for (int N = 1; N <= 4; ++N) {
      for (int k = 1; k <= 2 * n; ++k) {
        INFO("n=" << n << " N=" << N << " k=" << k);
        CHECK(symmetric_reduce(powered_alphabet_elementary(2 * n, N, k)) ==
              power_elementary(n, N, k));
      }
    }
  }
}

TEST_CASE("three-term recurrence at rank 1") {
  const VarTable f = fundamental_table(1);
  const IntPoly f1 = IntPoly::variable(f, "f1");
  CHECK(power_fundamental(1, 1, 1) == f1);
  CHECK(power_fundamental(1, 2, 1) == f1 * f1 - IntPoly::constant(f, Int(2)));
  for (int N = 2; N <= 10; ++N) {
    INFO("N=" << N);
    CHECK(power_fundamental(1, N + 1, 1) ==
          f1 * power_fundamental(1, N, 1) - power_fundamental(1, N - 1, 1));
  }
}

TEST_CASE("substitution identity for the power fundamental polynomials") {
  CHECK(verify_power_fundamental(1, 5));
  CHECK(verify_power_fundamental(2, 2));
  CHECK(verify_power_fundamental(2, 4));
  CHECK(verify_power_fundamental(3, 3));
}

TEST_CASE("a perturbed coefficient breaks the substitution identity") {
  const int n = 2, N = 2, k = 1;
  LambdaRing ring(n);
  SubstitutionMap<Int> chars;
  for (int i = 1; i <= n; ++i) {
    chars.emplace("f" + std::to_string(i),
                  Substitution<Int>{fundamental_character(i, ring), {}});
  }
  IntPoly q = power_fundamental(n, N, k);
  IntPoly bumped = q + IntPoly::variable(q.table(), "f2");
  CHECK(substitute(q, chars) == fundamental_character_power(k, N, ring));
  CHECK(substitute(bumped, chars) != fundamental_character_power(k, N, ring));
}

TEST_CASE("scalar route matches direct evaluation on random points") {
  Rng rng(777);
  for (int n = 1; n <= 5; ++n) {
    LambdaRing ring(n);
    std::vector<IntPoly> chars;
    for (int i = 1; i <= n; ++i) chars.push_back(fundamental_character(i, ring));
    for (int N = 1; N <= 7; ++N) {
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<Rat> pt;
        for (int i = 0; i < n; ++i) pt.emplace_back(rng.nonzero(3));
        std::vector<Rat> powered_pt;
        for (const Rat& v : pt) {
          Rat w(1);
          for (int j = 0; j < N; ++j) w *= v;
          powered_pt.push_back(w);
        }
        std::vector<Rat> f_vals;
        for (const auto& c : chars) f_vals.push_back(evaluate(c, pt));
        for (int k = 1; k <= n; ++k) {
          INFO("n=" << n << " N=" << N << " k=" << k);
          CHECK(power_fundamental_value(n, N, k, f_vals) ==
                evaluate(chars[static_cast<std::size_t>(k - 1)], powered_pt));
        }
      }
    }
  }
}

TEST_CASE("all exponents in generator polynomials are nonnegative") {
  CHECK(power_elementary(2, 3, 3).all_exponents_nonnegative());
  CHECK(power_elementary_sl(2, 3, 3).all_exponents_nonnegative());
  CHECK(power_fundamental(3, 2, 2).all_exponents_nonnegative());
  CHECK(power_fundamental(2, 5, 2).all_exponents_nonnegative());
}
