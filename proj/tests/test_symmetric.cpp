#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "qsym/random.hpp"
#include "qsym/symmetric.hpp"

using namespace qsym;

namespace {

// C(m, k) as an exact integer.
Int binomial(int m, int k) {
  if (k < 0 || k > m) return Int(0);
  Int r(1);
  for (int i = 1; i <= k; ++i) {
    r *= m - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

TEST_CASE("elementary symmetric basics") {
  LambdaRing r2(2);
  CHECK(elementary_symmetric(0, r2) == IntPoly::constant(r2.table(), Int(1)));
  CHECK(elementary_symmetric(-1, r2).is_zero());
  CHECK(elementary_symmetric(5, r2).is_zero());

  LambdaRing r1(1);
  CHECK(elementary_symmetric(1, r1) == r1.letter(1, 1) + r1.letter(1, -1));

  // The two self-paired products collapse into the constant 2.
  IntPoly e22 = elementary_symmetric(2, r2);
  IntPoly expected = r2.letter(1, 1) * r2.letter(2, 1) +
                     r2.letter(1, 1) * r2.letter(2, -1) +
                     r2.letter(1, -1) * r2.letter(2, 1) +
                     r2.letter(1, -1) * r2.letter(2, -1) +
                     IntPoly::constant(r2.table(), Int(2));
  CHECK(e22 == expected);
}

TEST_CASE("raw monomial count is C(2n, k)") {
  for (int n = 1; n <= 4; ++n) {
    LambdaRing ring(n);
    std::vector<Rat> ones(static_cast<std::size_t>(n), Rat(1));
    for (int k = 0; k <= 2 * n; ++k) {
      IntPoly e = elementary_symmetric(k, ring);
      CHECK(evaluate(e, ones) == Rat(binomial(2 * n, k)));
      if (k <= n) {
        for (const auto& t : e.terms()) CHECK(t.coeff > 0);
      }
    }
  }
}

TEST_CASE("fundamental characters") {
  LambdaRing r1(1);
  CHECK(fundamental_character(1, r1) == r1.letter(1, 1) + r1.letter(1, -1));
  CHECK(fundamental_character(2, r1).is_zero());
  CHECK(fundamental_character(0, r1) == IntPoly::constant(r1.table(), Int(1)));
  CHECK(fundamental_character(-3, r1).is_zero());

  LambdaRing r2(2);
  IntPoly expected = r2.letter(1, 1) * r2.letter(2, 1) +
                     r2.letter(1, 1) * r2.letter(2, -1) +
                     r2.letter(1, -1) * r2.letter(2, 1) +
                     r2.letter(1, -1) * r2.letter(2, -1) +
                     IntPoly::constant(r2.table(), Int(1));
  CHECK(fundamental_character(2, r2) == expected);
}

TEST_CASE("powered fundamental characters") {
  LambdaRing r1(1);
  CHECK(fundamental_character_power(1, 2, r1) ==
        r1.letter(1, 2) + r1.letter(1, -2));

  LambdaRing r3(3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(fundamental_character_power(k, 1, r3) == fundamental_character(k, r3));
  }

  LambdaRing r2(2);
  IntPoly expected = r2.letter(1, 2) * r2.letter(2, 2) +
                     r2.letter(1, 2) * r2.letter(2, -2) +
                     r2.letter(1, -2) * r2.letter(2, 2) +
                     r2.letter(1, -2) * r2.letter(2, -2) +
                     IntPoly::constant(r2.table(), Int(1));
  CHECK(fundamental_character_power(2, 2, r2) == expected);
}

TEST_CASE("identity suite at ranks 1..5") {
  for (int n = 1; n <= 5; ++n) {
    INFO("rank " << n);
    CHECK(verify_symfun_identity(SymfunIdentity::middle_vanish, n));
    CHECK(verify_symfun_identity(SymfunIdentity::branching, n));
    CHECK(verify_symfun_identity(SymfunIdentity::palindrome, n));
    CHECK(verify_symfun_identity(SymfunIdentity::e_from_f, n));
  }
}

TEST_CASE("the one-above-rank character vanishes") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(fundamental_character(n + 1, LambdaRing(n)).is_zero());
  }
}

TEST_CASE("symmetry under permutations and inversions") {
  LambdaRing r3(3);
  const VarTable& t = r3.table();

  auto permuted = [&](const IntPoly& p, const std::vector<int>& perm) {
    SubstitutionMap<Int> a;
    for (int i = 1; i <= 3; ++i) {
      a.emplace("L" + std::to_string(i),
                Substitution<Int>{IntPoly::variable(
                                      t, "L" + std::to_string(perm[static_cast<std::size_t>(i - 1)])),
                                  {}});
    }
    return substitute(p, a);
  };
  auto inverted = [&](const IntPoly& p, int which) {
    SubstitutionMap<Int> a;
    for (int i = 1; i <= 3; ++i) {
      a.emplace("L" + std::to_string(i),
                Substitution<Int>{IntPoly::variable(t, "L" + std::to_string(i),
                                                    i == which ? -1 : 1),
                                  {}});
    }
    return substitute(p, a);
  };

  const std::vector<std::vector<int>> perms = {{2, 1, 3}, {3, 1, 2}, {1, 3, 2}};
  for (int k = 0; k <= 6; ++k) {
    IntPoly e = elementary_symmetric(k, r3);
    IntPoly f = fundamental_character(k, r3);
    for (const auto& perm : perms) {
      CHECK(permuted(e, perm) == e);
      CHECK(permuted(f, perm) == f);
    }
    for (int which = 1; which <= 3; ++which) {
      CHECK(inverted(e, which) == e);
      CHECK(inverted(f, which) == f);
    }
  }
}

TEST_CASE("branching recursion exactly at ranks 2..5") {
  for (int n = 2; n <= 5; ++n) {
    LambdaRing ring(n);
    LambdaRing lower(n - 1);
    IntPoly ln = ring.letter(n, 1);
    IntPoly ln_inv = ring.letter(n, -1);
    for (int k = 1; k <= n; ++k) {
      IntPoly rhs = (ln + ln_inv) * embed(fundamental_character(k - 1, lower),
                                          ring.table()) +
                    embed(fundamental_character(k - 2, lower), ring.table()) +
                    embed(fundamental_character(k, lower), ring.table());
      INFO("n=" << n << " k=" << k);
      CHECK(fundamental_character(k, ring) == rhs);
    }
  }
}

TEST_CASE("randomized numeric cross-check of the identities") {
  Rng rng(20240601);
  int points = 0;
  while (points < 200) {
    const int n = static_cast<int>(rng.range(2, 4));
    LambdaRing ring(n);
    LambdaRing lower(n - 1);
    std::vector<Rat> pt;
    for (int i = 0; i < n; ++i) pt.emplace_back(rng.nonzero(3));
    std::vector<Rat> pt_lower(pt.begin(), pt.end() - 1);

    // branching
    const int k = static_cast<int>(rng.range(1, n));
    Rat lam = pt.back();
    Rat lhs = evaluate(fundamental_character(k, ring), pt);
    Rat rhs = (lam + Rat(1) / lam) *
                  evaluate(fundamental_character(k - 1, lower), pt_lower) +
              evaluate(fundamental_character(k - 2, lower), pt_lower) +
              evaluate(fundamental_character(k, lower), pt_lower);
    CHECK(lhs == rhs);

    // e-from-f
    const int i = static_cast<int>(rng.range(0, n));
    Rat esum(0);
    for (int j = i; j >= 0; j -= 2) {
      esum += evaluate(fundamental_character(j, ring), pt);
    }
    CHECK(evaluate(elementary_symmetric(i, ring), pt) == esum);

    // palindrome
    CHECK(evaluate(elementary_symmetric(i, ring), pt) ==
          evaluate(elementary_symmetric(2 * n - i, ring), pt));

    // middle vanish, one rank down
    CHECK(evaluate(fundamental_character(n, lower), pt_lower) == 0);

    ++points;
  }
}
