#pragma once

#include <string>
#include <vector>

#include "qsym/laurent.hpp"
#include "qsym/transition.hpp"

namespace qsym {

/// Commutative model of the marked-annulus algebra at a given rank:
/// Z[q^{+-1}][T^{+-1}, X_1..X_{rank-1}] with q, T Laurent and the X_i
/// polynomial generators. Rank 1 has no X generators.
class AnnulusRing {
 public:
  explicit AnnulusRing(int rank) : rank_(rank), table_(make_table(rank)) {
    if (rank < 1) throw usage_error("annulus rank must be >= 1");
  }

  int rank() const { return rank_; }
  const VarTable& table() const { return table_; }

  IntPoly q(std::int32_t exp = 1) const {
    return IntPoly::variable(table_, "q", exp);
  }
  IntPoly t(std::int32_t exp = 1) const {
    return IntPoly::variable(table_, "T", exp);
  }
  /// X_j with the boundary conventions: X_0 = 1, X_j = 0 for j < 0 or
  /// j = rank (the top character of the lower-rank alphabet vanishes).
  IntPoly x(int j) const {
    if (j < 0 || j == rank_) return IntPoly::zero(table_);
    if (j == 0) return IntPoly::constant(table_, Int(1));
    if (j > rank_) throw usage_error("X index out of range");
    return IntPoly::variable(table_, "X" + std::to_string(j));
  }

 private:
  static VarTable make_table(int rank) {
    std::vector<std::string> names{"q", "T"};
    for (int i = 1; i <= rank - 1; ++i) names.push_back("X" + std::to_string(i));
    return VarTable(std::move(names));
  }

  int rank_;
  VarTable table_;
};

/// Elements of the annulus ring are plain Laurent polynomials over its table;
/// the X-exponents stay nonnegative by construction.
using AnnulusElem = IntPoly;

/// Domain of the annulus homomorphisms at rank n:
/// Z[L_n^{+-1}, f_1..f_{n-1}], the f_i standing for the rank-(n-1)
/// fundamental characters.
class BranchRing {
 public:
  explicit BranchRing(int rank) : rank_(rank), table_(make_table(rank)) {
    if (rank < 1) throw usage_error("branch rank must be >= 1");
  }

  int rank() const { return rank_; }
  const VarTable& table() const { return table_; }

  IntPoly lambda(std::int32_t exp = 1) const {
    return IntPoly::variable(table_, "L" + std::to_string(rank_), exp);
  }
  /// f_j with the same boundary conventions as AnnulusRing::x.
  IntPoly f(int j) const {
    if (j < 0 || j == rank_) return IntPoly::zero(table_);
    if (j == 0) return IntPoly::constant(table_, Int(1));
    if (j > rank_) throw usage_error("f index out of range");
    return IntPoly::variable(table_, "f" + std::to_string(j));
  }

 private:
  static VarTable make_table(int rank) {
    std::vector<std::string> names{"L" + std::to_string(rank)};
    for (int i = 1; i <= rank - 1; ++i) names.push_back("f" + std::to_string(i));
    return VarTable(std::move(names));
  }

  int rank_;
  VarTable table_;
};

/// F_{k,n} expanded one rank down: (L_n + L_n^{-1}) f_{k-1} + f_{k-2} + f_k.
inline IntPoly branch_character(int k, const BranchRing& ring) {
  if (k < 1 || k > ring.rank()) throw usage_error("branch_character requires 1 <= k <= rank");
  return (ring.lambda(1) + ring.lambda(-1)) * ring.f(k - 1) + ring.f(k - 2) +
         ring.f(k);
}

/// F_{k,n} on the N-th-power alphabet, expanded one rank down: the lambda
/// factor becomes L_n^N + L_n^{-N} and the powered lower-rank characters are
/// the power fundamental polynomials in f_1..f_{n-1}.
inline IntPoly branch_character_power(int k, int N, const BranchRing& ring) {
  if (k < 1 || k > ring.rank()) {
    throw usage_error("branch_character_power requires 1 <= k <= rank");
  }
  if (N < 1) throw usage_error("branch_character_power requires N >= 1");
  auto q_poly = [&](int j) {
    return embed(power_fundamental_ext(ring.rank() - 1, N, j), ring.table());
  };
  return (ring.lambda(static_cast<std::int32_t>(N)) +
          ring.lambda(static_cast<std::int32_t>(-N))) *
             q_poly(k - 1) +
         q_poly(k - 2) + q_poly(k);
}

enum class PhiDirection { upper, lower };

/// Threading homomorphism into the annulus ring: L_n maps to q*T (upper) or
/// q^{-1}*T (lower); the f_i map to X_i in both directions.
inline AnnulusElem phi_map(PhiDirection direction, const IntPoly& p, int rank) {
  const BranchRing source(rank);
  const AnnulusRing target(rank);
  if (p.table() != source.table()) {
    throw usage_error("phi_map input is not over the rank-" +
                      std::to_string(rank) + " branch table");
  }
  SubstitutionMap<Int> a;
  const std::int32_t qexp = direction == PhiDirection::upper ? 1 : -1;
  a.emplace("L" + std::to_string(rank),
            Substitution<Int>{target.q(qexp) * target.t(1), {}});
  for (int i = 1; i <= rank - 1; ++i) {
    a.emplace("f" + std::to_string(i), Substitution<Int>{target.x(i), {}});
  }
  return substitute(p, a);
}

/// The threaded loop classes l_k in the annulus ring:
///   l_1 = q T + q^{-1} T^{-1} + X_1,
///   l_k = q T X_{k-1} + q^{-1} T^{-1} X_{k-1} + X_k + X_{k-2}  (1 < k < n),
///   l_n = q T X_{n-1} + q^{-1} T^{-1} X_{n-1} + X_{n-2},
/// with X_0 = 1 and, at rank 1, l_1 = q T + q^{-1} T^{-1}.
inline AnnulusElem loop_class(int k, const AnnulusRing& ring) {
  const int n = ring.rank();
  if (k < 1 || k > n) throw usage_error("loop_class requires 1 <= k <= rank");
  const IntPoly qt = ring.q(1) * ring.t(1);
  const IntPoly qt_inv = ring.q(-1) * ring.t(-1);
  if (n == 1) return qt + qt_inv;
  if (k == 1) return qt + qt_inv + ring.x(1);
  if (k < n) return qt * ring.x(k - 1) + qt_inv * ring.x(k - 1) + ring.x(k) + ring.x(k - 2);
  return qt * ring.x(n - 1) + qt_inv * ring.x(n - 1) + ring.x(n - 2);
}

/// Checks that the upper threading map sends each expanded character to the
/// corresponding loop class.
inline bool verify_loop_image(int rank) {
  const BranchRing source(rank);
  const AnnulusRing target(rank);
  for (int k = 1; k <= rank; ++k) {
    if (phi_map(PhiDirection::upper, branch_character(k, source), rank) !=
        loop_class(k, target)) {
      return false;
    }
  }
  return true;
}

/// The difference between the two threadings of the powered character:
/// phi_upper(F_k^{(N)}) - phi_lower(F_k^{(N)}).
inline AnnulusElem transparency_defect(int rank, int N, int k) {
  const BranchRing source(rank);
  const IntPoly powered = branch_character_power(k, N, source);
  return phi_map(PhiDirection::upper, powered, rank) -
         phi_map(PhiDirection::lower, powered, rank);
}

/// Checks the closed form of the defect:
/// [(q^N - q^{-N}) T^N + (q^{-N} - q^N) T^{-N}] * Q^{(N,k-1)}(X_1..X_{n-1}).
inline bool verify_defect_factorization(int rank, int N, int k) {
  const AnnulusRing ring(rank);
  const IntPoly q_n = ring.q(static_cast<std::int32_t>(N));
  const IntPoly q_minus_n = ring.q(static_cast<std::int32_t>(-N));
  const IntPoly t_n = ring.t(static_cast<std::int32_t>(N));
  const IntPoly t_minus_n = ring.t(static_cast<std::int32_t>(-N));
  const IntPoly scalar = (q_n - q_minus_n) * t_n + (q_minus_n - q_n) * t_minus_n;

  IntPoly q_factor = power_fundamental_ext(rank - 1, N, k - 1);
  SubstitutionMap<Int> to_x;
  for (int i = 1; i <= rank - 1; ++i) {
    to_x.emplace("f" + std::to_string(i), Substitution<Int>{ring.x(i), {}});
  }
  const IntPoly expected =
      scalar * (q_factor.is_constant()
                    ? IntPoly::constant(ring.table(), q_factor.constant_coefficient())
                    : substitute(q_factor, to_x));
  return transparency_defect(rank, N, k) == expected;
}

/// Order parameter of the specialization q^{2N} = 1.
struct RootOfUnityContext {
  int order;  // N >= 1
};

/// Image in Z[q]/(q^{2N} - 1)[T^{+-1}, X..]: every q-exponent is reduced into
/// the canonical window [0, 2N-1] and terms are recollected. Idempotent, and
/// a ring homomorphism on the q-exponents.
inline AnnulusElem reduce_at_root(const AnnulusElem& elem, RootOfUnityContext ctx) {
  if (ctx.order < 1) throw usage_error("root order must be >= 1");
  auto q_index = elem.table().index_of("q");
  if (!q_index) throw usage_error("element has no q variable");
  const std::int32_t modulus = static_cast<std::int32_t>(2 * ctx.order);
  std::vector<IntPoly::Term> terms;
  terms.reserve(elem.terms().size());
  for (const auto& t : elem.terms()) {
    ExpVec e = t.exps;
    std::int32_t& qe = e[*q_index];
    qe = static_cast<std::int32_t>(((qe % modulus) + modulus) % modulus);
    terms.push_back({std::move(e), t.coeff});
  }
  return IntPoly(elem.table(), std::move(terms));
}

/// Two routes to the threaded powered character agree: substituting the
/// expanded characters into the power fundamental polynomial and threading,
/// versus threading the powered branching expansion directly.
inline bool verify_composition_consistency(int rank, int N) {
  const BranchRing source(rank);
  SubstitutionMap<Int> expanded;
  for (int i = 1; i <= rank; ++i) {
    expanded.emplace("f" + std::to_string(i),
                     Substitution<Int>{branch_character(i, source), {}});
  }
  for (int k = 1; k <= rank; ++k) {
    const IntPoly via_polynomial =
        substitute(power_fundamental(rank, N, k), expanded);
    const IntPoly via_branching = branch_character_power(k, N, source);
    for (PhiDirection dir : {PhiDirection::upper, PhiDirection::lower}) {
      if (phi_map(dir, via_polynomial, rank) !=
          phi_map(dir, via_branching, rank)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qsym
