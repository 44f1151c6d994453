#pragma once

#include <string>
#include <vector>

#include "qsym/laurent.hpp"

namespace qsym {

/// The 2n-letter symplectic alphabet {L1^{+-1}, ..., Ln^{+-1}} presented as a
/// rank-n Laurent table. Rank 0 is the empty alphabet (constants only).
class LambdaRing {
 public:
  explicit LambdaRing(int rank) : rank_(rank), table_(make_table(rank)) {
    if (rank < 0) throw usage_error("rank must be nonnegative");
  }

  int rank() const { return rank_; }
  const VarTable& table() const { return table_; }

  IntPoly letter(int i, std::int32_t exp = 1) const {
    return IntPoly::variable(table_, "L" + std::to_string(i), exp);
  }

 private:
  static VarTable make_table(int rank) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(rank < 0 ? 0 : rank));
    for (int i = 1; i <= rank; ++i) names.push_back("L" + std::to_string(i));
    return VarTable(std::move(names));
  }

  int rank_;
  VarTable table_;
};

/// All elementary symmetric polynomials E_0..E_{2n} of the 2n-letter alphabet
/// {L_i^{+-1}}, computed by the one-letter-at-a-time recurrence.
inline std::vector<IntPoly> elementary_symmetric_all(const LambdaRing& ring) {
  const int letters = 2 * ring.rank();
  std::vector<IntPoly> e(static_cast<std::size_t>(letters) + 1,
                         IntPoly::zero(ring.table()));
  e[0] = IntPoly::constant(ring.table(), Int(1));
  int used = 0;
  for (int i = 1; i <= ring.rank(); ++i) {
    for (int s : {+1, -1}) {
      IntPoly u = ring.letter(i, static_cast<std::int32_t>(s));
      ++used;
      for (int j = used; j >= 1; --j) e[j] = e[j] + u * e[j - 1];
    }
  }
  return e;
}

/// E_k of the alphabet {L_i^{+-1}}; 1 for k = 0, 0 outside [0, 2n].
inline IntPoly elementary_symmetric(int k, const LambdaRing& ring) {
  if (k < 0 || k > 2 * ring.rank()) return IntPoly::zero(ring.table());
  if (k == 0) return IntPoly::constant(ring.table(), Int(1));
  return elementary_symmetric_all(ring)[static_cast<std::size_t>(k)];
}

/// Character of the k-th fundamental symplectic representation:
/// F_k = E_k - E_{k-2}, with F_0 = 1 and F_k = 0 for k < 0.
inline IntPoly fundamental_character(int k, const LambdaRing& ring) {
  if (k < 0) return IntPoly::zero(ring.table());
  if (k == 0) return IntPoly::constant(ring.table(), Int(1));
  return elementary_symmetric(k, ring) - elementary_symmetric(k - 2, ring);
}

/// F_k on the N-th-power alphabet {L_i^{+-N}}.
inline IntPoly fundamental_character_power(int k, int N,
                                           const LambdaRing& ring) {
  return frobenius_power(fundamental_character(k, ring), N);
}

enum class SymfunIdentity {
  middle_vanish,  // E_n = E_{n-2} on the rank-(n-1) alphabet, so F_n there is 0
  branching,      // F_{k,n} = (Ln + Ln^{-1}) F_{k-1,n-1} + F_{k-2,n-1} + F_{k,n-1}
  palindrome,     // E_i = E_{2n-i} on the rank-n alphabet, 0 <= i <= n
  e_from_f,       // E_i = F_i + F_{i-2} + F_{i-4} + ...
};

inline const char* to_string(SymfunIdentity id) {
  switch (id) {
    case SymfunIdentity::middle_vanish: return "middle-vanish";
    case SymfunIdentity::branching: return "branching";
    case SymfunIdentity::palindrome: return "palindrome";
    case SymfunIdentity::e_from_f: return "e-from-f";
  }
  return "?";
}

/// Checks the named identity as exact polynomial equality for every
/// admissible index at the given rank. A false return signals a defect.
inline bool verify_symfun_identity(SymfunIdentity id, int rank) {
  if (rank < 1) throw usage_error("rank must be >= 1");
  switch (id) {
    case SymfunIdentity::middle_vanish: {
      // Vacuous at rank 1 (the rank-0 alphabet has E_1 = 0 = E_{-1}).
      LambdaRing lower(rank - 1);
      if (elementary_symmetric(rank, lower) !=
          elementary_symmetric(rank - 2, lower)) {
        return false;
      }
      return fundamental_character(rank, lower).is_zero();
    }
    case SymfunIdentity::branching: {
      LambdaRing ring(rank);
      LambdaRing lower(rank - 1);
      const IntPoly ln = ring.letter(rank, 1);
      const IntPoly ln_inv = ring.letter(rank, -1);
      for (int k = 1; k <= rank; ++k) {
        IntPoly rhs = (ln + ln_inv) *
                          embed(fundamental_character(k - 1, lower), ring.table()) +
                      embed(fundamental_character(k - 2, lower), ring.table()) +
                      embed(fundamental_character(k, lower), ring.table());
        if (fundamental_character(k, ring) != rhs) return false;
      }
      return true;
    }
    case SymfunIdentity::palindrome: {
      LambdaRing ring(rank);
      const auto e = elementary_symmetric_all(ring);
      for (int i = 0; i <= rank; ++i) {
        if (e[static_cast<std::size_t>(i)] !=
            e[static_cast<std::size_t>(2 * rank - i)]) {
          return false;
        }
      }
      return true;
    }
    case SymfunIdentity::e_from_f: {
      LambdaRing ring(rank);
      for (int i = 0; i <= rank; ++i) {
        IntPoly sum = IntPoly::zero(ring.table());
        for (int j = i; j >= 0; j -= 2) {
          sum = sum + fundamental_character(j, ring);
        }
        if (elementary_symmetric(i, ring) != sum) return false;
      }
      return true;
    }
  }
  throw usage_error("unknown identity");
}

}  // namespace qsym
