#pragma once

#include <vector>

#include "qsym/quantum.hpp"

namespace qsym {

/// The four coefficient identities behind the strand-braiding formula, fully
/// symbolic in n and k (encoded as Q = q^n, K = q^k):
///   weight-q:         [n-k]/[n-k+1] + q^{n-k+1}/[n-k+1] = q
///   weight-unit:      (q^{n-k+1}/[n-k+1] + q^{-1}) * [n-k+1]/[n-k+2] = 1
///   collect-leading:  the collected coefficient of the leading reduction
///                     term equals [k+1] q^{n-k}/[n-k]
///   collect-inverse:  the collected coefficient of the inverse-weight
///                     reduction term equals [k+1] q^{-1}
enum class BraidingIdentity {
  weight_q,
  weight_unit,
  collect_leading,
  collect_inverse,
};

inline const char* to_string(BraidingIdentity id) {
  switch (id) {
    case BraidingIdentity::weight_q: return "weight-q";
    case BraidingIdentity::weight_unit: return "weight-unit";
    case BraidingIdentity::collect_leading: return "collect-leading";
    case BraidingIdentity::collect_inverse: return "collect-inverse";
  }
  return "?";
}

/// Both sides of an identity kept as term lists; the sides are combined by
/// rational-function arithmetic only, with no manual simplification.
struct BraidingSides {
  std::vector<RationalFunction> lhs;
  std::vector<RationalFunction> rhs;
};

namespace detail {

inline RationalFunction qi(long a, long b, long c) {
  return qint_symbolic(QIntSpec{a, b, c});
}
inline RationalFunction qp(long a, long b, long c) {
  return qpower_symbolic(QIntSpec{a, b, c});
}

}  // namespace detail

/// Term-for-term transcription of the named identity.
inline BraidingSides braiding_identity_terms(BraidingIdentity id) {
  using detail::qi;
  using detail::qp;
  switch (id) {
    case BraidingIdentity::weight_q:
      return {{qi(1, -1, 0) / qi(1, -1, 1), qp(1, -1, 1) / qi(1, -1, 1)},
              {qp(0, 0, 1)}};
    case BraidingIdentity::weight_unit:
      return {{(qp(1, -1, 1) / qi(1, -1, 1) + qp(0, 0, -1)) *
               (qi(1, -1, 1) / qi(1, -1, 2))},
              {RationalFunction::integer(1)}};
    case BraidingIdentity::collect_leading:
      return {{qp(1, 0, 0) * qi(1, 0, 1) / (qi(1, 0, 0) * qi(1, -1, 1)),
               -(qp(2, -1, 1) * qi(0, 1, 0) / (qi(1, 0, 0) * qi(1, -1, 1))),
               (qp(1, -1, 1) / qi(1, -1, 1)) * (qi(1, 0, 1) / qi(1, 0, 0)) *
                   qi(0, 1, 0),
               -(qi(0, 1, 1) * qi(1, -1, -1) / qi(1, -1, 0)),
               qi(1, -1, -1) / qi(1, 0, 0),
               (qi(1, -1, 0) / qi(1, -1, 1)) * (qi(1, 0, 1) / qi(1, 0, 0)) *
                   qi(0, 1, 0)},
              {qi(0, 1, 1) * qp(1, -1, 0) / qi(1, -1, 0)}};
    case BraidingIdentity::collect_inverse:
      return {{qp(0, 0, -1) * qi(0, 1, 1),
               -(qp(0, 0, -2) * qi(0, 1, 0)),
               qp(0, 0, -1) * qi(0, 0, 2) * qi(0, 1, 0),
               qi(0, 1, 1) * qi(1, -1, -1) / qi(1, -1, 0),
               -(qi(1, -1, -1) / qi(1, -1, 0) * (qi(1, 0, 1) / qi(1, -1, 1))),
               -(qi(1, -1, 0) / qi(1, -1, 1) * qi(0, 0, 2) * qi(0, 1, 0))},
              {qi(0, 1, 1) * qp(0, 0, -1)}};
  }
  throw usage_error("unknown braiding identity");
}

/// Every affine quantum-integer argument the identity suite touches,
/// for specialization-soundness checks.
inline std::vector<QIntSpec> braiding_symbol_arguments() {
  return {
      {1, -1, -1},  // [n-k-1]
      {1, -1, 0},   // [n-k]
      {1, -1, 1},   // [n-k+1]
      {1, -1, 2},   // [n-k+2]
      {1, 0, 0},    // [n]
      {1, 0, 1},    // [n+1]
      {0, 1, 0},    // [k]
      {0, 1, 1},    // [k+1]
      {0, 0, 1},    // [1]
      {0, 0, 2},    // [2]
  };
}

inline RationalFunction sum_terms(const std::vector<RationalFunction>& terms) {
  RationalFunction acc;
  for (const auto& t : terms) acc = acc + t;
  return acc;
}

/// Builds both sides of the named identity symbolically over {q, Q, K} and
/// compares them by cross-multiplication. A false return signals a
/// transcription or arithmetic defect.
inline bool verify_braiding_identity(BraidingIdentity id) {
  const BraidingSides sides = braiding_identity_terms(id);
  return sum_terms(sides.lhs) == sum_terms(sides.rhs);
}

inline bool verify_braiding_identities_all() {
  for (BraidingIdentity id :
       {BraidingIdentity::weight_q, BraidingIdentity::weight_unit,
        BraidingIdentity::collect_leading, BraidingIdentity::collect_inverse}) {
    if (!verify_braiding_identity(id)) return false;
  }
  return true;
}

/// Redundant numeric sweep: re-checks an identity after specializing
/// (n, k) -> (n0, k0), on the cross-multiplied polynomial form (the
/// denominators may legitimately specialize to zero at k0 = n0, where the
/// check degenerates to 0 = 0).
inline bool braiding_identity_specializes(BraidingIdentity id, long n0, long k0) {
  const BraidingSides sides = braiding_identity_terms(id);
  const RationalFunction lhs = sum_terms(sides.lhs);
  const RationalFunction rhs = sum_terms(sides.rhs);
  const IntPoly cross_left = specialize_qnk(lhs.num() * rhs.den(), n0, k0);
  const IntPoly cross_right = specialize_qnk(rhs.num() * lhs.den(), n0, k0);
  return cross_left == cross_right;
}

/// Sweeps both collect identities over 1 <= k <= n <= max_rank.
inline bool braiding_numeric_sweep(int max_rank) {
  for (long n = 1; n <= max_rank; ++n) {
    for (long k = 1; k <= n; ++k) {
      if (!braiding_identity_specializes(BraidingIdentity::collect_leading, n, k) ||
          !braiding_identity_specializes(BraidingIdentity::collect_inverse, n, k)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qsym
