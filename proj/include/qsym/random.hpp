#pragma once

#include <cstdint>

#include "qsym/laurent.hpp"

namespace qsym {

/// Small deterministic generator (splitmix64) so randomized checks reproduce
/// bit-for-bit across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] (inclusive); hi >= lo.
  long range(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// Nonzero value in [-bound, bound].
  long nonzero(long bound) {
    long v = 0;
    while (v == 0) v = range(-bound, bound);
    return v;
  }

 private:
  std::uint64_t state_;
};

/// Random sparse polynomial: up to max_terms terms, exponents in
/// [min_exp, max_exp], coefficients in [-99, 99].
inline IntPoly random_poly(Rng& rng, const VarTable& table, int max_terms,
                           int min_exp, int max_exp) {
  std::vector<IntPoly::Term> terms;
  const long count = rng.range(0, max_terms);
  for (long t = 0; t < count; ++t) {
    ExpVec e(table.arity());
    for (auto& x : e) {
      x = static_cast<std::int32_t>(rng.range(min_exp, max_exp));
    }
    terms.push_back({std::move(e), Int(rng.range(-99, 99))});
  }
  return IntPoly(table, std::move(terms));
}

}  // namespace qsym
