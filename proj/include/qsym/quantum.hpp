#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "qsym/laurent.hpp"

namespace qsym {

/// Table for univariate quantum-integer polynomials.
inline const VarTable& q_table() {
  static const VarTable table({"q"});
  return table;
}

/// Table for symbolic quantum integers: Q stands for q^n, K for q^k.
inline const VarTable& qnk_table() {
  static const VarTable table({"q", "Q", "K"});
  return table;
}

/// The quantum integer [m] = q^{m-1} + q^{m-3} + ... + q^{-(m-1)}.
/// [0] = 0 and [-m] = -[m], as forced by (q^m - q^{-m})/(q - q^{-1}).
inline IntPoly qint(long m) {
  const bool negative = m < 0;
  const long a = negative ? -m : m;
  std::vector<IntPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(a));
  for (long e = a - 1; e >= -(a - 1); e -= 2) {
    terms.push_back({ExpVec{static_cast<std::int32_t>(e)},
                     Int(negative ? -1 : 1)});
  }
  return IntPoly(q_table(), std::move(terms));
}

/// [m]! = [1][2]...[m]; the empty product for m = 0.
inline IntPoly qfactorial(long m) {
  if (m < 0) throw usage_error("qfactorial requires m >= 0");
  IntPoly r = IntPoly::constant(q_table(), Int(1));
  for (long i = 1; i <= m; ++i) r = r * qint(i);
  return r;
}

/// Affine symbol a*n + b*k + c naming the quantum integer [a*n + b*k + c].
struct QIntSpec {
  long n_coeff = 0;
  long k_coeff = 0;
  long offset = 0;

  long value_at(long n0, long k0) const {
    return n_coeff * n0 + k_coeff * k0 + offset;
  }
};

/// Quotient of two Laurent polynomials over {q, Q, K}. Never reduced to
/// lowest terms; equality is by cross-multiplication, so the denominator is
/// only required to be nonzero.
class RationalFunction {
 public:
  RationalFunction()
      : num_(IntPoly::zero(qnk_table())),
        den_(IntPoly::constant(qnk_table(), Int(1))) {}

  RationalFunction(IntPoly num, IntPoly den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (num_.table() != den_.table()) {
      throw usage_error("numerator and denominator tables differ");
    }
    if (den_.is_zero()) throw usage_error("zero denominator");
  }

  static RationalFunction from_poly(IntPoly p) {
    IntPoly one = IntPoly::constant(p.table(), Int(1));
    return RationalFunction(std::move(p), std::move(one));
  }

  static RationalFunction integer(long value) {
    return from_poly(IntPoly::constant(qnk_table(), Int(value)));
  }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_,
                            a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_,
                            a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (b.is_zero()) throw usage_error("division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction operator-() const {
    return RationalFunction(-num_, den_);
  }

  /// Cross-multiplication equality: n1*d2 == n2*d1 as polynomials.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

 private:
  IntPoly num_;
  IntPoly den_;
};

/// The monomial q^{a*n + b*k + c} as a rational function over {q, Q, K}.
inline RationalFunction qpower_symbolic(const QIntSpec& s) {
  ExpVec e{static_cast<std::int32_t>(s.offset),
           static_cast<std::int32_t>(s.n_coeff),
           static_cast<std::int32_t>(s.k_coeff)};
  return RationalFunction::from_poly(
      IntPoly::monomial(qnk_table(), std::move(e), Int(1)));
}

/// [a*n + b*k + c] encoded symbolically:
/// (q^c Q^a K^b - q^{-c} Q^{-a} K^{-b}) / (q - q^{-1}).
/// Specializing Q -> q^{n0}, K -> q^{k0} recovers qint(a*n0 + b*k0 + c).
inline RationalFunction qint_symbolic(const QIntSpec& s) {
  ExpVec pos{static_cast<std::int32_t>(s.offset),
             static_cast<std::int32_t>(s.n_coeff),
             static_cast<std::int32_t>(s.k_coeff)};
  ExpVec neg{static_cast<std::int32_t>(-s.offset),
             static_cast<std::int32_t>(-s.n_coeff),
             static_cast<std::int32_t>(-s.k_coeff)};
  IntPoly num = IntPoly::monomial(qnk_table(), std::move(pos), Int(1)) -
                IntPoly::monomial(qnk_table(), std::move(neg), Int(1));
  IntPoly den = IntPoly::monomial(qnk_table(), ExpVec{1, 0, 0}, Int(1)) -
                IntPoly::monomial(qnk_table(), ExpVec{-1, 0, 0}, Int(1));
  return RationalFunction(std::move(num), std::move(den));
}

/// Substitutes Q -> q^{n0}, K -> q^{k0} in a {q, Q, K} polynomial, producing
/// a univariate Laurent polynomial in q.
inline IntPoly specialize_qnk(const IntPoly& p, long n0, long k0) {
  SubstitutionMap<Int> a;
  a.emplace("q", Substitution<Int>{IntPoly::variable(q_table(), "q"), {}});
  a.emplace("Q", Substitution<Int>{
                     IntPoly::variable(q_table(), "q",
                                       static_cast<std::int32_t>(n0)),
                     {}});
  a.emplace("K", Substitution<Int>{
                     IntPoly::variable(q_table(), "q",
                                       static_cast<std::int32_t>(k0)),
                     {}});
  return substitute(p, a);
}

/// Specializes both parts of a rational function at integer (n, k).
/// The returned pair is (numerator, denominator) over {q}; the denominator
/// may specialize to zero at degenerate parameter values, so no
/// RationalFunction is formed.
inline std::pair<IntPoly, IntPoly> specialize_qnk(const RationalFunction& f,
                                                  long n0, long k0) {
  return {specialize_qnk(f.num(), n0, k0), specialize_qnk(f.den(), n0, k0)};
}

}  // namespace qsym
