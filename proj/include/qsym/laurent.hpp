#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsym/errors.hpp"

namespace qsym {

using Int = mpz_class;
using Rat = mpq_class;

/// Exponent vector of a Laurent monomial; entries may be negative.
/// Length always equals the arity of the governing VarTable.
using ExpVec = std::vector<std::int32_t>;

inline long long exp_grade(const ExpVec& e) {
  long long g = 0;
  for (auto x : e) g += x;
  return g;
}

/// Three-way comparison in graded-lexicographic order (grade first, then
/// entry-wise with variable 0 most significant). Total order on exponent
/// vectors of equal length; fixes the canonical term order everywhere.
inline int grlex_compare(const ExpVec& a, const ExpVec& b) {
  const long long ga = exp_grade(a);
  const long long gb = exp_grade(b);
  if (ga != gb) return ga < gb ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

struct GrlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    return grlex_compare(a, b) > 0;
  }
};

/// Immutable ordered list of distinct variable names. The order is fixed at
/// construction and defines exponent positions; polynomials over tables with
/// the same name sequence are interoperable.
class VarTable {
 public:
  VarTable() : names_(std::make_shared<const std::vector<std::string>>()) {}

  explicit VarTable(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(
            std::move(names))) {
    for (std::size_t i = 0; i < names_->size(); ++i) {
      for (std::size_t j = i + 1; j < names_->size(); ++j) {
        if ((*names_)[i] == (*names_)[j]) {
          throw usage_error("duplicate variable name '" + (*names_)[i] +
                            "' in table");
        }
      }
    }
  }

  std::size_t arity() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i) {
      if ((*names_)[i] == name) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const VarTable& a, const VarTable& b) {
    return !(a == b);
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

namespace detail {

inline bool coeff_is_zero(const Int& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }

}  // namespace detail

/// Sparse multivariate Laurent polynomial over an exact coefficient ring
/// (Int or Rat). Terms are kept sorted in descending graded-lex order with
/// no zero coefficients, so equal polynomials have equal representations.
/// Values are immutable after construction; all operations are pure.
template <typename C>
class LaurentPoly {
 public:
  struct Term {
    ExpVec exps;
    C coeff;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(VarTable table) : table_(std::move(table)) {}

  /// Builds from an arbitrary term list: sorts, merges, drops zeros.
  LaurentPoly(VarTable table, std::vector<Term> terms)
      : table_(std::move(table)), terms_(std::move(terms)) {
    for (const Term& t : terms_) {
      if (t.exps.size() != table_.arity()) {
        throw usage_error("exponent vector length does not match table arity");
      }
    }
    canonicalize();
  }

  static LaurentPoly zero(VarTable table) { return LaurentPoly(std::move(table)); }

  static LaurentPoly constant(VarTable table, C value) {
    LaurentPoly p(std::move(table));
    if (!detail::coeff_is_zero(value)) {
      p.terms_.push_back(Term{ExpVec(p.table_.arity(), 0), std::move(value)});
    }
    return p;
  }

  static LaurentPoly monomial(VarTable table, ExpVec exps, C coeff) {
    LaurentPoly p(std::move(table));
    if (exps.size() != p.table_.arity()) {
      throw usage_error("exponent vector length does not match table arity");
    }
    if (!detail::coeff_is_zero(coeff)) {
      p.terms_.push_back(Term{std::move(exps), std::move(coeff)});
    }
    return p;
  }

  /// The monomial name^exp (coefficient 1).
  static LaurentPoly variable(VarTable table, std::string_view name,
                              std::int32_t exp = 1) {
    auto idx = table.index_of(name);
    if (!idx) throw usage_error(std::string("unknown variable '") + std::string(name) + "'");
    ExpVec e(table.arity(), 0);
    e[*idx] = exp;
    return monomial(std::move(table), std::move(e), C(1));
  }

  const VarTable& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && exp_grade(terms_[0].exps) == 0 &&
            std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(),
                        [](std::int32_t x) { return x == 0; }));
  }

  /// Constant term (0 if absent).
  C constant_coefficient() const {
    for (const Term& t : terms_) {
      if (std::all_of(t.exps.begin(), t.exps.end(),
                      [](std::int32_t x) { return x == 0; })) {
        return t.coeff;
      }
    }
    return C(0);
  }

  /// Coefficient of a given monomial (0 if absent).
  C coefficient(const ExpVec& exps) const {
    for (const Term& t : terms_) {
      if (t.exps == exps) return t.coeff;
    }
    return C(0);
  }

  bool has_negative_exponent(std::size_t var) const {
    for (const Term& t : terms_) {
      if (t.exps[var] < 0) return true;
    }
    return false;
  }

  bool all_exponents_nonnegative() const {
    for (const Term& t : terms_) {
      for (auto x : t.exps) {
        if (x < 0) return false;
      }
    }
    return true;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.table_ != b.table_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exps != b.terms_[i].exps ||
          a.terms_[i].coeff != b.terms_[i].coeff) {
        return false;
      }
    }
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_table(a, b);
    LaurentPoly r(a.table_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int cmp = grlex_compare(a.terms_[i].exps, b.terms_[j].exps);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        C c = a.terms_[i].coeff + b.terms_[j].coeff;
        if (!detail::coeff_is_zero(c)) {
          r.terms_.push_back(Term{a.terms_[i].exps, std::move(c)});
        }
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }

  LaurentPoly operator-() const {
    LaurentPoly r(table_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.exps, -t.coeff});
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_table(a, b);
    LaurentPoly r(a.table_);
    if (a.is_zero() || b.is_zero()) return r;
    // Accumulate into an ordered map; distinct products usually collapse
    // heavily, so this also bounds peak memory.
    std::map<ExpVec, C, GrlexGreater> acc;
    const std::size_t arity = a.table_.arity();
    ExpVec e(arity);
    for (const Term& ta : a.terms_) {
      for (const Term& tb : b.terms_) {
        for (std::size_t v = 0; v < arity; ++v) e[v] = ta.exps[v] + tb.exps[v];
        auto it = acc.find(e);
        if (it == acc.end()) {
          acc.emplace(e, ta.coeff * tb.coeff);
        } else {
          it->second += ta.coeff * tb.coeff;
        }
      }
    }
    r.terms_.reserve(acc.size());
    for (auto& [exps, coeff] : acc) {
      if (!detail::coeff_is_zero(coeff)) {
        r.terms_.push_back(Term{exps, std::move(coeff)});
      }
    }
    return r;
  }

  friend LaurentPoly operator*(const C& s, const LaurentPoly& p) {
    LaurentPoly r(p.table_);
    if (detail::coeff_is_zero(s)) return r;
    r.terms_.reserve(p.terms_.size());
    for (const Term& t : p.terms_) r.terms_.push_back(Term{t.exps, s * t.coeff});
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& p, const C& s) { return s * p; }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

 private:
  static void check_same_table(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.table_ != b.table_) {
      throw usage_error("polynomials are over different variable tables");
    }
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return grlex_compare(a.exps, b.exps) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!merged.empty() && merged.back().exps == t.exps) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) {
                                  return detail::coeff_is_zero(t.coeff);
                                }),
                 merged.end());
    terms_ = std::move(merged);
  }

  VarTable table_;
  std::vector<Term> terms_;
};

using IntPoly = LaurentPoly<Int>;
using RatPoly = LaurentPoly<Rat>;

/// Nonnegative power by repeated squaring.
template <typename C>
LaurentPoly<C> pow(const LaurentPoly<C>& base, unsigned long e) {
  LaurentPoly<C> result = LaurentPoly<C>::constant(base.table(), C(1));
  LaurentPoly<C> b = base;
  while (e > 0) {
    if (e & 1u) result = result * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return result;
}

/// Scales every exponent vector entrywise by N >= 1; coefficients unchanged.
/// A ring homomorphism (it is substitution of N-th powers for variables).
template <typename C>
LaurentPoly<C> frobenius_power(const LaurentPoly<C>& p, int N) {
  if (N < 1) throw usage_error("frobenius_power requires N >= 1");
  std::vector<typename LaurentPoly<C>::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    ExpVec e = t.exps;
    for (auto& x : e) x *= N;
    terms.push_back({std::move(e), t.coeff});
  }
  // Scaling by a positive constant preserves graded-lex order and cannot
  // merge distinct monomials, so the term list is already canonical.
  return LaurentPoly<C>(p.table(), std::move(terms));
}

/// One variable's substitution image, with an optional explicit inverse used
/// when the variable occurs with negative exponents. Without an explicit
/// inverse only a monomial unit image can be inverted.
template <typename C>
struct Substitution {
  LaurentPoly<C> image;
  std::optional<LaurentPoly<C>> inverse;
};

template <typename C>
using SubstitutionMap = std::map<std::string, Substitution<C>>;

namespace detail {

inline bool coeff_is_unit(const Int& c) { return c == 1 || c == -1; }
inline bool coeff_is_unit(const Rat& c) { return sgn(c) != 0; }

inline Int coeff_invert(const Int& c) { return c; /* valid for +-1 only */ }
inline Rat coeff_invert(const Rat& c) { return Rat(1) / c; }

template <typename C>
LaurentPoly<C> invert_monomial_unit(const LaurentPoly<C>& p,
                                    const std::string& var) {
  if (p.terms().size() != 1 || !coeff_is_unit(p.terms()[0].coeff)) {
    throw substitution_error(
        "image of '" + var +
        "' is not invertible (needs a monomial unit or an explicit inverse)");
  }
  ExpVec e = p.terms()[0].exps;
  for (auto& x : e) x = -x;
  return LaurentPoly<C>::monomial(p.table(), std::move(e),
                                  coeff_invert(p.terms()[0].coeff));
}

template <typename C>
struct SubstEntry {
  const LaurentPoly<C>* image = nullptr;
  const LaurentPoly<C>* explicit_inverse = nullptr;
  std::optional<LaurentPoly<C>> derived_inverse;
};

// Horner-style recursion over variable positions: group terms by the current
// variable's exponent, substitute the rest, and fold the groups together
// multiplying by the image across exponent gaps. Shares the big
// multiplications across all terms with a common exponent prefix.
template <typename C>
LaurentPoly<C> substitute_rec(
    const std::vector<const typename LaurentPoly<C>::Term*>& terms,
    std::size_t var, std::size_t arity, std::vector<SubstEntry<C>>& entries,
    const VarTable& source, const VarTable& target) {
  if (terms.empty()) return LaurentPoly<C>::zero(target);
  if (var == arity) {
    C sum(0);
    for (const auto* t : terms) sum += t->coeff;
    return LaurentPoly<C>::constant(target, std::move(sum));
  }
  std::map<std::int32_t, std::vector<const typename LaurentPoly<C>::Term*>,
           std::greater<>>
      groups;
  for (const auto* t : terms) groups[t->exps[var]].push_back(t);

  if (groups.size() == 1 && groups.begin()->first == 0) {
    return substitute_rec<C>(groups.begin()->second, var + 1, arity, entries,
                             source, target);
  }

  SubstEntry<C>& entry = entries[var];
  if (entry.image == nullptr) {
    throw usage_error("no image assigned to occurring variable '" +
                      source.name(var) + "'");
  }
  const LaurentPoly<C>& image = *entry.image;

  LaurentPoly<C> acc = LaurentPoly<C>::zero(target);
  std::optional<std::int32_t> prev;
  for (const auto& [exp, group] : groups) {
    if (prev) acc = acc * pow(image, static_cast<unsigned long>(*prev - exp));
    acc = acc + substitute_rec<C>(group, var + 1, arity, entries, source, target);
    prev = exp;
  }
  const std::int32_t lowest = *prev;
  if (lowest > 0) {
    acc = acc * pow(image, static_cast<unsigned long>(lowest));
  } else if (lowest < 0) {
    if (entry.explicit_inverse == nullptr && !entry.derived_inverse) {
      entry.derived_inverse = invert_monomial_unit(image, source.name(var));
    }
    const LaurentPoly<C>& inv = entry.explicit_inverse != nullptr
                                    ? *entry.explicit_inverse
                                    : *entry.derived_inverse;
    acc = acc * pow(inv, static_cast<unsigned long>(-lowest));
  }
  return acc;
}

}  // namespace detail

/// Homomorphic image of p under a variable assignment. Every variable that
/// actually occurs in p must be assigned; all images must share one target
/// table. Negative exponents require an invertible image (see Substitution).
template <typename C>
LaurentPoly<C> substitute(const LaurentPoly<C>& p,
                          const SubstitutionMap<C>& assignment) {
  const VarTable& source = p.table();
  // Determine the target table from the assignment (fall back to the source
  // table so a constant with an empty assignment maps to itself).
  const VarTable* target = nullptr;
  for (const auto& [name, sub] : assignment) {
    if (target == nullptr) {
      target = &sub.image.table();
    } else if (*target != sub.image.table()) {
      throw usage_error("substitution images are over different tables");
    }
    if (sub.inverse && sub.inverse->table() != sub.image.table()) {
      throw usage_error("substitution inverse is over a different table");
    }
  }
  if (target == nullptr) target = &source;

  std::vector<detail::SubstEntry<C>> entries(source.arity());
  for (const auto& [name, sub] : assignment) {
    auto idx = source.index_of(name);
    if (!idx) {
      throw usage_error("assignment names unknown variable '" + name + "'");
    }
    entries[*idx].image = &sub.image;
    if (sub.inverse) entries[*idx].explicit_inverse = &*sub.inverse;
  }

  std::vector<const typename LaurentPoly<C>::Term*> term_ptrs;
  term_ptrs.reserve(p.terms().size());
  for (const auto& t : p.terms()) term_ptrs.push_back(&t);
  return detail::substitute_rec<C>(term_ptrs, 0, source.arity(), entries,
                                   source, *target);
}

/// Exact evaluation at a point given positionally (one value per variable).
/// Agrees with substitution followed by constant extraction.
template <typename C>
Rat evaluate(const LaurentPoly<C>& p, const std::vector<Rat>& point) {
  if (point.size() != p.table().arity()) {
    throw usage_error("point size does not match table arity");
  }
  Rat total(0);
  for (const auto& t : p.terms()) {
    Rat prod(t.coeff);
    for (std::size_t v = 0; v < point.size(); ++v) {
      const std::int32_t e = t.exps[v];
      if (e == 0) continue;
      if (sgn(point[v]) == 0) {
        if (e < 0) {
          throw evaluation_error("zero assigned to variable '" +
                                 p.table().name(v) +
                                 "' occurring with negative exponent");
        }
        prod = 0;
        break;
      }
      Rat pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[v].get_num_mpz_t(),
                 static_cast<unsigned long>(e < 0 ? -e : e));
      mpz_pow_ui(pw.get_den_mpz_t(), point[v].get_den_mpz_t(),
                 static_cast<unsigned long>(e < 0 ? -e : e));
      pw.canonicalize();
      if (e < 0) pw = Rat(1) / pw;
      prod *= pw;
    }
    total += prod;
  }
  return total;
}

/// Evaluation with values given by variable name.
template <typename C>
Rat evaluate(const LaurentPoly<C>& p, const std::map<std::string, Rat>& point) {
  std::vector<Rat> positional(p.table().arity(), Rat(0));
  for (std::size_t v = 0; v < p.table().arity(); ++v) {
    auto it = point.find(p.table().name(v));
    if (it != point.end()) positional[v] = it->second;
  }
  return evaluate(p, positional);
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<RatPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) terms.push_back({t.exps, Rat(t.coeff)});
  return RatPoly(p.table(), std::move(terms));
}

/// Conversion asserting that every coefficient is an integer.
inline IntPoly to_integer(const RatPoly& p) {
  std::vector<IntPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    if (t.coeff.get_den() != 1) {
      throw invariant_error("coefficient " + t.coeff.get_str() +
                            " is not an integer");
    }
    terms.push_back({t.exps, t.coeff.get_num()});
  }
  return IntPoly(p.table(), std::move(terms));
}

/// Re-expresses p over a larger (or reordered) table; every variable of p
/// must exist in the target by name.
template <typename C>
LaurentPoly<C> embed(const LaurentPoly<C>& p, const VarTable& target) {
  if (p.table() == target) return p;
  std::vector<std::size_t> where(p.table().arity());
  for (std::size_t v = 0; v < p.table().arity(); ++v) {
    auto idx = target.index_of(p.table().name(v));
    if (!idx) {
      throw usage_error("variable '" + p.table().name(v) +
                        "' is missing from the target table");
    }
    where[v] = *idx;
  }
  std::vector<typename LaurentPoly<C>::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    ExpVec e(target.arity(), 0);
    for (std::size_t v = 0; v < where.size(); ++v) e[where[v]] = t.exps[v];
    terms.push_back({std::move(e), t.coeff});
  }
  return LaurentPoly<C>(target, std::move(terms));
}

}  // namespace qsym
