#pragma once

#include <string>
#include <vector>

#include "qsym/laurent.hpp"
#include "qsym/symmetric.hpp"

namespace qsym {

inline VarTable indexed_table(const std::string& prefix, int count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count < 0 ? 0 : count));
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return VarTable(std::move(names));
}

/// Abstract elementary generators e1..e<count>.
inline VarTable elementary_table(int count) { return indexed_table("e", count); }
/// Abstract fundamental generators f1..f<count>.
inline VarTable fundamental_table(int count) { return indexed_table("f", count); }
/// Plain positive alphabet x1..x<count> (oracle domain).
inline VarTable positive_table(int count) { return indexed_table("x", count); }

/// Power sums p_1..p_max expressed in Z[e_1..e_{num_e}] via the Newton
/// recurrence p_m = e_1 p_{m-1} - e_2 p_{m-2} + ... + (-1)^{m-1} m e_m,
/// with e_j = 0 for j > num_e.
inline std::vector<IntPoly> power_sums_chain(int max_m, int num_e) {
  if (max_m < 0 || num_e < 1) {
    throw usage_error("power_sums_chain requires max_m >= 0, num_e >= 1");
  }
  const VarTable table = elementary_table(num_e);
  std::vector<IntPoly> e(static_cast<std::size_t>(num_e) + 1,
                         IntPoly::zero(table));
  for (int j = 1; j <= num_e; ++j) {
    e[static_cast<std::size_t>(j)] = IntPoly::variable(table, "e" + std::to_string(j));
  }
  std::vector<IntPoly> p;
  p.reserve(static_cast<std::size_t>(max_m) + 1);
  p.push_back(IntPoly::constant(table, Int(num_e)));  // p_0 = number of letters
  for (int m = 1; m <= max_m; ++m) {
    IntPoly pm = IntPoly::zero(table);
    for (int i = 1; i < m && i <= num_e; ++i) {
      IntPoly term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(m - i)];
      pm = (i % 2 == 1) ? pm + term : pm - term;
    }
    if (m <= num_e) {
      IntPoly last = Int(m) * e[static_cast<std::size_t>(m)];
      pm = (m % 2 == 1) ? pm + last : pm - last;
    }
    p.push_back(std::move(pm));
  }
  return p;
}

/// The power sum p_m in Z[e_1..e_{num_e}].
inline IntPoly power_sums_from_elementary(int m, int num_e) {
  if (m < 1) throw usage_error("power_sums_from_elementary requires m >= 1");
  return power_sums_chain(m, num_e)[static_cast<std::size_t>(m)];
}

namespace detail {

/// Elementary symmetric functions of the N-th-power alphabet expressed in the
/// elementary basis of the original alphabet, for degrees 0..k_max: the
/// inverse-Newton recurrence m*E'_m = sum (-1)^{i-1} E'_{m-i} p'_i with
/// p'_i = p_{N*i}. Exact rationals internally.
inline std::vector<RatPoly> powered_elementary_chain(int num_letters, int N,
                                                     int k_max) {
  const VarTable table = elementary_table(num_letters);
  const auto psums = power_sums_chain(N * k_max, num_letters);
  std::vector<RatPoly> result;
  result.reserve(static_cast<std::size_t>(k_max) + 1);
  result.push_back(RatPoly::constant(table, Rat(1)));
  for (int m = 1; m <= k_max; ++m) {
    RatPoly acc = RatPoly::zero(table);
    for (int i = 1; i <= m; ++i) {
      RatPoly term = result[static_cast<std::size_t>(m - i)] *
                     to_rational(psums[static_cast<std::size_t>(N * i)]);
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    Rat inv_m(1, static_cast<unsigned long>(m));
    result.push_back(inv_m * acc);
  }
  return result;
}

}  // namespace detail

/// The polynomial expressing E_k of the N-th-power alphabet of 2n letters in
/// the elementary basis: the unique P with P(E_1(X),...,E_{2n}(X)) =
/// E_k(X^{(N)}). Integer coefficients are asserted on exit.
inline IntPoly power_elementary(int n, int N, int k) {
  if (n < 1 || N < 1) throw usage_error("power_elementary requires n, N >= 1");
  const VarTable table = elementary_table(2 * n);
  if (k < 0 || k > 2 * n) return IntPoly::zero(table);
  if (k == 0) return IntPoly::constant(table, Int(1));
  const auto chain = detail::powered_elementary_chain(2 * n, N, k);
  return to_integer(chain[static_cast<std::size_t>(k)]);
}

namespace detail {

/// Substitutes e_{last} -> 1 and re-expresses over e_1..e_{last-1}.
inline IntPoly drop_last_elementary(const IntPoly& p, int num_e) {
  const VarTable target = elementary_table(num_e - 1);
  std::vector<IntPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    ExpVec e(t.exps.begin(), t.exps.end() - 1);
    terms.push_back({std::move(e), t.coeff});
  }
  return IntPoly(target, std::move(terms));
}

}  // namespace detail

/// The unimodular variant: power_elementary with e_{2n} set to 1, living in
/// Z[e_1..e_{2n-1}]. By convention 1 for k = 0 and 0 for k < 0.
inline IntPoly power_elementary_sl(int n, int N, int k) {
  if (n < 1 || N < 1) throw usage_error("power_elementary_sl requires n, N >= 1");
  const VarTable table = elementary_table(2 * n - 1);
  if (k < 0) return IntPoly::zero(table);
  if (k == 0) return IntPoly::constant(table, Int(1));
  if (k > 2 * n - 1) throw usage_error("power_elementary_sl requires k <= 2n-1");
  return detail::drop_last_elementary(power_elementary(n, N, k), 2 * n);
}

namespace detail {

/// f~_i = f_i + f_{i-2} + f_{i-4} + ... (with f_0 = 1), over f_1..f_n.
inline IntPoly folded_fundamental(int i, const VarTable& f_table) {
  IntPoly sum = IntPoly::zero(f_table);
  for (int j = i; j >= 1; j -= 2) {
    sum = sum + IntPoly::variable(f_table, "f" + std::to_string(j));
  }
  if (i % 2 == 0) sum = sum + IntPoly::constant(f_table, Int(1));
  return sum;
}

inline IntPoly power_fundamental_impl(int n, int N, int k) {
  const VarTable f_table = fundamental_table(n);
  // Palindromic argument list (f~_1 .. f~_{n-1}, f~_n, f~_{n-1} .. f~_1)
  // substituted for e_1..e_{2n-1}.
  SubstitutionMap<Int> args;
  for (int i = 1; i <= 2 * n - 1; ++i) {
    const int fold = i <= n ? i : 2 * n - i;
    args.emplace("e" + std::to_string(i),
                 Substitution<Int>{folded_fundamental(fold, f_table), {}});
  }
  const IntPoly upper = power_elementary_sl(n, N, k);
  const IntPoly lower = power_elementary_sl(n, N, k - 2);
  IntPoly result = substitute(upper, args) - substitute(lower, args);
  if (!result.all_exponents_nonnegative()) {
    throw invariant_error("power fundamental polynomial has a negative exponent");
  }
  return result;
}

}  // namespace detail

/// The rank-n power fundamental polynomial in Z[f_1..f_n]: the unique Q with
/// Q(F_1,...,F_n) = F_k on the N-th-power alphabet, for 1 <= k <= n.
inline IntPoly power_fundamental(int n, int N, int k) {
  if (n < 1 || N < 1) throw usage_error("power_fundamental requires n, N >= 1");
  if (k < 1 || k > n) throw usage_error("power_fundamental requires 1 <= k <= n");
  return detail::power_fundamental_impl(n, N, k);
}

/// power_fundamental extended by the boundary conventions the powered
/// branching recursion needs: 1 at j = 0, 0 for j < 0, and 0 at j = rank+1
/// (the rank-(rank+1) character of a rank-rank alphabet vanishes).
inline IntPoly power_fundamental_ext(int rank, int N, int j) {
  const VarTable f_table = fundamental_table(rank);
  if (j < 0 || j == rank + 1) return IntPoly::zero(f_table);
  if (j == 0) return IntPoly::constant(f_table, Int(1));
  if (j > rank + 1) throw usage_error("power_fundamental_ext requires j <= rank+1");
  return detail::power_fundamental_impl(rank, N, j);
}

/// Expresses a symmetric polynomial with nonnegative exponents in the
/// elementary basis by repeated lexicographic leading-term elimination
/// (x_1 > x_2 > ... most significant). Independent of the Newton route.
/// Throws on non-symmetric input, detected by a failed elimination step.
inline IntPoly symmetric_reduce(const IntPoly& target) {
  const VarTable& x_table = target.table();
  const int m = static_cast<int>(x_table.arity());
  if (m < 1) throw usage_error("symmetric_reduce requires at least one variable");
  if (!target.all_exponents_nonnegative()) {
    throw usage_error("symmetric_reduce requires nonnegative exponents");
  }
  const VarTable e_table = elementary_table(m);

  // Elementary symmetric polynomials of x_1..x_m, by the letter recurrence.
  std::vector<IntPoly> e(static_cast<std::size_t>(m) + 1,
                         IntPoly::zero(x_table));
  e[0] = IntPoly::constant(x_table, Int(1));
  for (int i = 1; i <= m; ++i) {
    IntPoly xi = IntPoly::variable(x_table, "x" + std::to_string(i));
    for (int j = i; j >= 1; --j) {
      e[static_cast<std::size_t>(j)] =
          e[static_cast<std::size_t>(j)] + xi * e[static_cast<std::size_t>(j - 1)];
    }
  }

  auto lex_leading = [](const IntPoly& p) {
    const auto& ts = p.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i) {
      if (std::lexicographical_compare(ts[best].exps.begin(), ts[best].exps.end(),
                                       ts[i].exps.begin(), ts[i].exps.end())) {
        best = i;
      }
    }
    return ts[best];
  };

  IntPoly remainder = target;
  std::vector<IntPoly::Term> result_terms;
  while (!remainder.is_zero()) {
    const auto lead = lex_leading(remainder);
    for (int v = 0; v + 1 < m; ++v) {
      if (lead.exps[static_cast<std::size_t>(v)] <
          lead.exps[static_cast<std::size_t>(v) + 1]) {
        throw usage_error("input is not symmetric: leading exponents not sorted");
      }
    }
    ExpVec e_exps(static_cast<std::size_t>(m), 0);
    for (int v = 0; v + 1 < m; ++v) {
      e_exps[static_cast<std::size_t>(v)] =
          lead.exps[static_cast<std::size_t>(v)] -
          lead.exps[static_cast<std::size_t>(v) + 1];
    }
    e_exps[static_cast<std::size_t>(m) - 1] =
        lead.exps[static_cast<std::size_t>(m) - 1];

    IntPoly expansion = IntPoly::constant(x_table, Int(1));
    for (int v = 0; v < m; ++v) {
      const std::int32_t mult = e_exps[static_cast<std::size_t>(v)];
      if (mult > 0) {
        expansion = expansion * pow(e[static_cast<std::size_t>(v) + 1],
                                    static_cast<unsigned long>(mult));
      }
    }
    remainder = remainder - lead.coeff * expansion;
    result_terms.push_back({std::move(e_exps), lead.coeff});
  }
  return IntPoly(e_table, std::move(result_terms));
}

/// E_k of the powered positive alphabet {x_1^N .. x_m^N}, expanded in
/// x_1..x_m. Brute-force companion to power_elementary for oracle checks.
inline IntPoly powered_alphabet_elementary(int m, int N, int k) {
  if (m < 1 || N < 1) {
    throw usage_error("powered_alphabet_elementary requires m, N >= 1");
  }
  const VarTable x_table = positive_table(m);
  if (k < 0 || k > m) return IntPoly::zero(x_table);
  std::vector<IntPoly> e(static_cast<std::size_t>(m) + 1,
                         IntPoly::zero(x_table));
  e[0] = IntPoly::constant(x_table, Int(1));
  for (int i = 1; i <= m; ++i) {
    IntPoly xi = IntPoly::variable(x_table, "x" + std::to_string(i),
                                   static_cast<std::int32_t>(N));
    for (int j = i; j >= 1; --j) {
      e[static_cast<std::size_t>(j)] =
          e[static_cast<std::size_t>(j)] + xi * e[static_cast<std::size_t>(j - 1)];
    }
  }
  return e[static_cast<std::size_t>(k)];
}

/// Exact check that substituting the fundamental characters into the rank-n
/// power fundamental polynomials reproduces the powered characters, for every
/// 1 <= k <= n.
inline bool verify_power_fundamental(int n, int N) {
  if (n < 1 || N < 1) throw usage_error("verify_power_fundamental requires n, N >= 1");
  LambdaRing ring(n);
  SubstitutionMap<Int> chars;
  for (int i = 1; i <= n; ++i) {
    chars.emplace("f" + std::to_string(i),
                  Substitution<Int>{fundamental_character(i, ring), {}});
  }
  for (int k = 1; k <= n; ++k) {
    IntPoly lhs = substitute(power_fundamental(n, N, k), chars);
    if (lhs != fundamental_character_power(k, N, ring)) return false;
  }
  return true;
}

/// Scalar route through the same transition: evaluates the rank-n power
/// fundamental polynomial at given values of f_1..f_n without constructing
/// it, by running the Newton chains on numbers.
inline Rat power_fundamental_value(int n, int N, int k,
                                   const std::vector<Rat>& f_values) {
  if (n < 1 || N < 1) throw usage_error("power_fundamental_value requires n, N >= 1");
  if (k < 1 || k > n) throw usage_error("power_fundamental_value requires 1 <= k <= n");
  if (f_values.size() != static_cast<std::size_t>(n)) {
    throw usage_error("expected one value per fundamental generator");
  }
  // Folded values, then the palindromic elementary values with e_{2n} = 1.
  auto folded = [&](int i) {
    Rat s(i % 2 == 0 ? 1 : 0);
    for (int j = i; j >= 1; j -= 2) s += f_values[static_cast<std::size_t>(j - 1)];
    return s;
  };
  const int letters = 2 * n;
  std::vector<Rat> e_vals(static_cast<std::size_t>(letters) + 1, Rat(0));
  e_vals[0] = 1;
  for (int i = 1; i <= letters - 1; ++i) {
    e_vals[static_cast<std::size_t>(i)] = folded(i <= n ? i : letters - i);
  }
  e_vals[static_cast<std::size_t>(letters)] = 1;

  std::vector<Rat> p_vals(static_cast<std::size_t>(N * k) + 1, Rat(0));
  p_vals[0] = letters;
  for (int m = 1; m <= N * k; ++m) {
    Rat pm(0);
    for (int i = 1; i < m && i <= letters; ++i) {
      Rat term = e_vals[static_cast<std::size_t>(i)] *
                 p_vals[static_cast<std::size_t>(m - i)];
      pm += (i % 2 == 1) ? term : -term;
    }
    if (m <= letters) {
      Rat last = Rat(m) * e_vals[static_cast<std::size_t>(m)];
      pm += (m % 2 == 1) ? last : -last;
    }
    p_vals[static_cast<std::size_t>(m)] = pm;
  }

  std::vector<Rat> powered(static_cast<std::size_t>(k) + 1, Rat(0));
  powered[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rat acc(0);
    for (int i = 1; i <= m; ++i) {
      Rat term = powered[static_cast<std::size_t>(m - i)] *
                 p_vals[static_cast<std::size_t>(N * i)];
      acc += (i % 2 == 1) ? term : -term;
    }
    powered[static_cast<std::size_t>(m)] = acc / Rat(m);
  }
  Rat result = powered[static_cast<std::size_t>(k)];
  if (k >= 2) result -= powered[static_cast<std::size_t>(k - 2)];
  return result;
}

}  // namespace qsym
