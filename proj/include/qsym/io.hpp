#pragma once

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/laurent.hpp"

namespace qsym {

/// Canonical text form. Terms appear in the stored graded-lex descending
/// order; exponents are always written (q^1, q^-1); unit coefficients are
/// dropped in front of variables; the zero polynomial renders as "0".
inline std::string render_text(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const Int magnitude = abs(t.coeff);
    std::string factors;
    for (std::size_t v = 0; v < p.table().arity(); ++v) {
      if (t.exps[v] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += p.table().name(v) + "^" + std::to_string(t.exps[v]);
    }
    if (factors.empty()) {
      out << magnitude.get_str();
    } else if (magnitude == 1) {
      out << factors;
    } else {
      out << magnitude.get_str() << '*' << factors;
    }
  }
  return out.str();
}

/// JSON document form: {"vars":[...],"terms":[{"c":"<int>","e":[...]},...]}.
/// Coefficients are decimal strings so arbitrary precision survives every
/// JSON consumer; term order matches the canonical text order.
inline std::string render_json(const IntPoly& p) {
  nlohmann::ordered_json doc;
  doc["vars"] = p.table().names();
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json term;
    term["c"] = t.coeff.get_str();
    term["e"] = t.exps;
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump();
}

enum class PolyFormat { text, json };

inline std::string render_poly(const IntPoly& p, PolyFormat format) {
  return format == PolyFormat::text ? render_text(p) : render_json(p);
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view input, const VarTable& table)
      : input_(input), table_(table) {}

  IntPoly parse() {
    std::vector<IntPoly::Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = (take() == '-');
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      take();
      terms.push_back(parse_term(c == '-'));
      skip_ws();
    }
    return IntPoly(table_, std::move(terms));
  }

 private:
  IntPoly::Term parse_term(bool negative) {
    skip_ws();
    ExpVec exps(table_.arity(), 0);
    Int coeff(1);
    bool have_factor = false;

    if (at_end()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      have_factor = true;
      skip_ws();
      while (peek() == '*') {
        take();
        parse_var_factor(exps);
        skip_ws();
      }
    } else if (is_name_start(peek())) {
      parse_var_factor(exps);
      have_factor = true;
      skip_ws();
      while (peek() == '*') {
        take();
        parse_var_factor(exps);
        skip_ws();
      }
    }
    if (!have_factor) fail("expected a coefficient or a variable");
    if (negative) coeff = -coeff;
    return IntPoly::Term{std::move(exps), std::move(coeff)};
  }

  void parse_var_factor(ExpVec& exps) {
    skip_ws();
    if (at_end() || !is_name_start(peek())) fail("expected a variable name");
    const int name_line = line_, name_col = col_;
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      name += take();
    }
    auto idx = table_.index_of(name);
    if (!idx) {
      throw parse_error("unknown variable '" + name + "'", name_line, name_col);
    }
    std::int32_t exp = 1;
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      exp = parse_exponent();
    }
    exps[*idx] = static_cast<std::int32_t>(exps[*idx] + exp);
  }

  Int parse_integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += take();
    }
    return Int(digits);
  }

  std::int32_t parse_exponent() {
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = (take() == '-');
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected an integer exponent");
    }
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (take() - '0');
      if (value > 1000000) fail("exponent too large");
    }
    return static_cast<std::int32_t>(negative ? -value : value);
  }

  static bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  bool at_end() const { return pos_ >= input_.size(); }
  char peek() const { return at_end() ? '\0' : input_[pos_]; }

  char take() {
    const char c = input_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                         peek() == '\r')) {
      take();
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what, line_, col_);
  }

  std::string_view input_;
  const VarTable& table_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace detail

/// Parses the canonical text grammar over the given table. Round-trip law:
/// parse_poly(render_text(p), p.table()) == p for every canonical p.
inline IntPoly parse_poly(std::string_view input, const VarTable& table) {
  return detail::PolyParser(input, table).parse();
}

}  // namespace qsym
