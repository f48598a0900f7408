#pragma once

// Products of theta functions with an integer coefficient and a monomial,
// their truncated expansion, and a small text notation for writing them.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qtriple/series.hpp"
#include "qtriple/theta.hpp"

namespace qtriple {

// coeff * q^{monomial_exp/2} * prod f(factor).
struct ThetaProduct {
  std::int64_t coeff = 1;
  HalfExp monomial_exp;
  std::vector<ThetaArg> factors;

  friend bool operator==(const ThetaProduct&, const ThetaProduct&) = default;
};

using ThetaSum = std::vector<ThetaProduct>;

namespace detail {

inline constexpr std::int64_t expansion_slack = 4;

}  // namespace detail

// Expansion valid at least through `through`. Each factor is expanded just
// far enough that the other factors' valuations cannot pull unknown
// coefficients below the target.
inline HalfPowerSeries expand_product(const ThetaProduct& p, HalfExp through) {
  const HalfPowerSeries zero(through);
  if (p.coeff == 0) return zero;

  std::vector<HalfExp> vals;
  HalfExp total = p.monomial_exp;
  for (const auto& f : p.factors) {
    const auto v = theta_valuation(f);
    if (!v) return zero;
    vals.push_back(*v);
    total = total + *v;
  }
  if (total > through) return zero;
  if (p.factors.empty()) return monomial(p.coeff, p.monomial_exp, through);

  std::optional<HalfPowerSeries> acc;
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    const HalfExp others = total - p.monomial_exp - vals[i];
    const HalfExp hi = through - p.monomial_exp - others + HalfExp{detail::expansion_slack};
    auto s = theta_expand(p.factors[i], hi);
    acc = acc ? *acc * s : std::move(s);
  }
  auto out = scale(shift(*acc, p.monomial_exp), p.coeff);
  if (out.hi() < through)
    throw TruncationError("product expansion reached only q^" + to_string(out.hi()) + ", needed q^" + to_string(through));
  return out;
}

inline HalfPowerSeries expand_sum(const ThetaSum& terms, HalfExp through) {
  HalfPowerSeries acc(through);
  for (const auto& t : terms) acc = acc + expand_product(t, through);
  return acc;
}

// ---------------------------------------------------------------------------
// Text notation
//
//   sum     := ['-'] term { ('+' | '-') term }
//   term    := factor { '*' factor }
//   factor  := INT | 'q' ['^' exp] | name '(' args ')' ['^' INT]
//   name    := phi | psi | X | Y | f
//   args    := ['-'] 'q' ['^' INT]                  (named functions, f(-q^s))
//            | arg ',' arg                          (f with two arguments)
//   arg     := ['-'] ('q' ['^' exp] | '1')
//   exp     := ['-'] INT ['/2']
//
// Example: "psi(q^2)*phi(q^2)^2 + 4*q*psi(q^2)*psi(q^4)^2".

class NotationError : public DomainError {
 public:
  using DomainError::DomainError;
};

namespace detail {

class NotationParser {
 public:
  explicit NotationParser(std::string_view text) : s_(text) {}

  ThetaSum parse_sum() {
    ThetaSum out;
    skip();
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      auto t = parse_term();
      if (negate) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip();
      if (at_end()) break;
      const char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negate = c == '-';
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw NotationError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t parse_int() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = checked_add(checked_mul(v, 10), s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return neg ? -v : v;
  }

  // Exponent of q in whole units, optionally "/2"; returns half-units.
  HalfExp parse_exp() {
    const std::int64_t v = parse_int();
    if (s_.substr(pos_, 2) == "/2") {
      pos_ += 2;
      return HalfExp{v};
    }
    return HalfExp::whole(v);
  }

  // ['-'] ('q' ['^' exp] | '1')
  std::pair<Sign, HalfExp> parse_arg() {
    Sign sign = Sign::plus;
    if (peek() == '-') {
      ++pos_;
      sign = Sign::minus;
    }
    const char c = peek();
    if (c == '1') {
      ++pos_;
      return {sign, HalfExp{0}};
    }
    if (c != 'q') fail("expected 'q' or '1'");
    ++pos_;
    if (peek() == '^') {
      ++pos_;
      return {sign, parse_exp()};
    }
    return {sign, HalfExp{2}};
  }

  std::string parse_name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  ThetaArg parse_function(const std::string& name) {
    expect('(');
    const auto first = parse_arg();
    ThetaArg arg;
    if (peek() == ',') {
      if (name != "f") fail("only f takes two arguments");
      ++pos_;
      const auto second = parse_arg();
      if (first.first != second.first) fail("both arguments of f must carry the same sign");
      arg = ThetaArg{first.first, first.second, second.second};
    } else {
      const auto [sign, e] = first;
      if (!e.is_whole() || e.units <= 0) fail("argument of " + name + " must be q^s with s a positive integer");
      const auto special = parse_special(name);
      if (!special) fail("unknown function " + name);
      if (*special == SpecialTheta::fneg && sign != Sign::minus) fail("single-argument f needs a negative argument, f(-q^s)");
      if (*special == SpecialTheta::X && sign == Sign::minus) fail("X(-q^s) has mixed signs; write it with f(.,.)");
      arg = theta_special(*special, e.units / 2);
      if (*special != SpecialTheta::fneg && sign == Sign::minus) arg.eps = Sign::minus;
    }
    expect(')');
    return arg;
  }

  ThetaProduct parse_term() {
    ThetaProduct t;
    for (;;) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff = checked_mul(t.coeff, parse_int());
      } else if (c == 'q') {
        ++pos_;
        HalfExp e{2};
        if (peek() == '^') {
          ++pos_;
          e = parse_exp();
        }
        t.monomial_exp = t.monomial_exp + e;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::string name = parse_name();
        const ThetaArg arg = parse_function(name);
        std::int64_t power = 1;
        if (peek() == '^') {
          ++pos_;
          power = parse_int();
          if (power < 1) fail("power must be positive");
        }
        for (std::int64_t n = 0; n < power; ++n) t.factors.push_back(arg);
      } else {
        fail("expected a factor");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::string format_power(Sign eps, HalfExp e) {
  std::string out = eps == Sign::minus ? "-" : "";
  if (e.units == 0) return out + "1";
  if (e.units == 2) return out + "q";
  return out + "q^" + to_string(e);
}

}  // namespace detail

inline ThetaSum parse_theta_sum(std::string_view text) { return detail::NotationParser(text).parse_sum(); }

inline ThetaProduct parse_theta_product(std::string_view text) {
  auto s = parse_theta_sum(text);
  if (s.size() != 1) throw NotationError("expected a single product in \"" + std::string(text) + "\"");
  return s.front();
}

// Generic form; every factor is written as f(., .).
inline std::string to_string(const ThetaProduct& p) {
  std::string out = std::to_string(p.coeff);
  if (p.monomial_exp.units != 0) out += "*" + detail::format_power(Sign::plus, p.monomial_exp);
  for (const auto& f : p.factors)
    out += "*f(" + detail::format_power(f.eps, f.a) + "," + detail::format_power(f.eps, f.b) + ")";
  return out;
}

inline std::string to_string(const ThetaSum& s) {
  std::string out;
  for (const auto& t : s) {
    std::string term = to_string(t);
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace qtriple
