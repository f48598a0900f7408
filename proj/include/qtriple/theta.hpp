#pragma once

// Ramanujan's theta function f(a, b) = sum_n a^{n(n+1)/2} b^{n(n-1)/2},
// specialised to a = eps*q^{a/2}, b = eps*q^{b/2} with one shared sign.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtriple/series.hpp"

namespace qtriple {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr Sign sign_of(int x) { return x < 0 ? Sign::minus : Sign::plus; }
// delta = (1 - eps)/2
constexpr int parity(Sign s) { return s == Sign::minus ? 1 : 0; }
constexpr Sign sign_from_parity(std::int64_t delta) { return (delta % 2 != 0) ? Sign::minus : Sign::plus; }

// f(eps*q^{a/2}, eps*q^{b/2}); a and b are half-unit exponents.
struct ThetaArg {
  Sign eps = Sign::plus;
  HalfExp a;
  HalfExp b;

  HalfExp sum() const { return a + b; }
  HalfExp difference() const { return a - b; }

  friend bool operator==(const ThetaArg&, const ThetaArg&) = default;
};

inline std::string to_string(const ThetaArg& t) {
  const char* s = t.eps == Sign::minus ? "-" : "";
  return std::string("f(") + s + "q^" + to_string(t.a) + ", " + s + "q^" + to_string(t.b) + ")";
}

// Flips the shared sign when delta is odd.
constexpr ThetaArg f_delta(std::int64_t delta, ThetaArg arg) {
  if (delta % 2 != 0) arg.eps = flip(arg.eps);
  return arg;
}

namespace detail {

// Half-unit exponent of the n-th summand.
constexpr std::int64_t theta_exponent(const ThetaArg& t, std::int64_t n) {
  return t.a.units * (n * (n + 1) / 2) + t.b.units * (n * (n - 1) / 2);
}

// The summand exponent is a convex quadratic in n; for n >= vertex_ceil it is
// nondecreasing, and for n < vertex_ceil it is nonincreasing in n.
inline std::int64_t vertex_ceil(const ThetaArg& t) {
  const std::int64_t s = t.sum().units;
  const std::int64_t d = t.difference().units;
  return ceil_div(-d, 2 * s);
}

}  // namespace detail

// True when the specialisation is identically zero: f(-1, x) = 0, and more
// generally when the summands pair off n <-> c - n with opposite signs.
inline bool theta_vanishes(const ThetaArg& t) {
  if (t.eps != Sign::minus) return false;
  if (t.a.units == 0 || t.b.units == 0) return true;
  const std::int64_t s = t.sum().units;
  if (s <= 0) return false;
  const std::int64_t gap = t.b.units - t.a.units;
  return gap % s == 0 && (gap / s) % 2 != 0;
}

inline void require_expandable(const ThetaArg& t) {
  if (t.sum().units <= 0 && !theta_vanishes(t))
    throw DomainError("theta argument " + to_string(t) + " is divergent: a + b must be positive");
}

// Least exponent with a nonzero coefficient; nullopt when the series vanishes.
inline std::optional<HalfExp> theta_valuation(const ThetaArg& t) {
  if (theta_vanishes(t)) return std::nullopt;
  require_expandable(t);
  const std::int64_t c = detail::vertex_ceil(t);
  return HalfExp{std::min(detail::theta_exponent(t, c), detail::theta_exponent(t, c - 1))};
}

// Bilateral sum restricted to exponents <= hi. A zero exponent with eps = -1
// gives the zero series; with eps = +1 it gives the full two-sided sum.
inline HalfPowerSeries theta_expand(const ThetaArg& t, HalfExp hi) {
  if (theta_vanishes(t)) return HalfPowerSeries(hi);
  require_expandable(t);

  const std::int64_t c = detail::vertex_ceil(t);
  const std::int64_t lowest = std::min(detail::theta_exponent(t, c), detail::theta_exponent(t, c - 1));
  HalfPowerSeries out(HalfExp{std::min({std::int64_t{0}, lowest, hi.units})}, hi);

  const auto emit = [&](std::int64_t n) {
    const std::int64_t e = detail::theta_exponent(t, n);
    if (e > hi.units) return false;
    const bool negative = t.eps == Sign::minus && (n % 2 != 0);
    out.add_term(HalfExp{e}, negative ? -1 : 1);
    return true;
  };
  for (std::int64_t n = c; emit(n); ++n) {
  }
  for (std::int64_t n = c - 1; emit(n); --n) {
  }
  return out;
}

// Result of rewriting f(eps q^{-r/2}, eps q^{s/2}), 0 <= r < s, as
// sign_factor * q^{prefactor/2} * f(eps q^{l/2}, eps q^{k/2}).
struct NormalizedTheta {
  int sign_factor = 1;
  HalfExp prefactor_exp;
  ThetaArg arg;
};

inline NormalizedTheta theta_normalize(const ThetaArg& t) {
  if (t.a.units < 0 && t.b.units < 0) throw DomainError("both theta exponents negative: " + to_string(t));
  if (t.sum().units <= 0) throw DomainError("theta argument " + to_string(t) + " is divergent: a + b must be positive");

  if (t.a.units >= 0 && t.b.units >= 0) {
    ThetaArg sorted = t;
    if (sorted.a > sorted.b) std::swap(sorted.a, sorted.b);
    return {1, HalfExp{0}, sorted};
  }

  const std::int64_t r = -std::min(t.a.units, t.b.units);
  const std::int64_t s = std::max(t.a.units, t.b.units);
  const std::int64_t gap = s - r;
  const std::int64_t m = s / gap;
  const std::int64_t l = m * gap - r;
  const std::int64_t k = s - m * gap;
  const std::int64_t h = m * r - (m * (m - 1) / 2) * gap;

  const int sign = (t.eps == Sign::minus && m % 2 != 0) ? -1 : 1;
  return {sign, HalfExp{-h}, ThetaArg{t.eps, HalfExp{std::min(l, k)}, HalfExp{std::max(l, k)}}};
}

enum class SpecialTheta { phi, psi, fneg, X, Y };

inline std::optional<SpecialTheta> parse_special(std::string_view name) {
  if (name == "phi") return SpecialTheta::phi;
  if (name == "psi") return SpecialTheta::psi;
  if (name == "f" || name == "fneg") return SpecialTheta::fneg;
  if (name == "X") return SpecialTheta::X;
  if (name == "Y") return SpecialTheta::Y;
  return std::nullopt;
}

// phi(q^s), psi(q^s), f(-q^s), X(q^s), Y(q^s).
inline ThetaArg theta_special(SpecialTheta which, std::int64_t scale) {
  if (scale < 1) throw DomainError("special theta scale must be >= 1");
  const std::int64_t s = scale;
  switch (which) {
    case SpecialTheta::phi: return {Sign::plus, HalfExp{2 * s}, HalfExp{2 * s}};
    case SpecialTheta::psi: return {Sign::plus, HalfExp{2 * s}, HalfExp{6 * s}};
    case SpecialTheta::fneg: return {Sign::minus, HalfExp{2 * s}, HalfExp{4 * s}};
    case SpecialTheta::X: return {Sign::plus, HalfExp{2 * s}, HalfExp{4 * s}};
    case SpecialTheta::Y: return {Sign::plus, HalfExp{2 * s}, HalfExp{10 * s}};
  }
  throw DomainError("unknown special theta");
}

// Product form (-a; ab)(-b; ab)(ab; ab), truncated at hi. Requires
// nonnegative exponents; normalise first otherwise. Partial products can
// exceed 64 bits at high order, so accumulation is 128-bit.
inline HalfPowerSeries jacobi_triple_product(const ThetaArg& t, HalfExp hi) {
  if (t.a.units < 0 || t.b.units < 0) throw DomainError("triple product needs nonnegative exponents: " + to_string(t));
  if (t.sum().units <= 0) throw DomainError("theta argument " + to_string(t) + " is divergent: a + b must be positive");
  if (hi.units < 0) return HalfPowerSeries(hi);

  __extension__ using wide = __int128;
  constexpr wide bound = wide{1} << 120;
  std::vector<wide> c(static_cast<std::size_t>(hi.units + 1), 0);
  c[0] = 1;
  const auto times_binomial = [&](std::int64_t e, std::int64_t coeff) {
    if (e > hi.units) return;
    if (e == 0) {
      for (auto& x : c) x *= 1 + coeff;
      return;
    }
    for (std::int64_t i = hi.units; i >= e; --i) {
      auto& slot = c[static_cast<std::size_t>(i)];
      slot += coeff * c[static_cast<std::size_t>(i - e)];
      if (slot > bound || slot < -bound) throw CoefficientOverflow("triple product partial coefficient out of range");
    }
  };

  const std::int64_t step = t.sum().units;
  const std::int64_t eps = value(t.eps);
  for (std::int64_t n = 0; n * step <= hi.units; ++n) {
    times_binomial(t.a.units + n * step, eps);
    times_binomial(t.b.units + n * step, eps);
    times_binomial((n + 1) * step, -1);
  }
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > std::numeric_limits<std::int64_t>::max() || c[i] < std::numeric_limits<std::int64_t>::min())
      throw CoefficientOverflow("triple product coefficient exceeds 64 bits");
    out[i] = static_cast<std::int64_t>(c[i]);
  }
  return HalfPowerSeries(HalfExp{0}, hi, std::move(out));
}

// One summand U_r * f(U_{n+r}/U_r, V_{n-r}/U_r) of Ramanujan's n-dissection.
struct DissectionTerm {
  int sign = 1;
  HalfExp prefactor_exp;
  ThetaArg arg;
};

inline std::vector<DissectionTerm> entry31_dissect(const ThetaArg& t, std::int64_t n) {
  if (n < 1) throw DomainError("dissection order must be >= 1");
  const auto u = [&](std::int64_t r) { return t.a.units * (r * (r + 1) / 2) + t.b.units * (r * (r - 1) / 2); };
  const auto v = [&](std::int64_t m) { return t.a.units * (m * (m - 1) / 2) + t.b.units * (m * (m + 1) / 2); };
  // U_m and V_m carry eps^{m^2}; the inner ratios therefore carry eps^n.
  const Sign inner = (n % 2 != 0) ? t.eps : Sign::plus;

  std::vector<DissectionTerm> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) {
    const int sign = (t.eps == Sign::minus && r % 2 != 0) ? -1 : 1;
    out.push_back({sign, HalfExp{u(r)}, ThetaArg{inner, HalfExp{u(n + r) - u(r)}, HalfExp{v(n - r) - u(r)}}});
  }
  return out;
}

}  // namespace qtriple
