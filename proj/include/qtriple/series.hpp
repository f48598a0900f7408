#pragma once

// Truncated formal power series in q with exponents on the half-integer grid.
//
// Every exponent is stored as an integer count of q^{1/2} units, so q^3 is
// HalfExp{6} and q^{7/2} is HalfExp{7}. A series carries a lower bound `lo`
// (everything below it is zero) and an inclusive validity bound `hi`
// (everything above it is unknown). Coefficients are exact int64 values and
// every arithmetic step is overflow-checked.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtriple {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CoefficientOverflow : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

// A coefficient was requested above the validity bound, or an identity check
// asked for more precision than the inputs carry.
class TruncationError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HalfExp {
  std::int64_t units = 0;

  static constexpr HalfExp whole(std::int64_t q_power) { return HalfExp{2 * q_power}; }

  constexpr bool is_whole() const { return units % 2 == 0; }

  friend constexpr auto operator<=>(HalfExp, HalfExp) = default;
  friend constexpr HalfExp operator+(HalfExp x, HalfExp y) { return HalfExp{x.units + y.units}; }
  friend constexpr HalfExp operator-(HalfExp x, HalfExp y) { return HalfExp{x.units - y.units}; }
  friend constexpr HalfExp operator*(std::int64_t m, HalfExp x) { return HalfExp{m * x.units}; }
};

// "6" for q^3, "7/2" for q^{7/2}.
inline std::string to_string(HalfExp e) {
  if (e.is_whole()) return std::to_string(e.units / 2);
  return std::to_string(e.units) + "/2";
}

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw CoefficientOverflow("coefficient overflow in addition");
  return out;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw CoefficientOverflow("coefficient overflow in multiplication");
  return out;
}

// Floor division for possibly negative numerators.
inline std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t n, std::int64_t d) { return -floor_div(-n, d); }

inline std::int64_t mod_floor(std::int64_t n, std::int64_t d) { return n - d * floor_div(n, d); }

}  // namespace detail

class HalfPowerSeries {
 public:
  // The zero series known through `hi`.
  explicit HalfPowerSeries(HalfExp hi) : lo_(std::min(HalfExp{0}, hi)), hi_(hi), coeffs_(width(lo_, hi_), 0) {}

  HalfPowerSeries(HalfExp lo, HalfExp hi) : lo_(lo), hi_(hi) {
    if (lo > hi) throw DomainError("series lower bound exceeds validity bound");
    coeffs_.assign(width(lo_, hi_), 0);
  }

  HalfPowerSeries(HalfExp lo, HalfExp hi, std::vector<std::int64_t> coeffs)
      : lo_(lo), hi_(hi), coeffs_(std::move(coeffs)) {
    if (lo > hi) throw DomainError("series lower bound exceeds validity bound");
    if (coeffs_.size() != width(lo_, hi_)) throw DomainError("coefficient array does not match [lo, hi]");
  }

  HalfExp lo() const { return lo_; }
  HalfExp hi() const { return hi_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  // Exact coefficient at e; zero below lo, an error above hi.
  std::int64_t coeff(HalfExp e) const {
    if (e > hi_) throw TruncationError("coefficient at q^" + to_string(e) + " is beyond validity bound q^" + to_string(hi_));
    if (e < lo_) return 0;
    return coeffs_[static_cast<std::size_t>(e.units - lo_.units)];
  }

  // Least exponent with a nonzero coefficient, or hi for a zero series.
  HalfExp valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return HalfExp{lo_.units + static_cast<std::int64_t>(i)};
    return hi_;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
  }

  // Accumulate c at e; e must lie in [lo, hi].
  void add_term(HalfExp e, std::int64_t c) {
    auto& slot = coeffs_.at(static_cast<std::size_t>(e.units - lo_.units));
    slot = detail::checked_add(slot, c);
  }

  // Nonzero (exponent, coefficient) pairs in ascending order.
  std::vector<std::pair<HalfExp, std::int64_t>> terms() const {
    std::vector<std::pair<HalfExp, std::int64_t>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out.emplace_back(HalfExp{lo_.units + static_cast<std::int64_t>(i)}, coeffs_[i]);
    return out;
  }

 private:
  static std::size_t width(HalfExp lo, HalfExp hi) { return static_cast<std::size_t>(hi.units - lo.units + 1); }

  HalfExp lo_;
  HalfExp hi_;
  std::vector<std::int64_t> coeffs_;
};

inline HalfPowerSeries monomial(std::int64_t c, HalfExp e, HalfExp hi) {
  if (e > hi) throw DomainError("monomial exponent q^" + to_string(e) + " exceeds validity bound");
  HalfPowerSeries s(std::min(e, HalfExp{0}), hi);
  s.add_term(e, c);
  return s;
}

inline HalfPowerSeries operator+(const HalfPowerSeries& x, const HalfPowerSeries& y) {
  HalfPowerSeries out(std::min(x.lo(), y.lo()), std::min(x.hi(), y.hi()));
  for (const auto* s : {&x, &y}) {
    const auto c = s->coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      HalfExp e{s->lo().units + static_cast<std::int64_t>(i)};
      if (e > out.hi()) break;
      if (c[i] != 0) out.add_term(e, c[i]);
    }
  }
  return out;
}

inline HalfPowerSeries scale(const HalfPowerSeries& s, std::int64_t factor) {
  std::vector<std::int64_t> c(s.coeffs().begin(), s.coeffs().end());
  for (auto& x : c) x = detail::checked_mul(x, factor);
  return HalfPowerSeries(s.lo(), s.hi(), std::move(c));
}

inline HalfPowerSeries operator-(const HalfPowerSeries& x, const HalfPowerSeries& y) { return x + scale(y, -1); }

// Multiplication by q^{e/2}; exact, so the validity bound moves with it.
inline HalfPowerSeries shift(const HalfPowerSeries& s, HalfExp e) {
  return HalfPowerSeries(s.lo() + e, s.hi() + e, std::vector<std::int64_t>(s.coeffs().begin(), s.coeffs().end()));
}

// Truncated convolution. The result is valid through
// min(hi_x + val_y, hi_y + val_x).
inline HalfPowerSeries operator*(const HalfPowerSeries& x, const HalfPowerSeries& y) {
  const HalfExp vx = x.valuation();
  const HalfExp vy = y.valuation();
  const HalfExp hi = std::min(x.hi() + vy, y.hi() + vx);
  const HalfExp lo = std::min(vx + vy, hi);
  HalfPowerSeries out(lo, hi);
  if (x.is_zero() || y.is_zero()) return out;

  std::vector<std::int64_t> acc(static_cast<std::size_t>(hi.units - lo.units + 1), 0);
  const auto cx = x.coeffs();
  const auto cy = y.coeffs();
  const std::int64_t ix0 = vx.units - x.lo().units;
  const std::int64_t iy0 = vy.units - y.lo().units;
  for (std::int64_t i = ix0; i < static_cast<std::int64_t>(cx.size()); ++i) {
    const std::int64_t a = cx[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    const std::int64_t ex = x.lo().units + i;
    // exponent of the product term: ex + ey <= hi
    const std::int64_t jmax = std::min<std::int64_t>(static_cast<std::int64_t>(cy.size()) - 1, hi.units - ex - y.lo().units);
    for (std::int64_t j = iy0; j <= jmax; ++j) {
      const std::int64_t b = cy[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      auto& slot = acc[static_cast<std::size_t>(ex + y.lo().units + j - lo.units)];
      slot = detail::checked_add(slot, detail::checked_mul(a, b));
    }
  }
  return HalfPowerSeries(lo, hi, std::move(acc));
}

// q -> q^m. Exponents between consecutive multiples of m are known zeros,
// so validity extends to m*hi + (m-1).
inline HalfPowerSeries substitute_power(const HalfPowerSeries& s, std::int64_t m) {
  if (m < 1) throw DomainError("substitute_power requires m >= 1");
  const HalfExp lo{m * s.lo().units};
  const HalfExp hi{m * s.hi().units + (m - 1)};
  HalfPowerSeries out(lo, hi);
  const auto c = s.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out.add_term(HalfExp{m * (s.lo().units + static_cast<std::int64_t>(i))}, c[i]);
  return out;
}

// Keeps the terms with exponent = residue (mod modulus), both in half-units.
// With divide=true the exponent e becomes (e - residue)/modulus in whole
// powers of q, i.e. 2*(e - residue)/modulus half-units ("replace q^modulus by q").
inline HalfPowerSeries dissect(const HalfPowerSeries& s, std::int64_t modulus, HalfExp residue, bool divide) {
  if (modulus < 1) throw DomainError("dissection modulus must be positive");
  if (residue.units < 0 || residue.units >= modulus) throw DomainError("dissection residue must lie in [0, modulus)");
  const auto keep = [&](std::int64_t e) { return detail::mod_floor(e - residue.units, modulus) == 0; };
  const auto c = s.coeffs();

  if (!divide) {
    HalfPowerSeries out(s.lo(), s.hi());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::int64_t e = s.lo().units + static_cast<std::int64_t>(i);
      if (c[i] != 0 && keep(e)) out.add_term(HalfExp{e}, c[i]);
    }
    return out;
  }

  // Odd half-unit slots of the image are never produced, so they are known zeros.
  const std::int64_t top = detail::floor_div(s.hi().units - residue.units, modulus);
  const HalfExp hi{2 * top + 1};
  const HalfExp lo{std::min(2 * detail::ceil_div(s.lo().units - residue.units, modulus), hi.units)};
  HalfPowerSeries out(lo, hi);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int64_t e = s.lo().units + static_cast<std::int64_t>(i);
    if (c[i] != 0 && keep(e)) out.add_term(HalfExp{2 * ((e - residue.units) / modulus)}, c[i]);
  }
  return out;
}

struct Mismatch {
  HalfExp exponent;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct EqualityReport {
  bool equal = true;
  std::optional<Mismatch> mismatch;
};

// Compares every coefficient up to and including `through`.
inline EqualityReport compare(const HalfPowerSeries& x, const HalfPowerSeries& y, HalfExp through) {
  if (through > x.hi() || through > y.hi())
    throw TruncationError("comparison through q^" + to_string(through) + " exceeds a validity bound");
  for (std::int64_t e = std::min(x.lo(), y.lo()).units; e <= through.units; ++e) {
    const auto a = x.coeff(HalfExp{e});
    const auto b = y.coeff(HalfExp{e});
    if (a != b) return {false, Mismatch{HalfExp{e}, a, b}};
  }
  return {};
}

}  // namespace qtriple
