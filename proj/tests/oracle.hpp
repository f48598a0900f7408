#pragma once

// Brute-force reference computations shared by the tests. Nothing here calls
// into the library's expansion or counting code.

#include <cstdint>
#include <map>
#include <vector>

#include "qtriple/series.hpp"

namespace oracle {

using Terms = std::map<std::int64_t, std::int64_t>;  // half-unit exponent -> coefficient

inline void prune(Terms& t) {
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
}

// Direct summation of eps^{n(n+1)/2} ... over a wide window of n.
inline Terms theta(int eps, std::int64_t a, std::int64_t b, std::int64_t hi) {
  Terms out;
  const std::int64_t window = 4 * (hi + 1) + 40;
  for (std::int64_t n = -window; n <= window; ++n) {
    const std::int64_t e = a * (n * (n + 1) / 2) + b * (n * (n - 1) / 2);
    if (e > hi) continue;
    const bool odd = ((n * (n + 1) / 2) + (n * (n - 1) / 2)) % 2 != 0;  // = n^2 parity
    out[e] += (eps < 0 && odd) ? -1 : 1;
  }
  prune(out);
  return out;
}

inline Terms multiply(const Terms& x, const Terms& y, std::int64_t hi) {
  Terms out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y)
      if (ex + ey <= hi) out[ex + ey] += cx * cy;
  prune(out);
  return out;
}

inline Terms add(Terms x, const Terms& y, std::int64_t factor = 1) {
  for (const auto& [e, c] : y) x[e] += factor * c;
  prune(x);
  return x;
}

inline Terms shift(const Terms& x, std::int64_t by) {
  Terms out;
  for (const auto& [e, c] : x) out[e + by] = c;
  return out;
}

inline Terms truncate(const Terms& x, std::int64_t hi) {
  Terms out;
  for (const auto& [e, c] : x)
    if (e <= hi) out[e] = c;
  return out;
}

inline Terms of(const qtriple::HalfPowerSeries& s, std::int64_t hi) {
  Terms out;
  for (const auto& [e, c] : s.terms())
    if (e.units <= hi && c != 0) out[e.units] = c;
  return out;
}

// Number of integer triples with c1*f1(x) + c2*f2(y) + c3*f3(z) = N, each
// figurate index scanned over [lo_i, hi_i].
template <class F1, class F2, class F3>
std::int64_t count_triples(std::int64_t N, std::int64_t c1, F1 f1, std::int64_t c2, F2 f2, std::int64_t c3, F3 f3,
                           std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v1, v2, v3;
  for (std::int64_t n = lo; n <= hi; ++n) {
    v1.push_back(c1 * f1(n));
    v2.push_back(c2 * f2(n));
    v3.push_back(c3 * f3(n));
  }
  std::int64_t count = 0;
  for (auto x : v1)
    for (auto y : v2)
      for (auto z : v3)
        if (x + y + z == N) ++count;
  return count;
}

inline std::int64_t sq(std::int64_t n) { return n * n; }
inline std::int64_t tri(std::int64_t n) { return n * (n + 1) / 2; }
inline std::int64_t pent(std::int64_t n) { return n * (3 * n + 1) / 2; }
inline std::int64_t oct(std::int64_t n) { return n * (3 * n + 2); }

}  // namespace oracle
