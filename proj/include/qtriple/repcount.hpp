#pragma once

// Representation numbers of N as a1*F1 + a2*F2 + a3*F3 where each F is a
// square, triangular, generalized pentagonal or generalized octagonal number.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtriple/series.hpp"
#include "qtriple/theta.hpp"

namespace qtriple {

enum class FigurateKind { square, triangular, gen_pentagonal, gen_octagonal };

inline const char* to_string(FigurateKind k) {
  switch (k) {
    case FigurateKind::square: return "Square";
    case FigurateKind::triangular: return "Triangular";
    case FigurateKind::gen_pentagonal: return "GenPentagonal";
    case FigurateKind::gen_octagonal: return "GenOctagonal";
  }
  return "?";
}

// Triangular indices run over n >= 0; the others over all integers.
constexpr bool indexed_by_all_integers(FigurateKind k) { return k != FigurateKind::triangular; }

constexpr std::int64_t figurate_value(FigurateKind k, std::int64_t n) {
  switch (k) {
    case FigurateKind::square: return n * n;
    case FigurateKind::triangular: return n * (n + 1) / 2;
    case FigurateKind::gen_pentagonal: return n * (3 * n + 1) / 2;
    case FigurateKind::gen_octagonal: return n * (3 * n + 2);
  }
  return 0;
}

// phi, psi, X and Y are the generating series of the four kinds.
constexpr SpecialTheta generating_theta(FigurateKind k) {
  switch (k) {
    case FigurateKind::square: return SpecialTheta::phi;
    case FigurateKind::triangular: return SpecialTheta::psi;
    case FigurateKind::gen_pentagonal: return SpecialTheta::X;
    case FigurateKind::gen_octagonal: return SpecialTheta::Y;
  }
  return SpecialTheta::phi;
}

struct FigurateValue {
  std::int64_t index = 0;
  std::int64_t value = 0;

  friend bool operator==(const FigurateValue&, const FigurateValue&) = default;
};

// All domain indices with value <= limit, ascending by value, ties by index.
inline std::vector<FigurateValue> figurate_values(FigurateKind k, std::int64_t limit) {
  std::vector<FigurateValue> out;
  if (limit < 0) return out;
  out.push_back({0, 0});
  for (std::int64_t n = 1;; ++n) {
    bool any = false;
    for (const std::int64_t idx : {n, -n}) {
      if (idx < 0 && !indexed_by_all_integers(k)) continue;
      const std::int64_t v = figurate_value(k, idx);
      if (v <= limit) {
        out.push_back({idx, v});
        any = true;
      }
    }
    if (!any) break;
  }
  std::sort(out.begin(), out.end(), [](const FigurateValue& x, const FigurateValue& y) {
    return x.value != y.value ? x.value < y.value : x.index < y.index;
  });
  return out;
}

struct SumSlot {
  std::int64_t coeff = 1;
  FigurateKind kind = FigurateKind::square;

  friend auto operator<=>(const SumSlot&, const SumSlot&) = default;
};

struct MixedSumSpec {
  std::array<SumSlot, 3> slots;

  friend auto operator<=>(const MixedSumSpec&, const MixedSumSpec&) = default;
};

using KindTriple = std::array<FigurateKind, 3>;

struct RegistryEntry {
  std::string_view name;
  KindTriple kinds;
};

inline constexpr std::array<RegistryEntry, 20> form_registry = [] {
  using enum FigurateKind;
  constexpr auto S = square, T = triangular, P = gen_pentagonal, O = gen_octagonal;
  return std::array<RegistryEntry, 20>{{
      {"r", {S, S, S}},   {"T", {T, T, T}},   {"P", {P, P, P}},   {"G", {O, O, O}},   {"Rt", {S, S, T}},
      {"Rp", {S, S, P}},  {"Rg", {S, S, O}},  {"Tp", {T, T, P}},  {"Tg", {T, T, O}},  {"rT", {S, T, T}},
      {"rP", {S, P, P}},  {"rG", {S, O, O}},  {"pG", {P, O, O}},  {"tP", {T, P, P}},  {"tG", {T, O, O}},
      {"Pg", {P, P, O}},  {"rtp", {S, T, P}}, {"rtg", {S, T, O}}, {"rpg", {S, P, O}}, {"tpg", {T, P, O}},
  }};
}();

inline KindTriple registry_lookup(std::string_view name) {
  for (const auto& e : form_registry)
    if (e.name == name) return e.kinds;
  throw DomainError("unknown form name '" + std::string(name) + "'");
}

inline std::string form_name(const MixedSumSpec& s) {
  for (const auto& e : form_registry)
    if (e.kinds[0] == s.slots[0].kind && e.kinds[1] == s.slots[1].kind && e.kinds[2] == s.slots[2].kind)
      return std::string(e.name);
  return "?";
}

inline MixedSumSpec make_spec(std::string_view name, std::array<std::int64_t, 3> coeffs) {
  const auto kinds = registry_lookup(name);
  MixedSumSpec s;
  for (std::size_t i = 0; i < 3; ++i) {
    if (coeffs[i] < 1) throw DomainError("form coefficients must be positive");
    s.slots[i] = {coeffs[i], kinds[i]};
  }
  return s;
}

// "rT(1,1,1)" -> spec.
inline MixedSumSpec parse_form(std::string_view text) {
  const auto strip = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  text = strip(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') throw DomainError("form must look like NAME(a1,a2,a3)");
  const auto name = strip(text.substr(0, open));
  const auto body = text.substr(open + 1, text.size() - open - 2);
  std::array<std::int64_t, 3> c{};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto end = i < 2 ? body.find(',', pos) : body.size();
    if (end == std::string_view::npos) throw DomainError("form needs three coefficients");
    const std::string field(strip(body.substr(pos, end - pos)));
    std::size_t used = 0;
    try {
      c[i] = std::stoll(field, &used);
    } catch (const std::exception&) {
      throw DomainError("bad coefficient '" + field + "'");
    }
    if (used != field.size()) throw DomainError("bad coefficient '" + field + "'");
    pos = end + 1;
  }
  return make_spec(name, c);
}

inline std::string to_string(const MixedSumSpec& s) {
  return form_name(s) + "(" + std::to_string(s.slots[0].coeff) + "," + std::to_string(s.slots[1].coeff) + "," +
         std::to_string(s.slots[2].coeff) + ")";
}

namespace detail {

// Weighted values a*F(n) <= limit, one entry per index (so repeats encode multiplicity).
inline std::vector<std::int64_t> slot_values(const SumSlot& slot, std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 0) return out;
  for (const auto& fv : figurate_values(slot.kind, limit / slot.coeff)) out.push_back(slot.coeff * fv.value);
  return out;
}

}  // namespace detail

// Ordered index tuples with a1 F1 + a2 F2 + a3 F3 = N. The densest slot is
// resolved by a multiplicity table, the other two by nested loops.
inline std::int64_t count_enumerate(const MixedSumSpec& spec, std::int64_t N) {
  if (N < 0) return 0;
  std::array<std::vector<std::int64_t>, 3> vals;
  for (std::size_t i = 0; i < 3; ++i) vals[i] = detail::slot_values(spec.slots[i], N);
  std::size_t dense = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (vals[i].size() > vals[dense].size()) dense = i;
  std::vector<std::int64_t> mult(static_cast<std::size_t>(N + 1), 0);
  for (const auto v : vals[dense]) ++mult[static_cast<std::size_t>(v)];
  const auto& x = vals[(dense + 1) % 3];
  const auto& y = vals[(dense + 2) % 3];

  std::int64_t total = 0;
  for (const auto a : x) {
    for (const auto b : y) {
      if (a + b > N) break;
      total += mult[static_cast<std::size_t>(N - a - b)];
    }
  }
  return total;
}

// Counts for every N in [0, limit] at once.
inline std::vector<std::int64_t> count_table(const MixedSumSpec& spec, std::int64_t limit) {
  if (limit < 0) return {};
  std::vector<std::int64_t> out(static_cast<std::size_t>(limit + 1), 0);
  const auto v0 = detail::slot_values(spec.slots[0], limit);
  const auto v1 = detail::slot_values(spec.slots[1], limit);
  const auto v2 = detail::slot_values(spec.slots[2], limit);
  for (const auto a : v0) {
    for (const auto b : v1) {
      if (a + b > limit) break;
      for (const auto c : v2) {
        const auto s = a + b + c;
        if (s > limit) break;
        ++out[static_cast<std::size_t>(s)];
      }
    }
  }
  return out;
}

// Product of the three generating series, each at q^{a_i}; the coefficient
// of q^N (half-unit 2N) is the count.
inline HalfPowerSeries count_series(const MixedSumSpec& spec, std::int64_t order) {
  if (order < 0) throw DomainError("order must be >= 0");
  const HalfExp hi = HalfExp::whole(order);
  std::optional<HalfPowerSeries> acc;
  for (const auto& slot : spec.slots) {
    auto s = theta_expand(theta_special(generating_theta(slot.kind), slot.coeff), hi);
    acc = acc ? *acc * s : std::move(s);
  }
  return *acc;
}

inline std::int64_t series_count(const HalfPowerSeries& s, std::int64_t N) {
  return N < 0 ? 0 : s.coeff(HalfExp::whole(N));
}

// Lazily grown count tables keyed by spec. Not thread-safe; use one per thread.
class CountTables {
 public:
  std::int64_t count(const MixedSumSpec& spec, std::int64_t N) {
    if (N < 0) return 0;
    return table(spec, N)[static_cast<std::size_t>(N)];
  }

  const std::vector<std::int64_t>& table(const MixedSumSpec& spec, std::int64_t limit) {
    auto& t = tables_[spec];
    if (static_cast<std::int64_t>(t.size()) <= limit) {
      const std::int64_t grown = std::max<std::int64_t>(limit, 2 * static_cast<std::int64_t>(t.size()));
      t = count_table(spec, std::max<std::int64_t>(grown, 1024));
    }
    return t;
  }

 private:
  std::map<MixedSumSpec, std::vector<std::int64_t>> tables_;
};

// scalar * count(spec; alpha*N + beta); zero when the argument is negative.
struct CountRef {
  MixedSumSpec spec;
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  std::int64_t scalar = 1;
};

inline std::string to_string(const CountRef& c) {
  std::string arg = c.alpha == 1 ? "N" : std::to_string(c.alpha) + "N";
  if (c.beta > 0) arg += "+" + std::to_string(c.beta);
  if (c.beta < 0) arg += std::to_string(c.beta);
  const std::string body = to_string(c.spec);
  std::string out = c.scalar == 1 ? "" : (c.scalar == -1 ? "-" : std::to_string(c.scalar));
  return out + body.substr(0, body.size() - 1) + ";" + arg + ")";
}

inline std::int64_t evaluate(const CountRef& c, std::int64_t N, CountTables& tables) {
  return c.scalar * tables.count(c.spec, c.alpha * N + c.beta);
}

struct ResidueClass {
  std::int64_t modulus = 1;
  std::int64_t residue = 0;

  bool contains(std::int64_t N) const { return detail::mod_floor(N, modulus) == residue; }
};

enum class RelationStatus { pinned, empirical };

inline const char* to_string(RelationStatus s) { return s == RelationStatus::pinned ? "pinned" : "empirical"; }

// lhs(N) = sum of rhs(N) for every N >= 0 in the residue class.
struct RelationStatement {
  std::string id;
  std::optional<ResidueClass> residue;
  CountRef lhs;
  std::vector<CountRef> rhs;
  std::string citation;
  RelationStatus status = RelationStatus::empirical;
};

inline std::string to_string(const RelationStatement& r) {
  std::string out = to_string(r.lhs) + " = ";
  if (r.rhs.empty()) return out + "0";
  for (std::size_t i = 0; i < r.rhs.size(); ++i) {
    std::string t = to_string(r.rhs[i]);
    if (i == 0) {
      out += t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

struct Counterexample {
  std::int64_t N = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

inline std::vector<Counterexample> verify_relation(const RelationStatement& rel, std::int64_t n_max, CountTables& tables) {
  std::vector<Counterexample> bad;
  for (std::int64_t N = 0; N <= n_max; ++N) {
    if (rel.residue && !rel.residue->contains(N)) continue;
    const std::int64_t l = evaluate(rel.lhs, N, tables);
    std::int64_t r = 0;
    for (const auto& t : rel.rhs) r += evaluate(t, N, tables);
    if (l != r) bad.push_back({N, l, r});
  }
  return bad;
}

// Residues mod `modulus` of the left-hand argument alpha*N+beta as N runs
// over the relation's class, with multiplicity over one full period.
inline std::vector<int> lhs_residue_hits(const RelationStatement& rel, std::int64_t modulus) {
  std::vector<int> hits(static_cast<std::size_t>(modulus), 0);
  const std::int64_t period = modulus * (rel.residue ? rel.residue->modulus : 1);
  for (std::int64_t N = 0; N < period; ++N) {
    if (rel.residue && !rel.residue->contains(N)) continue;
    ++hits[static_cast<std::size_t>(detail::mod_floor(rel.lhs.alpha * N + rel.lhs.beta, modulus))];
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Non-representability

inline std::vector<std::int64_t> nonrep_scan(const MixedSumSpec& spec, std::int64_t modulus, std::int64_t residue,
                                             std::int64_t n_max, CountTables& tables) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  if (residue < 0 || residue >= modulus) throw DomainError("residue must lie in [0, modulus)");
  std::vector<std::int64_t> out;
  if (n_max < 0) return out;
  const auto& t = tables.table(spec, n_max);
  for (std::int64_t N = residue; N <= n_max; N += modulus)
    if (t[static_cast<std::size_t>(N)] > 0) out.push_back(N);
  return out;
}

struct NonrepClaim {
  std::string id;
  MixedSumSpec spec;
  std::int64_t modulus;
  std::int64_t residue;
  std::string description;
};

inline std::vector<NonrepClaim> builtin_nonrep_claims() {
  return {
      {"Rt(1,1,4):4k+3", make_spec("Rt", {1, 1, 4}), 4, 3, "l^2+m^2+4t_n misses 4k+3"},
      {"pG(4,1,1):4k+3", make_spec("pG", {4, 1, 1}), 4, 3, "4p_l+g_m+g_n misses 4k+3"},
      {"tG(12,1,1):4k+3", make_spec("tG", {12, 1, 1}), 4, 3, "12t_l+g_m+g_n misses 4k+3"},
      {"tG(4,1,1):4k+3", make_spec("tG", {4, 1, 1}), 4, 3, "4t_l+g_m+g_n misses 4k+3"},
      {"Rt(3,3,4):4k+1", make_spec("Rt", {3, 3, 4}), 4, 1, "3l^2+3m^2+4t_n misses 4k+1"},
      {"Rp(3,3,4):4k+1", make_spec("Rp", {3, 3, 4}), 4, 1, "3l^2+3m^2+4p_n misses 4k+1"},
      {"rtg(3,12,1):4k+2", make_spec("rtg", {3, 12, 1}), 4, 2, "3l^2+12t_m+g_n misses 4k+2"},
      {"rpg(3,4,1):4k+2", make_spec("rpg", {3, 4, 1}), 4, 2, "3l^2+4p_m+g_n misses 4k+2"},
      {"rpg(9,4,3):4k+2", make_spec("rpg", {9, 4, 3}), 4, 2, "9l^2+4p_m+3g_n misses 4k+2"},
      {"rtg(3,4,1):4k+2", make_spec("rtg", {3, 4, 1}), 4, 2, "3l^2+4t_m+g_n misses 4k+2"},
  };
}

// ---------------------------------------------------------------------------
// Classical facts, checked by enumeration

struct ClassicalPart {
  std::string label;
  std::vector<std::int64_t> discrepancies;
};

struct ClassicalReport {
  std::string id;
  std::string claim;
  std::vector<ClassicalPart> parts;

  bool passed() const {
    return std::all_of(parts.begin(), parts.end(), [](const ClassicalPart& p) { return p.discrepancies.empty(); });
  }
};

inline const std::vector<std::string>& classical_ids() {
  static const std::vector<std::string> ids{"gauss3tri",      "liouville",           "sun_sq_sq_t", "sun_sq_t_t",
                                            "gauss_legendre", "ramanujan_dickson_10", "dickson_126"};
  return ids;
}

// N = 4^k (m l + res) with k, l >= 0.
inline bool is_power4_class(std::int64_t N, std::int64_t m, std::int64_t res) {
  if (N <= 0) return false;
  while (N % 4 == 0) N /= 4;
  return N % m == res;
}

namespace detail {

inline ClassicalPart uncovered(const std::string& label, const MixedSumSpec& spec, std::int64_t n_max, CountTables& tables) {
  ClassicalPart p{label, {}};
  if (n_max < 0) return p;
  const auto& t = tables.table(spec, n_max);
  for (std::int64_t N = 0; N <= n_max; ++N)
    if (t[static_cast<std::size_t>(N)] == 0) p.discrepancies.push_back(N);
  return p;
}

// Symmetric difference of {N in domain : count = 0} and {N in domain : excluded(N)}.
template <class Domain, class Excluded>
ClassicalPart zero_set_matches(const std::string& label, const MixedSumSpec& spec, std::int64_t n_max, CountTables& tables,
                               Domain in_domain, Excluded excluded) {
  ClassicalPart p{label, {}};
  if (n_max < 0) return p;
  const auto& t = tables.table(spec, n_max);
  for (std::int64_t N = 0; N <= n_max; ++N) {
    if (!in_domain(N)) continue;
    if ((t[static_cast<std::size_t>(N)] == 0) != excluded(N)) p.discrepancies.push_back(N);
  }
  return p;
}

inline std::vector<ClassicalPart> cover_all(std::string_view form, const std::vector<std::array<std::int64_t, 3>>& vectors,
                                            std::int64_t n_max, CountTables& tables) {
  std::vector<ClassicalPart> out;
  for (const auto& v : vectors) {
    const auto spec = make_spec(form, v);
    out.push_back(uncovered(to_string(spec), spec, n_max, tables));
  }
  return out;
}

}  // namespace detail

inline ClassicalReport classical_check(std::string_view id, std::int64_t n_max, CountTables& tables) {
  ClassicalReport rep;
  rep.id = std::string(id);
  if (id == "gauss3tri") {
    rep.claim = "every N >= 0 is t_x + t_y + t_z";
    rep.parts.push_back(detail::uncovered("T(1,1,1)", make_spec("T", {1, 1, 1}), n_max, tables));
  } else if (id == "liouville") {
    rep.claim = "a t_x + b t_y + c t_z covers every N >= 0 for the seven listed (a,b,c)";
    rep.parts = detail::cover_all("T", {{1, 1, 1}, {1, 1, 2}, {1, 1, 4}, {1, 1, 5}, {1, 2, 2}, {1, 2, 3}, {1, 2, 4}}, n_max, tables);
  } else if (id == "sun_sq_sq_t") {
    rep.claim = "a x^2 + b y^2 + c t_z covers every N >= 0 for the ten listed (a,b,c)";
    rep.parts = detail::cover_all(
        "Rt", {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {1, 2, 4}, {1, 3, 1}, {1, 4, 1}, {1, 4, 2}, {1, 8, 1}, {2, 2, 1}},
        n_max, tables);
  } else if (id == "sun_sq_t_t") {
    rep.claim = "a x^2 + b t_y + c t_z covers every N >= 0 for the fifteen listed (a,b,c)";
    rep.parts = detail::cover_all("rT",
                                  {{1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {1, 3, 1}, {1, 4, 1}, {1, 4, 2}, {1, 5, 2}, {1, 6, 1},
                                   {1, 8, 1}, {2, 1, 1}, {2, 2, 1}, {2, 4, 1}, {3, 2, 1}, {4, 1, 1}, {4, 2, 1}},
                                  n_max, tables);
  } else if (id == "gauss_legendre") {
    rep.claim = "x^2+y^2+z^2 misses exactly 4^k(8l+7)";
    rep.parts.push_back(detail::zero_set_matches(
        "r(1,1,1)", make_spec("r", {1, 1, 1}), n_max, tables, [](std::int64_t) { return true; },
        [](std::int64_t N) { return is_power4_class(N, 8, 7); }));
  } else if (id == "ramanujan_dickson_10") {
    rep.claim = "among positive even N, x^2+y^2+10z^2 misses exactly 4^k(16l+6)";
    rep.parts.push_back(detail::zero_set_matches(
        "r(1,1,10)", make_spec("r", {1, 1, 10}), n_max, tables, [](std::int64_t N) { return N > 0 && N % 2 == 0; },
        [](std::int64_t N) { return is_power4_class(N, 16, 6); }));
  } else if (id == "dickson_126") {
    rep.claim = "among positive N, x^2+2y^2+6z^2 misses exactly 4^k(8l+5)";
    rep.parts.push_back(detail::zero_set_matches(
        "r(1,2,6)", make_spec("r", {1, 2, 6}), n_max, tables, [](std::int64_t N) { return N > 0; },
        [](std::int64_t N) { return is_power4_class(N, 8, 5); }));
  } else {
    throw DomainError("unknown classical check '" + std::string(id) + "'");
  }
  return rep;
}

}  // namespace qtriple
