#pragma once

// JSON catalogs of identity instances and count relations, and a uniform
// way to run an entry.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qtriple/identity.hpp"
#include "qtriple/identity_data.hpp"
#include "qtriple/product.hpp"
#include "qtriple/relation_data.hpp"
#include "qtriple/repcount.hpp"

namespace qtriple {

using json = nlohmann::json;

class CatalogError : public DomainError {
 public:
  using DomainError::DomainError;
};

// ---------------------------------------------------------------------------
// Relations

inline json to_json(const CountRef& c) {
  return json{{"form", form_name(c.spec)},
              {"coeffs", {c.spec.slots[0].coeff, c.spec.slots[1].coeff, c.spec.slots[2].coeff}},
              {"alpha", c.alpha},
              {"beta", c.beta},
              {"scalar", c.scalar}};
}

inline CountRef count_ref_from_json(const json& j) {
  const auto coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
  if (coeffs.size() != 3) throw CatalogError("coeffs must have three entries");
  CountRef c;
  c.spec = make_spec(j.at("form").get<std::string>(), {coeffs[0], coeffs[1], coeffs[2]});
  c.alpha = j.value("alpha", std::int64_t{1});
  c.beta = j.value("beta", std::int64_t{0});
  c.scalar = j.value("scalar", std::int64_t{1});
  if (c.alpha < 1) throw CatalogError("alpha must be positive");
  return c;
}

inline json to_json(const RelationStatement& r) {
  json rhs = json::array();
  for (const auto& t : r.rhs) rhs.push_back(to_json(t));
  return json{{"id", r.id},
              {"residue", r.residue ? json{r.residue->modulus, r.residue->residue} : json(nullptr)},
              {"lhs", to_json(r.lhs)},
              {"rhs", rhs},
              {"citation", r.citation},
              {"status", to_string(r.status)}};
}

inline RelationStatement relation_from_json(const json& j) {
  try {
    RelationStatement r;
    r.id = j.at("id").get<std::string>();
    if (j.contains("residue") && !j.at("residue").is_null()) {
      const auto v = j.at("residue").get<std::vector<std::int64_t>>();
      if (v.size() != 2 || v[0] < 1 || v[1] < 0 || v[1] >= v[0]) throw CatalogError("residue must be [modulus, residue]");
      r.residue = ResidueClass{v[0], v[1]};
    }
    r.lhs = count_ref_from_json(j.at("lhs"));
    for (const auto& t : j.at("rhs")) r.rhs.push_back(count_ref_from_json(t));
    r.citation = j.value("citation", std::string{});
    const auto status = j.value("status", std::string{"empirical"});
    if (status != "pinned" && status != "empirical") throw CatalogError("status must be pinned or empirical");
    r.status = status == "pinned" ? RelationStatus::pinned : RelationStatus::empirical;
    return r;
  } catch (const json::exception& e) {
    throw CatalogError(std::string("malformed relation entry: ") + e.what());
  }
}

inline std::vector<RelationStatement> parse_relation_catalog(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CatalogError(std::string("relation catalog is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw CatalogError("relation catalog must be a JSON array");
  std::vector<RelationStatement> out;
  for (const auto& e : j) out.push_back(relation_from_json(e));
  return out;
}

inline const std::vector<RelationStatement>& builtin_relations() {
  static const auto rels = parse_relation_catalog(builtin_relation_json);
  return rels;
}

// Entries whose id equals `key` or starts with `key.`.
template <class Entry>
std::vector<const Entry*> select_by_id(const std::vector<Entry>& all, std::string_view key) {
  std::vector<const Entry*> out;
  for (const auto& e : all) {
    const std::string_view id = e.id;
    if (id == key || (id.size() > key.size() && id.substr(0, key.size()) == key && id[key.size()] == '.')) out.push_back(&e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identities

struct CorollaryRef {
  int number = 1;
  std::int64_t k = 2, r = 1;
};

struct Clp2Ref {
  int number = 1;
  std::int64_t m = 1;
};

struct ExplicitIdentity {
  std::string lhs;
  std::string rhs;
};

struct IdentityEntry {
  std::string id;
  std::string citation;
  std::variant<Thm1Params, Thm2Params, CorollaryRef, Clp2Ref, ExplicitIdentity> target;
  // The left side as it is usually written, and the constant relating it to
  // the specialised product (some specialisations contain f(q^a, 1) = 2 psi).
  std::optional<std::string> prose_lhs;
  std::int64_t lhs_scale = 1;
};

inline Sign sign_from_json(const json& j) {
  const auto v = j.get<int>();
  if (v != 1 && v != -1) throw CatalogError("signs must be 1 or -1");
  return sign_of(v);
}

inline IdentityEntry identity_from_json(const json& j) {
  try {
    IdentityEntry e;
    e.id = j.at("id").get<std::string>();
    e.citation = j.value("citation", std::string{});
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "thm1") {
      const auto& p = j.at("params");
      const auto eps = p.at("eps");
      if (!eps.is_array() || eps.size() != 3) throw CatalogError("thm1 eps must have three entries");
      e.target = Thm1Params{p.at("k").get<std::int64_t>(), p.at("r").get<std::int64_t>(), p.at("g").get<std::int64_t>(),
                            p.at("h").get<std::int64_t>(), p.at("u").get<std::int64_t>(), p.at("v").get<std::int64_t>(),
                            p.at("i").get<std::int64_t>(), p.at("j").get<std::int64_t>(), sign_from_json(eps[0]),
                            sign_from_json(eps[1]), sign_from_json(eps[2])};
    } else if (kind == "thm2") {
      const auto& p = j.at("params");
      e.target = Thm2Params{p.at("k").get<std::int64_t>(), p.at("r").get<std::int64_t>(), p.at("s").get<std::int64_t>(),
                            p.at("t").get<std::int64_t>(), p.at("i").get<std::int64_t>(), p.at("j").get<std::int64_t>(),
                            sign_from_json(p.at("eps"))};
    } else if (kind == "corollary") {
      e.target = CorollaryRef{j.at("corollary").get<int>(), j.at("k").get<std::int64_t>(), j.at("r").get<std::int64_t>()};
    } else if (kind == "clp2") {
      e.target = Clp2Ref{j.at("n").get<int>(), j.at("m").get<std::int64_t>()};
    } else if (kind == "explicit") {
      e.target = ExplicitIdentity{j.at("lhs").get<std::string>(), j.at("rhs").get<std::string>()};
    } else {
      throw CatalogError("unknown identity kind '" + kind + "'");
    }
    if (j.contains("prose_lhs")) e.prose_lhs = j.at("prose_lhs").get<std::string>();
    e.lhs_scale = j.value("lhs_scale", std::int64_t{1});
    return e;
  } catch (const json::exception& ex) {
    throw CatalogError(std::string("malformed identity entry: ") + ex.what());
  }
}

inline std::string kind_name(const IdentityEntry& e) {
  static constexpr const char* names[] = {"thm1", "thm2", "corollary", "clp2", "explicit"};
  return names[e.target.index()];
}

inline json to_json(const IdentityEntry& e) {
  json j{{"id", e.id}, {"kind", kind_name(e)}};
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Thm1Params>) {
          j["params"] = {{"k", t.k}, {"r", t.r}, {"g", t.g}, {"h", t.h}, {"u", t.u}, {"v", t.v}, {"i", t.i}, {"j", t.j},
                         {"eps", {value(t.eps1), value(t.eps2), value(t.eps3)}}};
        } else if constexpr (std::is_same_v<T, Thm2Params>) {
          j["params"] = {{"k", t.k}, {"r", t.r}, {"s", t.s}, {"t", t.t}, {"i", t.i}, {"j", t.j}, {"eps", value(t.eps)}};
        } else if constexpr (std::is_same_v<T, CorollaryRef>) {
          j["corollary"] = t.number;
          j["k"] = t.k;
          j["r"] = t.r;
        } else if constexpr (std::is_same_v<T, Clp2Ref>) {
          j["n"] = t.number;
          j["m"] = t.m;
        } else {
          j["lhs"] = t.lhs;
          j["rhs"] = t.rhs;
        }
      },
      e.target);
  if (e.prose_lhs) {
    j["prose_lhs"] = *e.prose_lhs;
    j["lhs_scale"] = e.lhs_scale;
  }
  j["citation"] = e.citation;
  return j;
}

inline std::vector<IdentityEntry> parse_identity_catalog(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CatalogError(std::string("identity catalog is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw CatalogError("identity catalog must be a JSON array");
  std::vector<IdentityEntry> out;
  for (const auto& e : j) out.push_back(identity_from_json(e));
  return out;
}

inline const std::vector<IdentityEntry>& builtin_identities() {
  static const auto ids = parse_identity_catalog(builtin_identity_json);
  return ids;
}

struct IdentityOutcome {
  bool passed = false;
  std::size_t rhs_term_count = 0;
  std::optional<Mismatch> mismatch;
  std::string note;  // which check failed, empty on success
};

namespace detail {

inline IdentityOutcome outcome(const IdentityReport& r, const std::string& what) {
  return {r.equal, r.rhs_term_count, r.mismatch, r.equal ? "" : what};
}

}  // namespace detail

inline IdentityOutcome run_identity(const IdentityEntry& e, HalfExp through) {
  return std::visit(
      [&](const auto& t) -> IdentityOutcome {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Thm1Params>) {
          auto out = detail::outcome(thm1_verify(t, through), "lhs != rhs");
          if (out.passed && out.rhs_term_count != static_cast<std::size_t>(2 * t.k)) {
            out.passed = false;
            out.note = "rhs term count is not 2k";
          }
          if (out.passed && e.prose_lhs) {
            const auto built = expand_sum({thm1_lhs(t)}, through);
            const auto prose = scale(expand_sum(parse_theta_sum(*e.prose_lhs), through), e.lhs_scale);
            const auto rep = compare_expansions(built, prose, through, 1);
            if (!rep.equal) return {false, out.rhs_term_count, rep.mismatch, "specialised lhs != lhs_scale * prose_lhs"};
          }
          return out;
        } else if constexpr (std::is_same_v<T, Thm2Params>) {
          auto out = detail::outcome(thm2_verify(t, through), "lhs != rhs");
          if (out.passed && out.rhs_term_count != static_cast<std::size_t>(t.k)) {
            out.passed = false;
            out.note = "rhs term count is not k";
          }
          return out;
        } else if constexpr (std::is_same_v<T, CorollaryRef>) {
          if (t.number < 1 || t.number > 4) throw DomainError("corollary number must be 1..4");
          const auto c = static_cast<Corollary>(t.number);
          const auto id = corollary_instantiate(c, t.k, t.r);
          auto out = detail::outcome(verify_identity(id.lhs, id.rhs, through), "printed form: lhs != rhs");
          if (!out.passed) return out;
          const auto spec = corollary_thm1_params(c, t.k, t.r);
          const auto base = thm1_verify(spec, through);
          if (!base.equal) return detail::outcome(base, "underlying specialisation: lhs != rhs");
          return out;
        } else if constexpr (std::is_same_v<T, Clp2Ref>) {
          const auto rep = clp2_verify(t.number, t.m, through);
          const auto rhs_terms = rep.printed.rhs_term_count;
          if (!rep.theorem.equal) return {false, rhs_terms, rep.theorem.mismatch, "theorem instance"};
          if (!rep.entry30iv.equal) return {false, rhs_terms, rep.entry30iv.mismatch, "product of f(a,b) and f(-a,-b)"};
          if (!rep.outer_factors_ok) return {false, rhs_terms, std::nullopt, "outer factors are not phi(-q^S1) and 0"};
          if (!rep.reduced.equal) return {false, rhs_terms, rep.reduced.mismatch, "reduced identity"};
          if (!rep.odd_powers_vanish) return {false, rhs_terms, std::nullopt, "odd powers before q^2 -> q"};
          if (!rep.printed.equal) return {false, rhs_terms, rep.printed.mismatch, "printed form"};
          return {true, rhs_terms, std::nullopt, ""};
        } else {
          const auto lhs = parse_theta_sum(t.lhs);
          const auto rhs = parse_theta_sum(t.rhs);
          return detail::outcome(verify_identity(lhs, rhs, through), "lhs != rhs");
        }
      },
      e.target);
}

}  // namespace qtriple
