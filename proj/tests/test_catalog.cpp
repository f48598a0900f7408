#include <gtest/gtest.h>

#include "qtriple/catalog.hpp"

using namespace qtriple;

TEST(RelationCatalog, BuiltinParses) {
  const auto& rels = builtin_relations();
  EXPECT_EQ(rels.size(), 123u);
  std::size_t pinned = 0;
  for (const auto& r : rels) pinned += r.status == RelationStatus::pinned ? 1 : 0;
  EXPECT_EQ(pinned, 105u);
}

TEST(RelationCatalog, RoundTrip) {
  for (const auto& r : builtin_relations()) {
    const auto back = relation_from_json(to_json(r));
    EXPECT_EQ(back.id, r.id);
    EXPECT_EQ(to_string(back), to_string(r));
    EXPECT_EQ(back.status, r.status);
    EXPECT_EQ(back.residue.has_value(), r.residue.has_value());
  }
}

TEST(RelationCatalog, UserEntries) {
  const auto rels = parse_relation_catalog(R"([
    {"id": "mine.1", "residue": [2, 1],
     "lhs": {"form": "r", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 1},
     "rhs": [{"form": "r", "coeffs": [1, 2, 1], "alpha": 1, "beta": 0, "scalar": 1}],
     "status": "pinned"}
  ])");
  ASSERT_EQ(rels.size(), 1u);
  CountTables tables;
  EXPECT_TRUE(verify_relation(rels[0], 200, tables).empty());
}

TEST(RelationCatalog, MalformedInputRejected) {
  EXPECT_THROW(parse_relation_catalog("not json"), CatalogError);
  EXPECT_THROW(parse_relation_catalog("{}"), CatalogError);
  EXPECT_THROW(parse_relation_catalog(R"([{"id": "x"}])"), CatalogError);
  EXPECT_THROW(parse_relation_catalog(R"([{"id": "x", "residue": [2, 3],
      "lhs": {"form": "r", "coeffs": [1, 1, 1]}, "rhs": []}])"),
               CatalogError);
  EXPECT_THROW(parse_relation_catalog(R"([{"id": "x", "status": "maybe",
      "lhs": {"form": "r", "coeffs": [1, 1, 1]}, "rhs": []}])"),
               CatalogError);
  EXPECT_THROW(parse_relation_catalog(R"([{"id": "x",
      "lhs": {"form": "Zq", "coeffs": [1, 1, 1]}, "rhs": []}])"),
               DomainError);
}

TEST(RelationCatalog, SelectByIdPrefix) {
  const auto& rels = builtin_relations();
  EXPECT_EQ(select_by_id(rels, "rT-1-1-1.even").size(), 1u);
  EXPECT_EQ(select_by_id(rels, "rT-1-1-1").size(), 6u);
  EXPECT_TRUE(select_by_id(rels, "rT-1-1").empty());
}

TEST(IdentityCatalog, BuiltinParsesAndPasses) {
  const auto& ids = builtin_identities();
  EXPECT_EQ(ids.size(), 292u);
  for (const auto& e : ids) {
    const auto o = run_identity(e, HalfExp::whole(60));
    EXPECT_TRUE(o.passed) << e.id << " " << o.note;
  }
}

TEST(IdentityCatalog, RoundTrip) {
  for (const auto& e : builtin_identities()) {
    const auto back = identity_from_json(to_json(e));
    EXPECT_EQ(to_json(back), to_json(e)) << e.id;
  }
}

TEST(IdentityCatalog, WrongScaleFails) {
  auto e = select_by_id(builtin_identities(), "thm1.special.psi-psi-phi").front();
  ASSERT_NE(e, nullptr);
  IdentityEntry copy = *e;
  copy.lhs_scale = 3;
  EXPECT_FALSE(run_identity(copy, HalfExp::whole(30)).passed);
}

TEST(IdentityCatalog, ExplicitEntries) {
  const auto ids = parse_identity_catalog(R"json([
    {"id": "e.1", "kind": "explicit", "lhs": "psi(q)^2", "rhs": "phi(q^2)*psi(q^4) + 0*q"},
    {"id": "e.2", "kind": "explicit", "lhs": "phi(q)", "rhs": "phi(q^4) + 2*q*psi(q^8)"}
  ])json");
  ASSERT_EQ(ids.size(), 2u);
  EXPECT_FALSE(run_identity(ids[0], HalfExp::whole(40)).passed);
  EXPECT_TRUE(run_identity(ids[1], HalfExp::whole(40)).passed);
  EXPECT_THROW(parse_identity_catalog(R"([{"id": "e", "kind": "magic"}])"), CatalogError);
}
