#include <gtest/gtest.h>

#include <functional>

#include "oracle.hpp"
#include "qtriple/catalog.hpp"
#include "qtriple/repcount.hpp"

using namespace qtriple;

namespace {

std::function<std::int64_t(std::int64_t)> oracle_fn(FigurateKind k) {
  switch (k) {
    case FigurateKind::square: return oracle::sq;
    case FigurateKind::triangular: return oracle::tri;
    case FigurateKind::gen_pentagonal: return oracle::pent;
    case FigurateKind::gen_octagonal: return oracle::oct;
  }
  return oracle::sq;
}

// Counts for every N <= limit by looping over all index triples; triangular
// indices stay nonnegative since n and -1-n share a value.
std::vector<std::int64_t> brute(const MixedSumSpec& s, std::int64_t limit) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(limit + 1), 0);
  std::int64_t bound = 0;
  while (bound * bound <= 2 * limit + 2) ++bound;
  const auto lo = [&](FigurateKind k) { return indexed_by_all_integers(k) ? -bound : 0; };
  const auto f0 = oracle_fn(s.slots[0].kind), f1 = oracle_fn(s.slots[1].kind), f2 = oracle_fn(s.slots[2].kind);
  for (std::int64_t x = lo(s.slots[0].kind); x <= bound; ++x)
    for (std::int64_t y = lo(s.slots[1].kind); y <= bound; ++y)
      for (std::int64_t z = lo(s.slots[2].kind); z <= bound; ++z) {
        const std::int64_t v = s.slots[0].coeff * f0(x) + s.slots[1].coeff * f1(y) + s.slots[2].coeff * f2(z);
        if (v <= limit) ++out[static_cast<std::size_t>(v)];
      }
  return out;
}

}  // namespace

TEST(Figurate, Values) {
  EXPECT_EQ(figurate_value(FigurateKind::triangular, 4), 10);
  EXPECT_EQ(figurate_value(FigurateKind::gen_pentagonal, -2), 5);
  EXPECT_EQ(figurate_value(FigurateKind::gen_octagonal, -1), 1);
  EXPECT_EQ(figurate_value(FigurateKind::gen_octagonal, 1), 5);
}

TEST(Figurate, ValueListsIncludeZeroAndSort) {
  const auto sq = figurate_values(FigurateKind::square, 9);
  const std::vector<FigurateValue> want{{0, 0}, {-1, 1}, {1, 1}, {-2, 4}, {2, 4}, {-3, 9}, {3, 9}};
  EXPECT_EQ(sq, want);
  const auto tr = figurate_values(FigurateKind::triangular, 6);
  EXPECT_EQ(tr, (std::vector<FigurateValue>{{0, 0}, {1, 1}, {2, 3}, {3, 6}}));
  EXPECT_TRUE(figurate_values(FigurateKind::square, -1).empty());
}

TEST(Figurate, ListsMatchGeneratingSeries) {
  for (auto k : {FigurateKind::square, FigurateKind::triangular, FigurateKind::gen_pentagonal, FigurateKind::gen_octagonal}) {
    const auto s = theta_expand(theta_special(generating_theta(k), 1), HalfExp::whole(200));
    std::vector<std::int64_t> hist(201, 0);
    for (const auto& v : figurate_values(k, 200)) ++hist[static_cast<std::size_t>(v.value)];
    for (std::int64_t n = 0; n <= 200; ++n) EXPECT_EQ(s.coeff(HalfExp::whole(n)), hist[static_cast<std::size_t>(n)]) << to_string(k) << " " << n;
  }
}

TEST(Forms, RegistryAndParsing) {
  EXPECT_EQ(form_registry.size(), 20u);
  const auto s = parse_form("rT(1,1,1)");
  EXPECT_EQ(s.slots[0].kind, FigurateKind::square);
  EXPECT_EQ(s.slots[2].kind, FigurateKind::triangular);
  EXPECT_EQ(to_string(s), "rT(1,1,1)");
  EXPECT_EQ(form_name(make_spec("tpg", {1, 2, 3})), "tpg");
  EXPECT_THROW(parse_form("Zz(1,1,1)"), DomainError);
  EXPECT_THROW(parse_form("rT(1,0,1)"), DomainError);
  EXPECT_THROW(parse_form("rT(1,1)"), DomainError);
}

TEST(Counts, WorkedExample) {
  CountTables tables;
  EXPECT_EQ(count_enumerate(parse_form("rT(1,1,1)"), 5), 8);
  EXPECT_EQ(count_enumerate(parse_form("Rt(2,2,2)"), 5), 0);
  EXPECT_EQ(count_enumerate(parse_form("T(2,4,4)"), 4), 2);
  EXPECT_EQ(count_enumerate(parse_form("rT(1,1,1)"), 10), 16);
  EXPECT_EQ(count_enumerate(parse_form("Rt(2,2,2)"), 10), 16);
  EXPECT_EQ(series_count(count_series(parse_form("rT(1,1,1)"), 10), 5), 8);
  EXPECT_EQ(series_count(count_series(parse_form("T(2,4,4)"), 10), 4), 2);
  EXPECT_EQ(tables.count(parse_form("Rt(2,2,2)"), 10), 16);
}

TEST(Counts, EnumerationMatchesBruteForce) {
  for (const auto& e : form_registry) {
    const auto spec = make_spec(e.name, {1, 2, 3});
    const auto want = brute(spec, 60);
    for (std::int64_t N = 0; N <= 60; ++N) EXPECT_EQ(count_enumerate(spec, N), want[static_cast<std::size_t>(N)]) << e.name << " N=" << N;
  }
}

TEST(Counts, SeriesMatchesEnumeration) {
  for (const auto& e : form_registry) {
    const auto spec = make_spec(e.name, {2, 1, 3});
    const auto s = count_series(spec, 150);
    const auto table = count_table(spec, 150);
    for (std::int64_t N = 0; N <= 150; ++N) EXPECT_EQ(series_count(s, N), table[static_cast<std::size_t>(N)]) << e.name << " N=" << N;
  }
}

TEST(Counts, GaussThreeSquares) {
  const auto table = count_table(parse_form("r(1,1,1)"), 500);
  for (std::int64_t N = 1; N <= 500; ++N) EXPECT_EQ(table[static_cast<std::size_t>(N)] == 0, is_power4_class(N, 8, 7)) << N;
}

TEST(Counts, TablesGrowOnDemand) {
  CountTables tables;
  const auto spec = parse_form("T(1,1,1)");
  EXPECT_EQ(tables.count(spec, 3), 4);  // 3 = 3+0+0 (x3) or 1+1+1
  EXPECT_EQ(tables.count(spec, 5000), count_enumerate(spec, 5000));
  EXPECT_EQ(tables.count(spec, -1), 0);
}

TEST(Relations, EvaluateShiftedArgument) {
  CountTables tables;
  const CountRef ref{parse_form("T(2,4,4)"), 1, -1, 4};
  EXPECT_EQ(evaluate(ref, 5, tables), 4 * 2);
  EXPECT_EQ(evaluate(ref, 0, tables), 0);
  EXPECT_EQ(to_string(ref), "4T(2,4,4;N-1)");
}

TEST(Relations, ResidueClassesPartition) {
  const auto& rels = builtin_relations();
  for (const std::string family : {"rT-1-1-1", "r-1-1-2", "Rt-1-1-4"}) {
    std::vector<const RelationStatement*> split;
    for (const auto& r : rels)
      if (r.id.rfind(family + ".", 0) == 0 && r.residue && r.status == RelationStatus::pinned) split.push_back(&r);
    ASSERT_GE(split.size(), 2u) << family;
    std::int64_t period = 1;
    for (const auto* r : split) period = std::lcm(period, r->residue->modulus);
    for (std::int64_t N = 0; N < period; ++N) {
      int hits = 0;
      for (const auto* r : split) hits += r->residue->contains(N) ? 1 : 0;
      EXPECT_EQ(hits, 1) << family << " N=" << N;
    }
  }
}

TEST(Relations, PinnedHoldAndBrokenEntriesFail) {
  CountTables tables;
  const auto& rels = builtin_relations();
  for (const auto& r : rels)
    if (r.status == RelationStatus::pinned) EXPECT_TRUE(verify_relation(r, 300, tables).empty()) << r.id;
  const auto* broken = select_by_id(rels, "rT-1-1-1.aux.2").front();
  ASSERT_EQ(broken->id, "rT-1-1-1.aux.2");
  const auto bad = verify_relation(*broken, 300, tables);
  ASSERT_FALSE(bad.empty());
  EXPECT_EQ(bad.front().N, 0);
  EXPECT_EQ(bad.front().lhs, 1);
  EXPECT_EQ(bad.front().rhs, 4);
}

TEST(Relations, LhsResidueHits) {
  const auto* odd = select_by_id(builtin_relations(), "rT-1-1-1.odd").front();
  const auto hits = lhs_residue_hits(*odd, 2);
  EXPECT_EQ(hits, (std::vector<int>{0, 2}));
}

TEST(Scans, EmptyAndNonEmpty) {
  CountTables tables;
  EXPECT_TRUE(nonrep_scan(parse_form("Rt(1,1,4)"), 4, 3, 2000, tables).empty());
  const auto odd = nonrep_scan(parse_form("r(1,1,2)"), 2, 1, 50, tables);
  EXPECT_EQ(odd.size(), 25u);
  EXPECT_EQ(odd.front(), 1);
  EXPECT_EQ(odd.back(), 49);
}

TEST(Classical, PowerOfFourClass) {
  EXPECT_TRUE(is_power4_class(7, 8, 7));
  EXPECT_TRUE(is_power4_class(28, 8, 7));
  EXPECT_TRUE(is_power4_class(6, 16, 6));
  EXPECT_TRUE(is_power4_class(96, 16, 6));
  EXPECT_FALSE(is_power4_class(14, 8, 7));
  EXPECT_FALSE(is_power4_class(0, 8, 7));
}

TEST(Classical, AllChecksPassAtSmallBound) {
  CountTables tables;
  for (const auto& id : classical_ids()) EXPECT_TRUE(classical_check(id, 600, tables).passed()) << id;
  EXPECT_THROW(classical_check("nope", 10, tables), DomainError);
}

TEST(Figurate, SmallLists) {
  const auto values = [](FigurateKind k, std::int64_t limit) {
    std::vector<std::int64_t> v;
    for (const auto& f : figurate_values(k, limit)) v.push_back(f.value);
    return v;
  };
  EXPECT_EQ(values(FigurateKind::triangular, 10), (std::vector<std::int64_t>{0, 1, 3, 6, 10}));
  EXPECT_EQ(values(FigurateKind::gen_octagonal, 16), (std::vector<std::int64_t>{0, 1, 5, 8, 16}));
  EXPECT_EQ(values(FigurateKind::gen_pentagonal, 7), (std::vector<std::int64_t>{0, 1, 2, 5, 7}));
  std::vector<std::int64_t> idx;
  for (const auto& f : figurate_values(FigurateKind::gen_octagonal, 16)) idx.push_back(f.index);
  EXPECT_EQ(idx, (std::vector<std::int64_t>{0, -1, 1, -2, 2}));
}

TEST(Counts, SeriesExamples) {
  EXPECT_EQ(series_count(count_series(parse_form("r(1,1,2)"), 5), 1), 4);
  EXPECT_EQ(series_count(count_series(parse_form("T(1,1,1)"), 5), 3), 4);
  EXPECT_EQ(series_count(count_series(parse_form("G(1,1,2)"), 5), 1), 2);
}

TEST(Forms, Lookup) {
  EXPECT_EQ(registry_lookup("rT"), (KindTriple{FigurateKind::square, FigurateKind::triangular, FigurateKind::triangular}));
  EXPECT_EQ(registry_lookup("Pg"), (KindTriple{FigurateKind::gen_pentagonal, FigurateKind::gen_pentagonal, FigurateKind::gen_octagonal}));
  EXPECT_THROW(registry_lookup("zz"), DomainError);
}

TEST(Relations, CorruptedCoefficientIsCaught) {
  CountTables tables;
  const auto* odd = select_by_id(builtin_relations(), "rT-1-1-1.odd").front();
  EXPECT_TRUE(verify_relation(*odd, 100, tables).empty());
  RelationStatement broken = *odd;
  broken.rhs.front().scalar = 3;
  const auto bad = verify_relation(broken, 100, tables);
  ASSERT_FALSE(bad.empty());
  EXPECT_EQ(bad.front().N, 1);
}

TEST(Scans, SpecExamples) {
  CountTables tables;
  EXPECT_TRUE(nonrep_scan(parse_form("Rt(1,1,4)"), 4, 3, 1000, tables).empty());
  EXPECT_TRUE(nonrep_scan(parse_form("pG(4,1,1)"), 4, 3, 1000, tables).empty());
  const auto hit = nonrep_scan(parse_form("Rt(1,1,4)"), 4, 1, 100, tables);
  ASSERT_FALSE(hit.empty());
  EXPECT_EQ(hit.front(), 1);
}

TEST(Classical, ZeroSetOfThreeSquares) {
  const auto table = count_table(parse_form("r(1,1,1)"), 1000);
  std::vector<std::int64_t> zeros;
  for (std::int64_t N = 1; N <= 40; ++N)
    if (table[static_cast<std::size_t>(N)] == 0) zeros.push_back(N);
  EXPECT_EQ(zeros, (std::vector<std::int64_t>{7, 15, 23, 28, 31, 39}));
  CountTables tables;
  EXPECT_TRUE(classical_check("gauss3tri", 2000, tables).passed());
  EXPECT_TRUE(classical_check("gauss_legendre", 1000, tables).passed());
}
