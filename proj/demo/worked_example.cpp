// Counts behind the first relation of the catalog, computed both ways.

#include <cstdio>

#include "qtriple/catalog.hpp"
#include "qtriple/repcount.hpp"

using namespace qtriple;

int main() {
  const auto rT = parse_form("rT(1,1,1)");
  const auto Rt = parse_form("Rt(2,2,2)");
  const auto T = parse_form("T(2,4,4)");
  const auto s_rT = count_series(rT, 20), s_Rt = count_series(Rt, 20), s_T = count_series(T, 20);

  std::printf("%4s %10s %10s %10s\n", "N", "rT(1,1,1)", "Rt(2,2,2)", "T(2,4,4)");
  for (std::int64_t N = 0; N <= 20; ++N) {
    std::printf("%4lld %10lld %10lld %10lld\n", static_cast<long long>(N), static_cast<long long>(count_enumerate(rT, N)),
                static_cast<long long>(count_enumerate(Rt, N)), static_cast<long long>(count_enumerate(T, N)));
    if (count_enumerate(rT, N) != series_count(s_rT, N) || count_enumerate(Rt, N) != series_count(s_Rt, N) ||
        count_enumerate(T, N) != series_count(s_T, N)) {
      std::printf("methods disagree at N=%lld\n", static_cast<long long>(N));
      return 1;
    }
  }

  CountTables tables;
  for (const auto* rel : select_by_id(builtin_relations(), "rT-1-1-1")) {
    const auto bad = verify_relation(*rel, 1000, tables);
    std::printf("%-22s %-50s %s\n", rel->id.c_str(), to_string(*rel).c_str(), bad.empty() ? "holds to 1000" : "fails");
  }
  return 0;
}
