// Leading coefficients of the named theta functions, and one decomposition
// checked by expansion.

#include <cstdio>

#include "qtriple/identity.hpp"

using namespace qtriple;

int main() {
  const HalfExp hi = HalfExp::whole(20);
  const struct {
    const char* name;
    SpecialTheta which;
  } rows[] = {{"phi", SpecialTheta::phi}, {"psi", SpecialTheta::psi}, {"f(-q)", SpecialTheta::fneg}, {"X", SpecialTheta::X}, {"Y", SpecialTheta::Y}};

  std::printf("%-6s", "");
  for (int n = 0; n <= 20; ++n) std::printf("%3d", n);
  std::printf("\n");
  for (const auto& r : rows) {
    const auto s = theta_expand(theta_special(r.which, 1), hi);
    std::printf("%-6s", r.name);
    for (int n = 0; n <= 20; ++n) std::printf("%3lld", static_cast<long long>(s.coeff(HalfExp::whole(n))));
    std::printf("\n");
  }

  const Thm1Params p{2, 1, 1, 0, 1, 0, 1, 1};
  const auto rep = thm1_verify(p, HalfExp::whole(150));
  std::printf("\nf(q,1)^2 f(q,q) as %zu theta products: %s through q^150\n", rep.rhs_term_count, rep.equal ? "equal" : "NOT equal");
  for (const auto& t : thm1_rhs(p)) std::printf("  %s\n", to_string(t).c_str());
  return rep.equal ? 0 : 1;
}
