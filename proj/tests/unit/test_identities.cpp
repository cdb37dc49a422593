#include <doctest.h>

#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"
#include "prelie/identities.hpp"
#include "prelie/products.hpp"

using namespace prelie;

namespace {

Tree T(const char* s) { return Tree::parse(s); }

}  // namespace

TEST_CASE("single triples") {
  CHECK(prelie_defect(T("()"), T("()"), T("()")).empty());
  CHECK(prelie_defect(T("(())"), T("()"), T("(()())")).empty());
  CHECK(nap_holds(T("(())"), T("()"), T("(()())")));
  CHECK(identity_name(Identity::PreLie) == "pre-lie");
  CHECK(identity_name(Identity::Nap) == "nap");
}

TEST_CASE("grafting is not associative") {
  const Tree x = T("()");
  const Tree y = T("(())");
  const TreeSum lhs = bilinear_extend(ProductKind::Graft, graft(x, y), TreeSum(x));
  const TreeSum rhs = bilinear_extend(ProductKind::Graft, TreeSum(x), graft(y, x));
  CHECK(lhs != rhs);
  CHECK(butcher(butcher(x, y), x) != butcher(x, butcher(y, x)));
}

TEST_CASE("exhaustive checks up to total degree 8") {
  for (Identity id : {Identity::PreLie, Identity::Nap}) {
    const IdentityReport report = check_identity_exhaustive(id, 8);
    CHECK(report.passed());
    CHECK(report.max_total_degree == 8);
    CHECK(report.counterexamples.empty());
    std::size_t triples = 0;
    for (std::size_t a = 1; a <= 6; ++a) {
      for (std::size_t b = 1; a + b <= 7; ++b) {
        for (std::size_t c = 1; a + b + c <= 8; ++c) {
          triples += enumerate_nonplanar(a).size() * enumerate_nonplanar(b).size() *
                     enumerate_nonplanar(c).size();
        }
      }
    }
    CHECK(report.triples_checked == triples);
  }
  CHECK_THROWS_AS(check_identity_exhaustive(Identity::Nap, 2), DomainError);
  Limits tight;
  tight.max_degree = 4;
  CHECK_THROWS_AS(check_identity_exhaustive(Identity::Nap, 8, tight), DegreeCapError);
}

TEST_CASE("sampled checks are reproducible") {
  const auto a = check_identity_sampled(Identity::PreLie, 9, 11, 40, 5);
  const auto b = check_identity_sampled(Identity::PreLie, 9, 11, 40, 5);
  CHECK(a.passed());
  CHECK(a.triples_checked == 40);
  CHECK(a.triples_checked == b.triples_checked);
  CHECK(check_identity_sampled(Identity::Nap, 3, 12, 100, 1).passed());
  CHECK_THROWS_AS(check_identity_sampled(Identity::Nap, 5, 4, 1, 0), DomainError);
}
