#include "prelie/identities.hpp"

#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"
#include "prelie/products.hpp"

#include <random>

namespace prelie {

namespace {

TreeSum g(const TreeSum& a, const TreeSum& b) { return bilinear_extend(ProductKind::Graft, a, b); }

bool holds(Identity identity, const Tree& x, const Tree& y, const Tree& z) {
  return identity == Identity::PreLie ? prelie_defect(x, y, z).empty() : nap_holds(x, y, z);
}

void record(IdentityReport& report, const Tree& x, const Tree& y, const Tree& z) {
  ++report.triples_checked;
  if (!holds(report.identity, x, y, z)) {
    report.counterexamples.push_back(x.serialize() + " " + y.serialize() + " " + z.serialize());
  }
}

}  // namespace

std::string_view identity_name(Identity identity) {
  return identity == Identity::PreLie ? "pre-lie" : "nap";
}

TreeSum prelie_defect(const Tree& x, const Tree& y, const Tree& z) {
  const TreeSum sx(x), sy(y), sz(z);
  return (g(g(sx, sy), sz) - g(sx, g(sy, sz))) - (g(g(sy, sx), sz) - g(sy, g(sx, sz)));
}

bool nap_holds(const Tree& x, const Tree& y, const Tree& z) {
  return butcher(x, butcher(y, z)) == butcher(y, butcher(x, z));
}

IdentityReport check_identity_exhaustive(Identity identity, std::size_t max_total_degree,
                                         const Limits& limits) {
  if (max_total_degree < 3) throw DomainError("identity checks need a total degree of at least 3");
  check_degree(max_total_degree - 2, limits.max_degree, "check_identity_exhaustive");
  IdentityReport report;
  report.identity = identity;
  report.max_total_degree = max_total_degree;
  for (std::size_t a = 1; a + 2 <= max_total_degree; ++a) {
    for (std::size_t b = 1; a + b + 1 <= max_total_degree; ++b) {
      for (std::size_t c = 1; a + b + c <= max_total_degree; ++c) {
        for (const auto& x : enumerate_nonplanar(a, limits)) {
          for (const auto& y : enumerate_nonplanar(b, limits)) {
            for (const auto& z : enumerate_nonplanar(c, limits)) record(report, x, y, z);
          }
        }
      }
    }
  }
  return report;
}

IdentityReport check_identity_sampled(Identity identity, std::size_t min_total_degree,
                                      std::size_t max_total_degree, std::size_t samples,
                                      std::uint64_t seed, const Limits& limits) {
  if (min_total_degree < 3 || min_total_degree > max_total_degree) {
    throw DomainError("sampled identity check needs 3 <= min total degree <= max total degree");
  }
  check_degree(max_total_degree - 2, limits.max_degree, "check_identity_sampled");
  IdentityReport report;
  report.identity = identity;
  report.max_total_degree = max_total_degree;
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto tree_of = [&](std::size_t n) {
    const auto& trees = enumerate_nonplanar(n, limits);
    return trees[pick(0, trees.size() - 1)];
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t total = pick(min_total_degree, max_total_degree);
    const std::size_t a = pick(1, total - 2);
    const std::size_t b = pick(1, total - a - 1);
    record(report, tree_of(a), tree_of(b), tree_of(total - a - b));
  }
  return report;
}

}  // namespace prelie
