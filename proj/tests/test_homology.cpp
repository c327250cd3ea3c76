#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistbar/errors.hpp"
#include "twistbar/homology.hpp"
#include "twistbar/oracles/oracles.hpp"

using namespace twistbar;

namespace {

MonoidPtr share(TwistedMonoid m) { return std::make_shared<const TwistedMonoid>(std::move(m)); }

SetPtr fixed_of(const MonoidPtr& m, int truncation) {
  return fixed_subcomplex(edgewise(bar_sigma(m, 2 * truncation + 1), truncation));
}

bool dd_zero(const ChainComplex& c) {
  for (int k = 2; k <= c.top_degree; ++k)
    if (!(c.boundaries[k - 1] * c.boundaries[k]).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("boundary of (x, x) in the bar of C2") {
  const auto bar = bar_sigma(share(cyclic_group(2)), 3);
  const auto c = normalized_chains(*bar, 3);
  REQUIRE(c.basis[1].size() == 1);
  REQUIRE(c.basis[2].size() == 1);
  CHECK(c.basis[2][0].data == std::vector<int>{1, 1});
  CHECK(c.boundaries[2](0, 0) == 2);
  CHECK(c.boundaries[1].is_zero());
  CHECK(c.basis[3].size() == 1);
  CHECK(c.basis[3][0].data == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(normalized_chains(*bar, 4), TruncationError);
}

TEST_CASE("nondegenerate basis sizes of bar constructions") {
  // nondegenerate simplices avoid the unit: (|A| - 1)^n
  for (const char* name : {"c3", "s3", "min3"}) {
    const auto m = share(builtin_monoid(name));
    const auto c = normalized_chains(*bar_sigma(m, 3), 3);
    std::size_t expect = 1;
    for (int n = 0; n <= 3; ++n, expect *= m->size() - 1) CHECK(c.basis[n].size() == expect);
  }
}

TEST_CASE("cyclic groups match the periodic resolution") {
  for (int m : {2, 3, 4, 5}) {
    const auto h = homology_of(*bar_sigma(share(cyclic_group(m)), 5), 4);
    REQUIRE(h.degrees.size() == 5);
    for (int k = 0; k <= 4; ++k) CHECK(h.degrees[k] == oracle::cyclic_group_homology(m, k));
  }
}

TEST_CASE("S3 matches its known homology") {
  const auto h = homology_of(*bar_sigma(share(symmetric_group_3()), 4), 3);
  for (int k = 0; k <= 3; ++k) CHECK(h.degrees[k] == oracle::symmetric_group_3_homology(k));
}

TEST_CASE("H1 of the bar is the Grothendieck group") {
  for (const char* name : {"boolean", "min3", "c2", "c3", "c4", "c2xc2"}) {
    const auto m = share(builtin_monoid(name));
    CHECK(homology_of(*bar_sigma(m, 2), 1).degrees[1] == grothendieck_group(*m));
  }
  CHECK(homology_of(*bar_sigma(share(boolean_monoid()), 3), 2).degrees[0] == AbelianGroup{1, {}});
}

TEST_CASE("fixed points follow the orbit decomposition") {
  for (const char* name : {"c2", "c3", "c4", "s3"}) {
    const auto m = share(builtin_monoid(name));
    const auto expect = oracle::orbit_decomposition_homology(*m, 1);
    const auto fixed = homology_of(*fixed_of(m, 2), 1);
    const auto two = homology_of(*two_sided_bar(m, 2), 1);
    INFO(name);
    CHECK(fixed.degrees == expect);
    CHECK(two.degrees == expect);
    CHECK(compare_homology(*fixed_of(m, 3), *two_sided_bar(m, 3), 2).passed);
  }
  const auto s3 = homology_of(*two_sided_bar(share(symmetric_group_3()), 2), 1);
  CHECK(s3.degrees[0] == AbelianGroup{2, {}});
  CHECK(s3.degrees[1] == AbelianGroup{0, {2, 2}});
  const auto c4 = homology_of(*two_sided_bar(share(cyclic_group(4)), 2), 1);
  CHECK(c4.degrees[0] == AbelianGroup{2, {}});
  CHECK(c4.degrees[1] == AbelianGroup{0, {4, 4}});
}

TEST_CASE("pi0") {
  CHECK(pi0(*bar_sigma(share(symmetric_group_3()), 2)) == 1);
  CHECK(pi0(*two_sided_bar(share(cyclic_group(4)), 1)) == 2);
  CHECK(pi0(*two_sided_bar(share(symmetric_group_3()), 1)) == 2);
  CHECK(pi0(*two_sided_bar(share(cyclic_group(2)), 1)) == 2);
  CHECK(pi0(*fixed_of(share(symmetric_group_3()), 1)) == 2);
}

TEST_CASE("torus Betti numbers from a product of circles") {
  const auto s1 = hand_built_twisted(simplicial_circle_tables(3));
  CHECK(betti_numbers(*s1, 2) == std::vector<int>{1, 1, 0});
  const auto torus = product(s1, s1);
  CHECK(betti_numbers(*torus, 2) == std::vector<int>{1, 2, 1});
  CHECK(homology_of(*torus, 2).degrees[2] == AbelianGroup{1, {}});
}

TEST_CASE("D D = 0 on every construction") {
  for (const auto& name : builtin_names()) {
    const auto m = share(builtin_monoid(name));
    CHECK(dd_zero(normalized_chains(*bar_sigma(m, 3), 3)));
    CHECK(dd_zero(normalized_chains(*two_sided_bar(m, 3), 3)));
    CHECK(dd_zero(normalized_chains(*fixed_of(m, 2), 2)));
  }
  const auto c2 = share(cyclic_group(2));
  CHECK(dd_zero(normalized_chains(*product(TwistedPtr(bar_sigma(c2, 3)), TwistedPtr(bar_sigma(c2, 3))), 3)));
  CHECK(dd_zero(normalized_chains(BisimplicialDiagonal(c2, true, 3), 3)));
}

TEST_CASE("compare_homology detects a difference") {
  const auto a = bar_sigma(share(cyclic_group(2)), 3);
  const auto b = bar_sigma(share(cyclic_group(3)), 3);
  CHECK(compare_homology(*a, *a, 2).passed);
  const auto cert = compare_homology(*a, *b, 2);
  CHECK_FALSE(cert.passed);
  CHECK(cert.failure.has_value());
}

TEST_CASE("homology of an explicit complex") {
  // Z --2--> Z in degrees 1 -> 0 and nothing above: H0 = Z/2, H1 = 0
  ChainComplex c;
  c.top_degree = 2;
  c.basis = {{Simplex{0, {0}}}, {Simplex{1, {0}}}, {}};
  c.boundaries = {IntMatrix(0, 1), IntMatrix::from_rows({{2}}), IntMatrix(1, 0)};
  const auto h = homology(c);
  CHECK(h.valid_through == 1);
  CHECK(h.degrees[0] == AbelianGroup{0, {2}});
  CHECK(h.degrees[1] == AbelianGroup{});
}
