#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "twistbar/errors.hpp"
#include "twistbar/ordinal.hpp"

using namespace twistbar;

namespace {

// Number of weakly increasing maps {0..m} -> {0..n}: C(m+n+1, m+1).
long count_monotone(int m, int n) {
  long c = 1;
  for (int k = 1; k <= m + 1; ++k) c = c * (n + k) / k;
  return c;
}

OrdinalMap map(int n, std::vector<int> v) { return OrdinalMap(n, std::move(v)); }

}  // namespace

TEST_CASE("construction rejects non-monotone or out-of-range values") {
  CHECK_THROWS_AS(map(2, {1, 0}), DomainError);
  CHECK_THROWS_AS(map(1, {0, 2}), DomainError);
  CHECK_THROWS_AS(map(1, {-1}), DomainError);
  CHECK_NOTHROW(map(0, {0, 0, 0}));
}

TEST_CASE("compose") {
  CHECK(compose(map(2, {0, 2, 2}), map(2, {1, 2})) == map(2, {2, 2}));
  CHECK(compose(OrdinalMap::coface(1, 0), OrdinalMap::identity(0)) == map(1, {1}));
  const auto a = map(3, {0, 1, 3});
  CHECK(compose(OrdinalMap::identity(3), a) == a);
  CHECK_THROWS_AS(compose(map(2, {0, 2, 2}), map(3, {0, 1})), DimensionError);
}

TEST_CASE("generators") {
  CHECK(OrdinalMap::coface(2, 1) == map(2, {0, 2}));
  CHECK(OrdinalMap::codegeneracy(1, 0) == map(1, {0, 0, 1}));
  CHECK(OrdinalMap::codegeneracy(0, 0) == map(0, {0, 0}));
  CHECK(map(3, {0, 1, 2}).conjugate() == map(3, {1, 2, 3}));
}

TEST_CASE("enumeration counts match the binomial formula") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const auto all = all_ordinal_maps(m, n);
      CHECK(static_cast<long>(all.size()) == count_monotone(m, n));
      CHECK(std::set<OrdinalMap>(all.begin(), all.end()).size() == all.size());
    }
}

TEST_CASE("factorize recomposes every map with tops <= 4") {
  CHECK(factorize(OrdinalMap::identity(2)).empty());
  const auto d1 = factorize(map(2, {0, 2}));
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].kind == ElementaryOp::Kind::Coface);
  CHECK(d1[0].index == 1);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (const auto& a : all_ordinal_maps(m, n)) {
        const auto ops = factorize(a);
        CHECK(recompose(ops, n) == a);
        int faces = 0, degs = 0;
        for (const auto& op : ops) (op.kind == ElementaryOp::Kind::Coface ? faces : degs)++;
        std::set<int> image(a.values().begin(), a.values().end());
        CHECK(faces == n + 1 - static_cast<int>(image.size()));
        CHECK(degs == m + 1 - static_cast<int>(image.size()));
      }
}

TEST_CASE("double examples") {
  CHECK(double_map(OrdinalMap::identity(0)) == OrdinalMap::identity(1));
  CHECK(double_map(map(1, {1})) == map(3, {1, 2}));
  CHECK(double_map(map(0, {0, 0})) == map(1, {0, 0, 1, 1}));
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(OrdinalMap::identity(3)));
  CHECK_FALSE(is_symmetric(map(3, {0, 1, 2, 2})));
  CHECK_FALSE(is_symmetric(OrdinalMap::identity(2)));
  CHECK_FALSE(is_symmetric(map(3, {0, 1, 2})));
}

TEST_CASE("restrict_half") {
  CHECK(restrict_half(OrdinalMap::identity(3)) == OrdinalMap::identity(1));
  CHECK(restrict_half(map(3, {1, 2})) == map(1, {1}));
  CHECK_THROWS_AS(restrict_half(map(3, {0, 1, 2, 2})), DomainError);
}

TEST_CASE("double and restrict_half are inverse bijections for m, n <= 4") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      long symmetric = 0;
      for (const auto& t : all_ordinal_maps(2 * m + 1, 2 * n + 1)) {
        if (!is_symmetric(t)) continue;
        ++symmetric;
        CHECK(double_map(restrict_half(t)) == t);
      }
      CHECK(symmetric == count_monotone(m, n));
      for (const auto& s : all_ordinal_maps(m, n)) {
        CHECK(is_symmetric(double_map(s)));
        CHECK(restrict_half(double_map(s)) == s);
      }
    }
}

TEST_CASE("double is functorial for tops <= 3") {
  for (int l = 0; l <= 3; ++l)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n)
        for (const auto& a : all_ordinal_maps(m, n))
          for (const auto& b : all_ordinal_maps(l, m))
            CHECK(double_map(compose(a, b)) == compose(double_map(a), double_map(b)));
  for (int n = 0; n <= 4; ++n) CHECK(double_map(OrdinalMap::identity(n)) == OrdinalMap::identity(2 * n + 1));
}

TEST_CASE("zero_elimination") {
  CHECK(zero_elimination(1, 0) == map(3, {1, 2}));
  CHECK(zero_elimination(1, 1) == map(3, {0, 3}));
  CHECK(zero_elimination(2, 1) == map(5, {0, 2, 3, 5}));
  CHECK_THROWS_AS(zero_elimination(2, 3), DomainError);
  CHECK_THROWS_AS(zero_elimination(0, 0), DomainError);
  for (int m = 1; m <= 5; ++m)
    for (int i = 0; i <= m; ++i) {
      const auto z = zero_elimination(m, i);
      CHECK(is_symmetric(z));
      CHECK(z.is_injective());
      CHECK(std::find(z.values().begin(), z.values().end(), i) == z.values().end());
      CHECK(std::find(z.values().begin(), z.values().end(), 2 * m + 1 - i) == z.values().end());
    }
}
