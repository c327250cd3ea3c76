#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "twistbar/errors.hpp"
#include "twistbar/monoid.hpp"
#include "twistbar/operad.hpp"
#include "twistbar/oracles/oracles.hpp"

using namespace twistbar;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

// Every tuple of `t` permutations with degrees in 0..max_degree.
void for_each_block_tuple(int t, int max_degree, const std::function<void(const std::vector<Permutation>&)>& fn) {
  std::vector<std::vector<Permutation>> by_degree;
  for (int d = 0; d <= max_degree; ++d) by_degree.push_back(all_permutations(d));
  std::vector<Permutation> cur;
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == t) return fn(cur);
    for (const auto& level : by_degree)
      for (const auto& p : level) {
        cur.push_back(p);
        rec();
        cur.pop_back();
      }
  };
  rec();
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(perm({1, 1}), DomainError);
  CHECK_THROWS_AS(perm({0, 1}), DomainError);
  CHECK(perm({2, 3, 1}).inverse() == perm({3, 1, 2}));
  CHECK(Permutation::reversal(3) == perm({3, 2, 1}));
  CHECK(all_permutations(0).size() == 1);
  CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("gamma examples") {
  const std::vector<Permutation> ones{Permutation::identity(1), Permutation::identity(1)};
  CHECK(gamma(Permutation::identity(2), ones) == Permutation::identity(2));
  const std::vector<Permutation> b1{Permutation::identity(1), Permutation::identity(2)};
  CHECK(gamma(perm({2, 1}), b1) == perm({3, 1, 2}));
  const std::vector<Permutation> b2{Permutation::identity(1), perm({2, 1})};
  CHECK(gamma(Permutation::identity(2), b2) == perm({1, 3, 2}));
  CHECK_THROWS_AS(gamma(Permutation::identity(2), std::vector<Permutation>{Permutation::identity(1)}), DimensionError);
}

TEST_CASE("gamma agrees with block substitution for arity <= 3, degrees <= 3") {
  for (int t = 0; t <= 3; ++t)
    for (const auto& v : all_permutations(t))
      for_each_block_tuple(t, 3, [&](const std::vector<Permutation>& blocks) {
        CHECK(gamma(v, blocks) == oracle::gamma_by_substitution(v, blocks));
      });
}

TEST_CASE("involute") {
  CHECK(involute(Permutation::identity(3)) == perm({3, 2, 1}));
  CHECK(involute(perm({2, 1, 3})) == perm({2, 3, 1}));
  CHECK(involute(involute(perm({3, 1, 2}))) == perm({3, 1, 2}));
}

TEST_CASE("equivariance certificates") {
  for (int b = 1; b <= 3; ++b) {
    const auto c = check_equivariance(b, b);
    CHECK(c.passed);
    CHECK_FALSE(c.counterexample.has_value());
    CHECK(c.cases > 0);
  }
  // t! * (0! + 1! + 2! + 3!)^t summed over t = 0..3
  CHECK(check_equivariance(3, 3).cases == 1 + 10 + 2 * 100 + 6 * 1000);
}

TEST_CASE("associativity certificate") {
  const auto c = check_associativity(2, 2);
  CHECK(c.passed);
  CHECK(c.cases > 0);
}

TEST_CASE("algebra_eval") {
  const auto c2 = cyclic_group(2);
  const int e = c2.id_of("e"), x = c2.id_of("g");
  const std::vector<int> xex{x, e, x};
  CHECK(algebra_eval(c2, Permutation::reversal(3), xex) == e);
  CHECK(algebra_eval(c2, Permutation::identity(0), std::vector<int>{}) == e);
  const std::vector<int> bad{0, 7};
  CHECK_THROWS_AS(algebra_eval(c2, Permutation::identity(2), bad), DomainError);

  const auto s3 = symmetric_group_3();
  const int a = s3.id_of("(12)"), b = s3.id_of("(13)");
  const std::vector<int> ab{a, b};
  CHECK(algebra_eval(s3, Permutation::identity(2), ab) == s3.mul(a, b));
  CHECK(algebra_eval(s3, perm({2, 1}), ab) == s3.mul(b, a));
}

namespace {

std::vector<std::vector<int>> words(int k, int n) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int a = 0; a < k; ++a) {
        next.push_back(w);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("tau(u(a)) = (tau u)(tau a)") {
  for (const auto& m : {cyclic_group(2), symmetric_group_3(), boolean_monoid()})
    for (int n = 0; n <= 3; ++n)
      for (const auto& w : words(m.size(), n)) {
        std::vector<int> tw;
        for (int a : w) tw.push_back(m.tau(a));
        for (const auto& u : all_permutations(n))
          CHECK(m.tau(algebra_eval(m, u, w)) == algebra_eval(m, involute(u), tw));
      }
}

TEST_CASE("algebra structure map respects gamma") {
  for (const auto& m : {cyclic_group(2), symmetric_group_3()})
    for (const auto& v : all_permutations(2))
      for (int s1 = 0; s1 <= 2; ++s1)
        for (int s2 = 0; s2 <= 2; ++s2)
          for (const auto& u1 : all_permutations(s1))
            for (const auto& u2 : all_permutations(s2))
              for (const auto& w1 : words(m.size(), s1))
                for (const auto& w2 : words(m.size(), s2)) {
                  const std::vector<Permutation> blocks{u1, u2};
                  std::vector<int> joined = w1;
                  joined.insert(joined.end(), w2.begin(), w2.end());
                  const std::vector<int> inner{algebra_eval(m, u1, w1), algebra_eval(m, u2, w2)};
                  CHECK(algebra_eval(m, gamma(v, blocks), joined) == algebra_eval(m, v, inner));
                }
}
