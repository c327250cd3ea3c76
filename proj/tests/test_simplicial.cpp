#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "twistbar/errors.hpp"
#include "twistbar/simplicial.hpp"

using namespace twistbar;

namespace {

MonoidPtr share(TwistedMonoid m) { return std::make_shared<const TwistedMonoid>(std::move(m)); }

Simplex sx(int level, std::vector<int> data) { return {level, std::move(data)}; }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("bar_sigma operators in C2") {
  const auto bar = bar_sigma(share(cyclic_group(2)), 3);
  const int e = 0, x = 1;
  CHECK(bar->face(1, sx(2, {x, x})) == sx(1, {e}));
  CHECK(bar->face(0, sx(2, {x, e})) == sx(1, {e}));
  CHECK(bar->face(2, sx(2, {x, e})) == sx(1, {x}));
  CHECK(bar->involution(sx(2, {x, e})) == sx(2, {e, x}));
  CHECK(bar->degeneracy(0, sx(0, {})) == sx(1, {e}));
  CHECK(bar->degeneracy(1, sx(1, {x})) == sx(2, {x, e}));
  for (int n = 0; n <= 3; ++n) CHECK(bar->simplices(n).size() == ipow(2, n));
  CHECK_THROWS_AS(bar->face(0, sx(0, {})), DomainError);
  CHECK_THROWS_AS(bar->face(3, sx(2, {0, 0})), DomainError);
  CHECK_THROWS_AS(bar->degeneracy(0, sx(3, {0, 0, 0})), TruncationError);
  CHECK_THROWS_AS(bar->simplices(4), TruncationError);
}

TEST_CASE("bar_sigma in S3 applies tau when reversing") {
  const auto s3 = share(symmetric_group_3());
  const auto bar = bar_sigma(s3, 2);
  const int r = s3->id_of("(123)"), t = s3->id_of("(12)");
  CHECK(bar->involution(sx(2, {r, t})) == sx(2, {t, s3->id_of("(132)")}));
}

TEST_CASE("fixed simplices of bar_sigma are generated exactly") {
  for (const char* name : {"c4", "s3", "boolean"}) {
    const auto bar = bar_sigma(share(builtin_monoid(name)), 4);
    for (int n = 0; n <= 4; ++n) {
      std::vector<Simplex> filtered;
      for (auto& y : bar->simplices(n))
        if (bar->involution(y) == y) filtered.push_back(y);
      auto direct = bar->fixed_simplices(n);
      std::sort(direct.begin(), direct.end());
      std::sort(filtered.begin(), filtered.end());
      CHECK(direct == filtered);
      CHECK(bar->fixed_count(n) == filtered.size());
    }
  }
}

TEST_CASE("two-sided bar operators in S3") {
  const auto s3 = share(symmetric_group_3());
  const auto b = two_sided_bar(s3, 2);
  const int p12 = s3->id_of("(12)"), p13 = s3->id_of("(13)"), p23 = s3->id_of("(23)");
  CHECK(b->face(1, sx(1, {p12, p13})) == sx(0, {p23}));
  CHECK(b->face(0, sx(1, {p12, p13})) == sx(0, {p13}));
  CHECK(b->degeneracy(0, sx(0, {p13})) == sx(1, {s3->unit(), p13}));
  CHECK(b->level_size(0) == 4);
  CHECK(b->level_size(2) == 36 * 4);
  CHECK(b->simplices(2).size() == 36 * 4);
}

TEST_CASE("edgewise subdivision acts by doubled operators") {
  const auto s3 = share(symmetric_group_3());
  const auto sd = edgewise(bar_sigma(s3, 3), 1);
  const int a = s3->id_of("(12)"), b = s3->id_of("(123)"), c = s3->id_of("(13)");
  const Simplex abc = sx(1, {a, b, c});
  CHECK(sd->face(0, abc) == sx(0, {b}));
  CHECK(sd->face(1, abc) == sx(0, {s3->product({a, b, c})}));
  CHECK(sd->act(OrdinalMap::identity(1), abc) == abc);
  CHECK(sd->level_size(1) == 216);
  CHECK_THROWS_AS(edgewise(bar_sigma(s3, 4), 2), TruncationError);
  CHECK_THROWS_AS(edgewise(sd, 0), DomainError);
}

TEST_CASE("fixed subcomplex of the subdivided bar for C4") {
  const auto c4 = share(cyclic_group(4));
  const auto fixed = fixed_subcomplex(edgewise(bar_sigma(c4, 5), 2));
  const int e = c4->id_of("e"), g = c4->id_of("g"), g2 = c4->id_of("g^2"), g3 = c4->id_of("g^3");
  const auto l0 = fixed->simplices(0);
  CHECK(std::set<Simplex>(l0.begin(), l0.end()) == std::set<Simplex>{sx(0, {e}), sx(0, {g2})});
  CHECK(fixed->simplices(1).size() == 8);
  CHECK(fixed->level_size(2) == 32);
  for (const auto& y : fixed->simplices(1)) CHECK(y.data[2] == c4->tau(y.data[0]));
  CHECK(fixed->face(1, sx(1, {g, g2, g3})) == sx(0, {g2}));
}

TEST_CASE("eta is a simplicial isomorphism") {
  for (const char* name : {"c2", "c4", "s3", "boolean", "min3"}) {
    const auto cert = verify_simplicial_map(eta(share(builtin_monoid(name)), 3));
    INFO(name << ": " << cert.failure.value_or(""));
    CHECK(cert.passed);
  }
  const auto c2 = verify_simplicial_map(eta(share(cyclic_group(2)), 4));
  CHECK(c2.passed);
  CHECK(c2.level_sizes == std::vector<std::uint64_t>{2, 4, 8, 16, 32});
}

TEST_CASE("the corrupted eta fails on a face") {
  const auto cert = verify_simplicial_map(corrupted_eta(share(cyclic_group(2)), 2));
  CHECK_FALSE(cert.passed);
  REQUIRE(cert.failure.has_value());
  CHECK(cert.failure->find("d_") != std::string::npos);
}

TEST_CASE("projection from the two-sided bar") {
  const auto s3 = share(symmetric_group_3());
  const auto p = project_two_sided(s3, 3);
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : p.source->simplices(n)) {
      for (int i = 0; i < n; ++i) CHECK(p.apply(p.source->face(i, x)) == p.target->face(i, p.apply(x)));
      for (int j = 0; j < n && n < 3; ++j)
        CHECK(p.apply(p.source->degeneracy(j, x)) == p.target->degeneracy(j, p.apply(x)));
    }
  CHECK(verify_simplicial_map(p).passed);
  CHECK(verify_simplicial_map(project_two_sided(share(cyclic_group(3)), 3)).passed);
}

TEST_CASE("simplicial identities and twisted axioms") {
  for (const auto& name : builtin_names()) {
    const auto m = share(builtin_monoid(name));
    const auto bar = bar_sigma(m, 4);
    CHECK(verify_simplicial_identities(*bar, 4).passed);
    CHECK(verify_twisted_axioms(*bar, 4).passed);
    CHECK(verify_conjugate_law(*bar, 3).passed);
    CHECK(verify_simplicial_identities(*two_sided_bar(m, 3), 3).passed);
  }
  const auto s3 = share(symmetric_group_3());
  const auto sd = edgewise(bar_sigma(s3, 5), 2);
  CHECK(verify_simplicial_identities(*sd, 2).passed);
  CHECK(verify_twisted_axioms(*sd, 2).passed);
  CHECK(verify_conjugate_law(*sd, 2).passed);
  CHECK(verify_simplicial_identities(*fixed_subcomplex(sd), 2).passed);
}

TEST_CASE("subdivided involution commutes with operators rather than reversing them") {
  const auto sd = edgewise(bar_sigma(share(symmetric_group_3()), 3), 1);
  bool some_reversal_fails = false;
  for (const auto& x : sd->simplices(1)) {
    CHECK(sd->involution(sd->face(0, x)) == sd->face(0, sd->involution(x)));
    if (sd->involution(sd->face(0, x)) != sd->face(1, sd->involution(x))) some_reversal_fails = true;
  }
  CHECK(some_reversal_fails);
}

TEST_CASE("a deliberately wrong involution is caught") {
  // the circle with tau = identity violates tau d_0 = d_1 tau on the loop
  auto t = simplicial_circle_tables(2);
  for (auto& level : t.involution)
    for (std::size_t k = 0; k < level.size(); ++k) level[k] = static_cast<int>(k);
  CHECK_FALSE(verify_twisted_axioms(*hand_built_twisted(t), 2).passed);
  CHECK(verify_twisted_axioms(*hand_built_twisted(simplicial_circle_tables(3)), 3).passed);
}

TEST_CASE("functoriality and symmetric closure") {
  const auto c2 = share(cyclic_group(2));
  CHECK(verify_functoriality(*bar_sigma(c2, 3), 3).passed);
  const auto s3 = share(symmetric_group_3());
  CHECK(verify_functoriality(*bar_sigma(s3, 2), 2).passed);
  CHECK(verify_symmetric_closure(*bar_sigma(s3, 5), 5).passed);
  CHECK(verify_symmetric_closure(*bar_sigma(share(cyclic_group(4)), 5), 5).passed);
}

TEST_CASE("degeneracy criterion matches the image of the degeneracies") {
  for (const char* name : {"c2", "s3", "boolean"}) {
    const auto m = share(builtin_monoid(name));
    const auto bar = bar_sigma(m, 3);
    for (int n = 1; n <= 3; ++n) {
      std::set<Simplex> image;
      for (const auto& y : bar->simplices(n - 1))
        for (int j = 0; j < n; ++j) image.insert(bar->degeneracy(j, y));
      for (const auto& x : bar->simplices(n)) {
        const bool has_unit = std::find(x.data.begin(), x.data.end(), m->unit()) != x.data.end();
        CHECK(bar->is_degenerate(x) == image.contains(x));
        CHECK(bar->is_degenerate(x) == has_unit);
      }
    }
  }
}

TEST_CASE("products") {
  const auto c2 = share(cyclic_group(2));
  const auto p = product(TwistedPtr(bar_sigma(c2, 2)), TwistedPtr(bar_sigma(c2, 2)));
  CHECK(p->level_size(0) == 1);
  CHECK(p->level_size(1) == 4);
  CHECK(p->level_size(2) == 16);
  CHECK(verify_simplicial_identities(*p, 2).passed);
  CHECK(verify_twisted_axioms(*p, 2).passed);
  const auto s3 = share(symmetric_group_3());
  const auto q = product(TwistedPtr(bar_sigma(s3, 2)), TwistedPtr(bar_sigma(c2, 2)));
  CHECK(verify_twisted_axioms(*q, 2).passed);
  CHECK_THROWS_AS(product(TwistedPtr(bar_sigma(c2, 2)), TwistedPtr(bar_sigma(c2, 3))), DimensionError);
  const auto sd = edgewise(bar_sigma(c2, 5), 2);
  CHECK_THROWS_AS(product(TwistedPtr(sd), TwistedPtr(bar_sigma(c2, 2))), DimensionError);
}

TEST_CASE("hand-built circle") {
  const auto circle = hand_built_twisted(simplicial_circle_tables(3));
  CHECK(circle->level_size(0) == 1);
  CHECK(circle->level_size(1) == 2);
  CHECK(circle->level_size(3) == 4);
  CHECK(verify_simplicial_identities(*circle, 3).passed);
  CHECK_THROWS_AS(hand_built_twisted(HandBuiltTables{{1}, {{}}, {{}}, {}}), DomainError);
}

TEST_CASE("bisimplicial diagonal") {
  const auto c2 = share(cyclic_group(2));
  BisimplicialDiagonal diag(c2, true, 3);
  CHECK(diag.level_size(2) == 16);
  CHECK(diag.simplices(2).size() == 16);
  for (const auto& x : diag.simplices(2)) CHECK(diag.face(1, x) == diag.face_other_order(1, x));
  CHECK(diagonal_compare(c2, 3).passed);
  CHECK(diagonal_compare(share(cyclic_group(3)), 3).passed);
  CHECK_THROWS_AS(diagonal_compare(share(symmetric_group_3()), 2), UnsupportedInput);
}

TEST_CASE("all_words") {
  CHECK(all_words(3, 0).size() == 1);
  CHECK(all_words(2, 3).size() == 8);
  CHECK(all_words(2, 2) == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}
