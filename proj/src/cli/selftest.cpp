#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "twistbar/cli.hpp"
#include "twistbar/homology.hpp"
#include "twistbar/operad.hpp"
#include "twistbar/oracles/oracles.hpp"
#include "twistbar/simplicial.hpp"

namespace twistbar::cli {

using nlohmann::ordered_json;

namespace {

struct SuiteOutcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
  void require(const Certificate& c) {
    require(c.passed, c.name + ": " + c.failure.value_or("failed"));
  }
};

MonoidPtr shared(const std::string& name) { return std::make_shared<const TwistedMonoid>(builtin_monoid(name)); }

SuiteOutcome ordinal_suite() {
  SuiteOutcome s;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      for (const auto& a : all_ordinal_maps(m, n)) {
        s.require(recompose(factorize(a), m) == a, "factorize/recompose at " + a.to_string());
        const OrdinalMap d = double_map(a);
        s.require(is_symmetric(d) && restrict_half(d) == a, "double/restrict_half at " + a.to_string());
      }
      std::size_t symmetric = 0;
      for (const auto& t : all_ordinal_maps(2 * m + 1, 2 * n + 1))
        if (is_symmetric(t)) {
          ++symmetric;
          s.require(double_map(restrict_half(t)) == t, "restrict_half/double at " + t.to_string());
        }
      s.require(symmetric == all_ordinal_maps(m, n).size(), "symmetric maps are not in bijection with doubles");
    }
  for (int l = 0; l <= 3; ++l)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n)
        for (const auto& a : all_ordinal_maps(m, n))
          for (const auto& b : all_ordinal_maps(l, m))
            s.require(double_map(compose(a, b)) == compose(double_map(a), double_map(b)),
                      "double not functorial at " + a.to_string() + " o " + b.to_string());
  for (int m = 1; m <= 5; ++m)
    for (int i = 0; i <= m; ++i) s.require(is_symmetric(zero_elimination(m, i)), "zero_elimination not symmetric");
  return s;
}

SuiteOutcome operad_suite() {
  SuiteOutcome s;
  const auto eq = check_equivariance(3, 3);
  s.require(eq.passed, "equivariance: " + eq.counterexample.value_or(""));
  const auto assoc = check_associativity(2, 2);
  s.require(assoc.passed, "associativity: " + assoc.counterexample.value_or(""));
  for (int t = 0; t <= 3; ++t)
    for (const auto& v : all_permutations(t)) {
      std::vector<Permutation> pool;
      for (int d = 0; d <= 2; ++d)
        for (auto& p : all_permutations(d)) pool.push_back(p);
      // a representative family of block tuples rather than the full product
      for (std::size_t r = 0; r < pool.size(); ++r) {
        std::vector<Permutation> blocks;
        for (int i = 0; i < t; ++i) blocks.push_back(pool[(r + static_cast<std::size_t>(i) * 2) % pool.size()]);
        s.require(gamma(v, blocks) == oracle::gamma_by_substitution(v, blocks), "gamma vs substitution oracle");
      }
    }
  for (const auto& name : builtin_names()) {
    const TwistedMonoid a = builtin_monoid(name);
    for (int n = 0; n <= 3; ++n)
      for (const auto& u : all_permutations(n))
        for (const auto& w : all_words(a.size(), n)) {
          std::vector<int> tw;
          for (int x : w) tw.push_back(a.tau(x));
          s.require(a.tau(algebra_eval(a, u, w)) == algebra_eval(a, involute(u), tw),
                    "algebra action not tau-equivariant on " + name);
        }
  }
  return s;
}

SuiteOutcome monoid_suite() {
  SuiteOutcome s;
  for (const auto& name : builtin_names()) {
    const TwistedMonoid a = builtin_monoid(name);
    s.require(validate(a.tables()).ok(), name + " fails validation");
    const FixedSet fix = fixed_points(a);
    s.require(fix.contains(a.unit()), name + ": unit not fixed");
    for (int b : fix.members) {
      s.require(twisted_action(a, a.unit(), b) == b, name + ": unit acts nontrivially");
      for (int x = 0; x < a.size(); ++x) {
        const int xb = twisted_action(a, x, b);
        s.require(fix.contains(xb), name + ": action leaves the fixed set");
        for (int y = 0; y < a.size(); ++y)
          s.require(twisted_action(a, a.mul(x, y), b) == twisted_action(a, x, twisted_action(a, y, b)),
                    name + ": action is not associative");
      }
    }
  }
  s.require(grothendieck_group(cyclic_group(4)) == AbelianGroup{0, {4}}, "K(C4) != Z/4");
  s.require(grothendieck_group(builtin_monoid("c2xc2")) == AbelianGroup{0, {2, 2}}, "K(C2xC2) != Z/2+Z/2");
  s.require(grothendieck_group(boolean_monoid()) == AbelianGroup{0, {}}, "K(boolean) != 0");
  return s;
}

SuiteOutcome twisted_suite() {
  SuiteOutcome s;
  for (const auto& name : builtin_names()) {
    auto bar = bar_sigma(shared(name), 4);
    s.require(verify_twisted_axioms(*bar, 4));
    s.require(verify_simplicial_identities(*bar, 4));
  }
  for (const auto& name : {"c2", "s3"}) s.require(verify_conjugate_law(*bar_sigma(shared(name), 3), 3));
  for (const auto& name : {"c2", "c4", "s3"}) s.require(verify_symmetric_closure(*bar_sigma(shared(name), 5), 5));
  auto sub = edgewise(bar_sigma(shared("c2"), 7), 3);
  s.require(verify_simplicial_identities(*sub, 3));
  s.require(verify_twisted_axioms(*sub, 3));
  return s;
}

SuiteOutcome eta_suite() {
  SuiteOutcome s;
  for (const auto& name : builtin_names()) {
    auto monoid = shared(name);
    s.require(verify_simplicial_map(eta(monoid, 4)));
    s.require(verify_simplicial_map(project_two_sided(monoid, 3)));
  }
  s.require(!verify_simplicial_map(corrupted_eta(shared("c2"), 2)).passed, "corrupted eta was not caught");
  return s;
}

SuiteOutcome homology_suite() {
  SuiteOutcome s;
  for (int m : {2, 3, 4}) {
    const auto h = homology_of(*bar_sigma(std::make_shared<const TwistedMonoid>(cyclic_group(m)), 4), 3);
    for (int d = 0; d <= 3; ++d)
      s.require(h.degrees[d] == oracle::cyclic_group_homology(m, d),
                "H_" + std::to_string(d) + "(B C_" + std::to_string(m) + ") disagrees with the cyclic oracle");
  }
  for (const auto& name : {"c2", "c4", "s3", "boolean"}) {
    auto monoid = shared(name);
    auto fixed = fixed_subcomplex(edgewise(bar_sigma(monoid, 7), 3));
    s.require(compare_homology(*fixed, *two_sided_bar(monoid, 3), 2));
  }
  for (const auto& name : {"c2", "c4", "s3"}) {
    auto monoid = shared(name);
    auto fixed = fixed_subcomplex(edgewise(bar_sigma(monoid, 5), 2));
    const auto h = homology_of(*fixed, 1);
    const auto expect = oracle::orbit_decomposition_homology(*monoid, 1);
    for (int d = 0; d <= 1; ++d) s.require(h.degrees[d] == expect[d], std::string("orbit oracle mismatch on ") + name);
  }
  for (const auto& name : {"boolean", "min3", "c2", "c3", "c4", "c2xc2"}) {
    auto monoid = shared(name);
    s.require(homology_of(*bar_sigma(monoid, 2), 1).degrees[1] == grothendieck_group(*monoid),
              std::string("H_1 != K(A) for ") + name);
  }
  auto circle = hand_built_twisted(simplicial_circle_tables(3));
  s.require(betti_numbers(*product(circle, circle), 2) == std::vector<int>{1, 2, 1}, "torus Betti numbers");
  return s;
}

SuiteOutcome deloop_suite() {
  SuiteOutcome s;
  for (const auto& name : {"c2", "c3"}) s.require(diagonal_compare(shared(name), 3));
  return s;
}

SuiteOutcome smith_suite(std::uint64_t seed) {
  SuiteOutcome s;
  std::mt19937_64 rng(seed);
  for (int sample = 0; sample < 100; ++sample) {
    const IntMatrix m = oracle::random_matrix(rng, 4, 4, -5, 5);
    s.require(smith_invariants(m) == oracle::invariants_by_minors(m), "SNF disagrees with minors on " + m.to_string());
  }
  return s;
}

}  // namespace

Report selftest(const SelftestOptions& options) {
  using clock = std::chrono::steady_clock;
  const std::vector<std::pair<std::string, std::function<SuiteOutcome()>>> suites = {
      {"ordinal", ordinal_suite},
      {"operad", operad_suite},
      {"monoid", monoid_suite},
      {"twisted-axioms", twisted_suite},
      {"eta", eta_suite},
      {"homology", homology_suite},
      {"deloop", deloop_suite},
      {"smith", [&] { return smith_suite(options.seed); }},
  };

  Report r;
  r.command = "selftest";
  r.inputs["seed"] = options.seed;
  r.inputs["verbose"] = options.verbose;
  auto table = ordered_json::array();
  bool all = true;
  for (const auto& [name, run] : suites) {
    const auto start = clock::now();
    SuiteOutcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    all = all && outcome.passed;
    ordered_json j;
    j["suite"] = name;
    j["passed"] = outcome.passed;
    j["detail"] = outcome.detail;
    // timings are nondeterministic; only reported on request
    if (options.verbose) j["seconds"] = seconds;
    table.push_back(std::move(j));

    std::ostringstream line;
    line << std::left << std::setw(16) << name << (outcome.passed ? "pass" : "FAIL");
    if (options.verbose) line << std::right << std::setw(10) << std::fixed << std::setprecision(3) << seconds << " s";
    if (!outcome.passed) line << "  " << outcome.detail;
    r.lines.push_back(line.str());
  }
  r.results["suites"] = std::move(table);
  r.status = all ? "pass" : "fail";
  return r;
}

}  // namespace twistbar::cli
