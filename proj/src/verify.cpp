#include <unordered_set>

#include "twistbar/errors.hpp"
#include "twistbar/simplicial.hpp"

namespace twistbar {

namespace {

std::string op_name(const char* op, int index, const Simplex& x) {
  return std::string(op) + "_" + std::to_string(index) + " on " + x.to_string();
}

}  // namespace

SimplicialMap eta(MonoidPtr monoid, int truncation) {
  auto fixed = fixed_subcomplex(edgewise(bar_sigma(monoid, 2 * truncation + 1), truncation));
  auto target = two_sided_bar(monoid, truncation);
  SimplicialMap f;
  f.name = "eta";
  f.source = std::move(fixed);
  f.target = std::move(target);
  f.claims_bijection = true;
  // keep a_1..a_n and the middle coordinate; the mirrored half is redundant
  f.apply = [](const Simplex& x) {
    const auto keep = static_cast<std::ptrdiff_t>(x.level) + 1;
    return Simplex{x.level, {x.data.begin(), x.data.begin() + keep}};
  };
  return f;
}

SimplicialMap corrupted_eta(MonoidPtr monoid, int truncation) {
  if (truncation < 1) throw DomainError("corrupted_eta needs truncation >= 1");
  SimplicialMap f = eta(monoid, truncation);
  const auto level1 = f.source->simplices(1);
  if (level1.size() < 2) throw DomainError("corrupted_eta needs at least two level-1 simplices");
  const Simplex first = level1[0];
  const Simplex second = level1[1];
  auto honest = f.apply;
  f.name = "eta (corrupted)";
  f.apply = [honest, first, second](const Simplex& x) {
    if (x == first) return honest(second);
    if (x == second) return honest(first);
    return honest(x);
  };
  return f;
}

SimplicialMap project_two_sided(MonoidPtr monoid, int truncation) {
  SimplicialMap f;
  f.name = "p";
  f.source = two_sided_bar(monoid, truncation);
  f.target = bar_sigma(monoid, truncation);
  f.claims_bijection = false;
  f.apply = [](const Simplex& x) {
    return Simplex{x.level, {x.data.begin(), x.data.end() - 1}};
  };
  return f;
}

Certificate verify_simplicial_map(const SimplicialMap& f) {
  Certificate cert;
  cert.name = "simplicial map " + f.name;
  const int top = std::min(f.source->truncation(), f.target->truncation());
  std::vector<Simplex> below;  // source level n-1
  for (int n = 0; n <= top; ++n) {
    const auto src = f.source->simplices(n);
    cert.level_sizes.push_back(src.size());
    std::unordered_set<Simplex, SimplexHash> target_level;
    for (auto& y : f.target->simplices(n)) target_level.insert(std::move(y));
    std::unordered_set<Simplex, SimplexHash> images;

    // images and faces out of level n
    for (const auto& x : src) {
      const Simplex fx = f.apply(x);
      ++cert.checks;
      if (fx.level != n || !target_level.contains(fx)) {
        cert.fail("image of " + x.to_string() + " is " + fx.to_string() + ", not a level-" + std::to_string(n) +
                  " simplex of the target");
        return cert;
      }
      if (f.claims_bijection && !images.insert(fx).second) {
        cert.fail("not injective at level " + std::to_string(n) + ": " + x.to_string() + " -> " + fx.to_string());
        return cert;
      }
      for (int i = 0; n >= 1 && i <= n; ++i) {
        ++cert.checks;
        if (f.apply(f.source->face(i, x)) != f.target->face(i, fx)) {
          cert.fail("does not commute with " + op_name("d", i, x));
          return cert;
        }
      }
    }
    if (f.claims_bijection && images.size() != target_level.size()) {
      cert.fail("not surjective at level " + std::to_string(n) + ": " + std::to_string(images.size()) + " of " +
                std::to_string(target_level.size()));
      return cert;
    }
    // degeneracies into level n
    for (const auto& y : below)
      for (int j = 0; j < n; ++j) {
        ++cert.checks;
        if (f.apply(f.source->degeneracy(j, y)) != f.target->degeneracy(j, f.apply(y))) {
          cert.fail("does not commute with " + op_name("s", j, y));
          return cert;
        }
      }
    below = src;
  }
  return cert;
}

Certificate verify_simplicial_identities(const SimplicialSet& s, int max_level) {
  Certificate cert;
  cert.name = "simplicial identities of " + s.kind();
  const int top = std::min(max_level, s.truncation());
  auto check = [&](bool ok, const std::string& what) {
    ++cert.checks;
    if (!ok) cert.fail(what);
    return ok;
  };
  for (int n = 0; n <= top && cert.passed; ++n) {
    const auto level = s.simplices(n);
    cert.level_sizes.push_back(level.size());
    for (const auto& x : level) {
      // d_i d_j = d_{j-1} d_i for i < j
      for (int j = 1; n >= 2 && j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (!check(s.face(i, s.face(j, x)) == s.face(j - 1, s.face(i, x)), "d_i d_j at " + x.to_string() +
                                                                                 " i=" + std::to_string(i) +
                                                                                 " j=" + std::to_string(j)))
            return cert;
      if (n < top) {
        for (int j = 0; j <= n; ++j) {
          const Simplex sx = s.degeneracy(j, x);
          for (int i = 0; i <= n + 1; ++i) {
            Simplex expect;
            if (i < j)
              expect = s.degeneracy(j - 1, s.face(i, x));
            else if (i == j || i == j + 1)
              expect = x;
            else
              expect = s.degeneracy(j, s.face(i - 1, x));
            if (!check(s.face(i, sx) == expect, "d_i s_j at " + x.to_string() + " i=" + std::to_string(i) +
                                                    " j=" + std::to_string(j)))
              return cert;
          }
        }
        // s_i s_j = s_{j+1} s_i for i <= j
        if (n + 2 <= top)
          for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
              if (!check(s.degeneracy(i, s.degeneracy(j, x)) == s.degeneracy(j + 1, s.degeneracy(i, x)),
                         "s_i s_j at " + x.to_string() + " i=" + std::to_string(i) + " j=" + std::to_string(j)))
                return cert;
      }
    }
  }
  return cert;
}

Certificate verify_twisted_axioms(const TwistedSimplicialSet& s, int max_level) {
  Certificate cert;
  cert.name = "twisted axioms of " + s.kind();
  const bool reversing = s.reverses_orientation();
  const int top = std::min(max_level, s.truncation());
  for (int n = 0; n <= top && cert.passed; ++n) {
    const auto level = s.simplices(n);
    cert.level_sizes.push_back(level.size());
    for (const auto& x : level) {
      const Simplex tx = s.involution(x);
      ++cert.checks;
      if (s.involution(tx) != x) {
        cert.fail("tau tau != id at " + x.to_string());
        return cert;
      }
      for (int i = 0; n >= 1 && i <= n; ++i) {
        ++cert.checks;
        if (s.involution(s.face(i, x)) != s.face(reversing ? n - i : i, tx)) {
          cert.fail(std::string(reversing ? "tau d_i != d_{n-i} tau: " : "tau d_i != d_i tau: ") + op_name("d", i, x));
          return cert;
        }
      }
      for (int j = 0; n < top && j <= n; ++j) {
        ++cert.checks;
        if (s.involution(s.degeneracy(j, x)) != s.degeneracy(reversing ? n - j : j, tx)) {
          cert.fail(std::string(reversing ? "tau s_i != s_{n-i} tau: " : "tau s_i != s_i tau: ") + op_name("s", j, x));
          return cert;
        }
      }
    }
  }
  return cert;
}

Certificate verify_conjugate_law(const TwistedSimplicialSet& s, int max_top) {
  Certificate cert;
  cert.name = "conjugate law of " + s.kind();
  const int top = std::min(max_top, s.truncation());
  for (int n = 0; n <= top && cert.passed; ++n) {
    const auto level = s.simplices(n);
    cert.level_sizes.push_back(level.size());
    for (int m = 0; m <= top && cert.passed; ++m)
      for (const auto& alpha : all_ordinal_maps(m, n)) {
        const OrdinalMap bar = s.reverses_orientation() ? alpha.conjugate() : alpha;
        for (const auto& x : level) {
          ++cert.checks;
          if (s.involution(s.act(bar, x)) != s.act(alpha, s.involution(x))) {
            cert.fail("conjugate law fails for " + alpha.to_string() + " at " + x.to_string());
            return cert;
          }
        }
      }
  }
  return cert;
}

Certificate verify_functoriality(const SimplicialSet& s, int max_top) {
  Certificate cert;
  cert.name = "functoriality of " + s.kind();
  const int top = std::min(max_top, s.truncation());
  for (int n = 0; n <= top; ++n) {
    const auto level = s.simplices(n);
    cert.level_sizes.push_back(level.size());
    for (int m = 0; m <= top; ++m)
      for (const auto& a : all_ordinal_maps(m, n))
        for (int l = 0; l <= top; ++l)
          for (const auto& b : all_ordinal_maps(l, m)) {
            const OrdinalMap ab = compose(a, b);
            for (const auto& x : level) {
              ++cert.checks;
              if (s.act(ab, x) != s.act(b, s.act(a, x))) {
                cert.fail("act(a o b) != act(b) act(a) for a=" + a.to_string() + " b=" + b.to_string() + " at " +
                          x.to_string());
                return cert;
              }
            }
          }
  }
  return cert;
}

Certificate verify_symmetric_closure(const TwistedSimplicialSet& s, int max_top) {
  Certificate cert;
  cert.name = "symmetric maps preserve fixed simplices of " + s.kind();
  const int top = std::min(max_top, s.truncation());
  for (int n = 1; n <= top; n += 2) {
    const auto fixed = s.fixed_simplices(n);
    cert.level_sizes.push_back(fixed.size());
    for (int m = 1; m <= top; m += 2)
      for (const auto& t : all_ordinal_maps(m, n)) {
        if (!is_symmetric(t)) continue;
        for (const auto& x : fixed) {
          ++cert.checks;
          const Simplex y = s.act(t, x);
          if (s.involution(y) != y) {
            cert.fail(t.to_string() + " sends fixed " + x.to_string() + " to non-fixed " + y.to_string());
            return cert;
          }
        }
      }
  }
  return cert;
}

}  // namespace twistbar
