#include "twistbar/homology.hpp"

#include <map>
#include <numeric>

#include "twistbar/errors.hpp"

namespace twistbar {

ChainComplex normalized_chains(const SimplicialSet& s, int top_degree) {
  if (top_degree < 0) throw DomainError("chain complex degree must be >= 0");
  if (top_degree > s.truncation())
    throw TruncationError(s.kind() + ": chains through degree " + std::to_string(top_degree) +
                          " exceed truncation " + std::to_string(s.truncation()));
  ChainComplex c;
  c.top_degree = top_degree;
  std::vector<std::map<Simplex, std::size_t>> index(static_cast<std::size_t>(top_degree) + 1);
  for (int k = 0; k <= top_degree; ++k) {
    std::vector<Simplex> b;
    for (auto& x : s.simplices(k))
      if (!s.is_degenerate(x)) b.push_back(std::move(x));
    for (std::size_t i = 0; i < b.size(); ++i) index[k].emplace(b[i], i);
    c.basis.push_back(std::move(b));
  }

  c.boundaries.emplace_back(0, c.basis[0].size());
  for (int k = 1; k <= top_degree; ++k) {
    IntMatrix d(c.basis[k - 1].size(), c.basis[k].size());
    for (std::size_t col = 0; col < c.basis[k].size(); ++col) {
      const Simplex& x = c.basis[k][col];
      for (int i = 0; i <= k; ++i) {
        auto it = index[k - 1].find(s.face(i, x));
        if (it == index[k - 1].end()) continue;  // degenerate face
        d(it->second, col) += (i % 2 == 0) ? 1 : -1;
      }
    }
    c.boundaries.push_back(std::move(d));
  }

  for (int k = 2; k <= top_degree; ++k)
    if (!(c.boundaries[k - 1] * c.boundaries[k]).is_zero())
      throw InvariantFailure(s.kind() + ": D_" + std::to_string(k - 1) + " D_" + std::to_string(k) + " != 0");
  return c;
}

HomologyGroups homology(const ChainComplex& chains) {
  const int top = chains.top_degree;
  for (int k = 2; k <= top; ++k)
    if (!(chains.boundaries[k - 1] * chains.boundaries[k]).is_zero())
      throw InvariantFailure("boundary of a boundary is nonzero in degree " + std::to_string(k));

  std::vector<std::vector<mpz_class>> invariants;
  invariants.reserve(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) invariants.push_back(smith_invariants(chains.boundaries[k]));

  HomologyGroups h;
  h.valid_through = top - 1;
  for (int k = 0; k + 1 <= top; ++k) {
    AbelianGroup g;
    const auto rank_out = static_cast<int>(invariants[k].size());
    const auto rank_in = static_cast<int>(invariants[k + 1].size());
    g.free_rank = static_cast<int>(chains.basis[k].size()) - rank_out - rank_in;
    for (const auto& d : invariants[k + 1])
      if (d > 1) g.torsion.push_back(to_int64(d));
    h.degrees.push_back(std::move(g));
  }
  return h;
}

HomologyGroups homology_of(const SimplicialSet& s, int max_degree) {
  return homology(normalized_chains(s, max_degree + 1));
}

std::vector<int> betti_numbers(const SimplicialSet& s, int max_degree) {
  std::vector<int> out;
  for (const auto& g : homology_of(s, max_degree).degrees) out.push_back(g.free_rank);
  return out;
}

int pi0(const SimplicialSet& s) {
  if (s.truncation() < 1) throw TruncationError("pi0 needs truncation >= 1");
  const auto vertices = s.simplices(0);
  std::map<Simplex, int> id;
  for (std::size_t i = 0; i < vertices.size(); ++i) id.emplace(vertices[i], static_cast<int>(i));
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = static_cast<int>(vertices.size());
  for (const auto& e : s.simplices(1)) {
    const int a = find(id.at(s.face(1, e)));
    const int b = find(id.at(s.face(0, e)));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

Certificate compare_homology(const SimplicialSet& s, const SimplicialSet& t, int through_degree) {
  Certificate cert;
  cert.name = "homology comparison through degree " + std::to_string(through_degree);
  const HomologyGroups hs = homology_of(s, through_degree);
  const HomologyGroups ht = homology_of(t, through_degree);
  for (int k = 0; k <= through_degree; ++k) {
    ++cert.checks;
    if (hs.degrees[k] != ht.degrees[k]) {
      cert.fail("H_" + std::to_string(k) + ": " + hs.degrees[k].to_string() + " vs " + ht.degrees[k].to_string());
      break;
    }
  }
  return cert;
}

}  // namespace twistbar
