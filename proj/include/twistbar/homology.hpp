#pragma once

#include <vector>

#include "twistbar/certificate.hpp"
#include "twistbar/monoid.hpp"
#include "twistbar/simplicial.hpp"
#include "twistbar/smith.hpp"

namespace twistbar {

/// Normalized chains: nondegenerate simplices of levels 0..top_degree, with
/// boundaries[k] the matrix of the alternating face sum from degree k to k-1
/// (boundaries[0] is the empty map to degree -1).
struct ChainComplex {
  int top_degree = 0;
  std::vector<std::vector<Simplex>> basis;
  std::vector<IntMatrix> boundaries;  // rows: basis[k-1], cols: basis[k]
};

/// Throws TruncationError if top_degree exceeds the truncation, and
/// InvariantFailure if some D_{k-1} D_k is nonzero.
ChainComplex normalized_chains(const SimplicialSet& s, int top_degree);

/// Degrees 0..valid_through, where valid_through = top_degree - 1 of the chains.
struct HomologyGroups {
  int valid_through = -1;
  std::vector<AbelianGroup> degrees;

  friend bool operator==(const HomologyGroups&, const HomologyGroups&) = default;
};

HomologyGroups homology(const ChainComplex& chains);

/// Integral homology through max_degree (needs truncation >= max_degree + 1).
HomologyGroups homology_of(const SimplicialSet& s, int max_degree);

/// Rational Betti numbers through max_degree.
std::vector<int> betti_numbers(const SimplicialSet& s, int max_degree);

/// Components of the graph on level 0 with an edge d_1 x -- d_0 x per level-1 simplex.
int pi0(const SimplicialSet& s);

/// Passes iff free ranks and torsion agree in every degree <= through_degree.
Certificate compare_homology(const SimplicialSet& s, const SimplicialSet& t, int through_degree);

}  // namespace twistbar
