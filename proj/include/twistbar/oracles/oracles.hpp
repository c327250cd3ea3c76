#pragma once

// Independent closed-form and brute-force references. Linked by the test
// suites and `selftest` only; the library pipeline never consults them.

#include <cstdint>
#include <random>
#include <vector>

#include "twistbar/monoid.hpp"
#include "twistbar/operad.hpp"
#include "twistbar/smith.hpp"

namespace twistbar::oracle {

/// H_k(BC_m; Z): Z for k = 0, Z/m for odd k, 0 for even k > 0 (periodic resolution).
AbelianGroup cyclic_group_homology(int m, int degree);

/// H_k(BS_3; Z) for k <= 4: Z, Z/2, 0, Z/6, 0.
AbelianGroup symmetric_group_3_homology(int degree);

/// Homology of B(*, G, Fix) for a group G with tau = inversion, through max_degree,
/// as the direct sum over conjugation orbits of H(B centralizer). Supports
/// centralizers that are trivial, cyclic or isomorphic to S_3; throws
/// UnsupportedInput otherwise.
std::vector<AbelianGroup> orbit_decomposition_homology(const TwistedMonoid& group, int max_degree);

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors,
/// factor_k = d_k / d_{k-1}. Exponential; for small matrices only.
std::vector<mpz_class> invariants_by_minors(const IntMatrix& m);

/// Random rows x cols matrix with entries in [lo, hi].
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi);

/// Operad composition by block substitution: permute a word of distinct letters
/// block by block, move blocks to their slots, and read off where each letter went.
Permutation gamma_by_substitution(const Permutation& v, const std::vector<Permutation>& blocks);

}  // namespace twistbar::oracle
