#include "twistbar/oracles/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "twistbar/errors.hpp"

namespace twistbar::oracle {

AbelianGroup cyclic_group_homology(int m, int degree) {
  if (degree == 0) return {1, {}};
  if (degree % 2 == 1 && m > 1) return {0, {m}};
  return {0, {}};
}

AbelianGroup symmetric_group_3_homology(int degree) {
  switch (degree) {
    case 0: return {1, {}};
    case 1: return {0, {2}};
    case 2: return {0, {}};
    case 3: return {0, {6}};
    case 4: return {0, {}};
    default: throw UnsupportedInput("S_3 homology table stops at degree 4");
  }
}

namespace {

// Direct sum of finitely generated abelian groups, renormalized to invariant factors.
AbelianGroup direct_sum(const std::vector<AbelianGroup>& parts) {
  std::vector<mpz_class> factors;
  AbelianGroup out;
  for (const auto& p : parts) {
    out.free_rank += p.free_rank;
    for (auto d : p.torsion) factors.emplace_back(static_cast<long>(d));
  }
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      mpz_class g = gcd(factors[i], factors[j]);
      mpz_class l = lcm(factors[i], factors[j]);
      factors[i] = g;
      factors[j] = l;
    }
  for (const auto& f : factors)
    if (f > 1) out.torsion.push_back(f.get_si());
  return out;
}

AbelianGroup subgroup_homology(const TwistedMonoid& g, const std::vector<int>& sub, int degree) {
  const int order = static_cast<int>(sub.size());
  if (order == 1) return cyclic_group_homology(1, degree);
  // element order by repeated multiplication
  auto element_order = [&](int a) {
    int k = 1;
    for (int x = a; x != g.unit(); x = g.mul(x, a)) ++k;
    return k;
  };
  const bool cyclic = std::any_of(sub.begin(), sub.end(), [&](int a) { return element_order(a) == order; });
  if (cyclic) return cyclic_group_homology(order, degree);
  bool abelian = true;
  for (int a : sub)
    for (int b : sub) abelian = abelian && g.mul(a, b) == g.mul(b, a);
  if (order == 6 && !abelian) return symmetric_group_3_homology(degree);
  throw UnsupportedInput("orbit oracle: unsupported centralizer of order " + std::to_string(order));
}

}  // namespace

std::vector<AbelianGroup> orbit_decomposition_homology(const TwistedMonoid& group, int max_degree) {
  if (!group.is_group()) throw UnsupportedInput("orbit oracle needs a group");
  for (int a = 0; a < group.size(); ++a)
    if (group.mul(a, group.tau(a)) != group.unit()) throw UnsupportedInput("orbit oracle needs tau = inversion");

  const FixedSet fix = fixed_points(group);
  std::set<int> seen;
  std::vector<std::vector<int>> centralizers;
  for (int b : fix.members) {
    if (seen.contains(b)) continue;
    for (int a = 0; a < group.size(); ++a) seen.insert(group.mul(group.mul(a, b), group.tau(a)));
    std::vector<int> c;
    for (int a = 0; a < group.size(); ++a)
      if (group.mul(a, b) == group.mul(b, a)) c.push_back(a);
    centralizers.push_back(std::move(c));
  }

  std::vector<AbelianGroup> out;
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<AbelianGroup> parts;
    for (const auto& c : centralizers) parts.push_back(subgroup_homology(group, c, k));
    out.push_back(direct_sum(parts));
  }
  return out;
}

namespace {

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  // fraction-free (Bareiss) elimination
  const std::size_t n = m.size();
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n == 0 ? mpz_class(1) : sign * m[n - 1][n - 1];
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<mpz_class> invariants_by_minors(const IntMatrix& m) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= limit; ++k) {
    mpz_class g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
        g = gcd(g, determinant(std::move(sub)));
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

Permutation gamma_by_substitution(const Permutation& v, const std::vector<Permutation>& blocks) {
  // letters 1..s laid out block by block
  std::vector<std::vector<int>> words;
  int next = 1;
  for (const auto& u : blocks) {
    std::vector<int> w(static_cast<std::size_t>(u.degree()));
    // the letter at local position j moves to local position u(j)
    for (int j = 1; j <= u.degree(); ++j) w[u(j) - 1] = next + j - 1;
    next += u.degree();
    words.push_back(std::move(w));
  }
  // block i goes to slot v(i)
  std::vector<int> line;
  for (int slot = 1; slot <= v.degree(); ++slot)
    for (int i = 1; i <= v.degree(); ++i)
      if (v(i) == slot) line.insert(line.end(), words[i - 1].begin(), words[i - 1].end());
  std::vector<int> image(line.size());
  for (std::size_t pos = 0; pos < line.size(); ++pos) image[line[pos] - 1] = static_cast<int>(pos) + 1;
  return Permutation(std::move(image));
}

}  // namespace twistbar::oracle
