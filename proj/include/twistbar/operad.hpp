#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twistbar {

class TwistedMonoid;

/// A bijection of {1,...,n} in one-line notation w(1),...,w(n).
///
/// One-indexed throughout so that the composition and involution formulas read
/// exactly as written on paper.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError if `image` is not a permutation of 1..n.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int degree);
  /// The order-reversing permutation a -> n+1-a.
  static Permutation reversal(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  /// w(a) for 1 <= a <= n.
  int operator()(int a) const { return image_.at(static_cast<std::size_t>(a) - 1); }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// All n! permutations of degree n in lexicographic order.
std::vector<Permutation> all_permutations(int degree);

/// Operad composition gamma(v; u_1, ..., u_t).
/// Block i is permuted internally by u_i and then placed at slot v(i).
/// Throws DimensionError when blocks.size() != v.degree().
Permutation gamma(const Permutation& v, std::span<const Permutation> blocks);

/// Left multiplication by the reversal: (tau w)(a) = n + 1 - w(a).
Permutation involute(const Permutation& w);

struct EquivarianceCounterexample {
  Permutation v;
  std::vector<Permutation> blocks;
  Permutation lhs;  // gamma(tau v; tau u_1, ..., tau u_t)
  Permutation rhs;  // tau gamma(v; u_1, ..., u_t)
};

struct OperadCertificate {
  std::string law;
  int max_arity = 0;
  int max_block_degree = 0;
  std::uint64_t cases = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

/// Exhaustive check that tau commutes with gamma, for every arity t <= max_arity
/// and every block degree in 0..max_block_degree.
OperadCertificate check_equivariance(int max_arity, int max_block_degree);

/// Exhaustive check of gamma(gamma(v; u); w) = gamma(v; gamma(u_i; w_i...)) and
/// the two unit laws within the same bounds.
OperadCertificate check_associativity(int max_arity, int max_block_degree);

/// Structure map of the algebra: the ordered product
/// elems[u^-1(1)] * ... * elems[u^-1(n)]; unit when n = 0.
int algebra_eval(const TwistedMonoid& monoid, const Permutation& u, std::span<const int> elems);

}  // namespace twistbar
