#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace twistbar {

/// An order-preserving map [m] -> [n] between finite ordinals {0,...,m}.
///
/// Stored as its explicit value sequence so that maps compare by value and
/// can be enumerated exhaustively.
class OrdinalMap {
 public:
  /// Throws DomainError unless `values` is weakly increasing within [0, n].
  OrdinalMap(int codomain_top, std::vector<int> values);

  static OrdinalMap identity(int top);
  /// Coface delta_i : [n-1] -> [n], the injection skipping i.
  static OrdinalMap coface(int n, int i);
  /// Codegeneracy sigma_j : [n+1] -> [n], the surjection hitting j twice.
  static OrdinalMap codegeneracy(int n, int j);

  int domain_top() const { return static_cast<int>(values_.size()) - 1; }
  int codomain_top() const { return codomain_top_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const;

  /// The conjugate map i -> n - a(m - i), i.e. the action of reversal on both ends.
  OrdinalMap conjugate() const;

  std::string to_string() const;

  friend bool operator==(const OrdinalMap&, const OrdinalMap&) = default;
  friend auto operator<=>(const OrdinalMap&, const OrdinalMap&) = default;

 private:
  int codomain_top_;
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const OrdinalMap& map);

/// outer o inner. Throws DimensionError if inner's codomain is not outer's domain.
OrdinalMap compose(const OrdinalMap& outer, const OrdinalMap& inner);

/// A generating coface or codegeneracy.
struct ElementaryOp {
  enum class Kind { Coface, Codegeneracy };
  Kind kind;
  int index;
  /// Top of the ordinal the operator maps *into*.
  int codomain_top;

  OrdinalMap as_map() const;
  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

/// Canonical epi-mono factorization.
///
/// The result [g_0, g_1, ..., g_r] satisfies alpha = g_0 o g_1 o ... o g_r.
/// Cofaces come first with strictly decreasing indices, followed by
/// codegeneracies with strictly increasing indices. Acting contravariantly on a
/// simplex therefore applies g_0 first: faces before degeneracies.
std::vector<ElementaryOp> factorize(const OrdinalMap& alpha);

/// Recompose a factorization (empty input needs the top to build an identity).
OrdinalMap recompose(const std::vector<ElementaryOp>& ops, int top_if_empty);

/// Doubling [m] -> [n]  to  [2m+1] -> [2n+1]:
/// t(i) = s(i) for i <= m and t(i) = 2n+1 - s(2m+1-i) for i > m.
OrdinalMap double_map(const OrdinalMap& s);

/// True iff both tops are odd and t(i) + t(M-i) = N for every i.
bool is_symmetric(const OrdinalMap& t);

/// Inverse of double_map on symmetric maps. Throws DomainError otherwise.
OrdinalMap restrict_half(const OrdinalMap& t);

/// The injection [2m-1] -> [2m+1] that omits i and 2m+1-i (0 <= i <= m, m >= 1).
OrdinalMap zero_elimination(int m, int i);

/// Every order-preserving map [m] -> [n], in lexicographic order of values.
std::vector<OrdinalMap> all_ordinal_maps(int m, int n);

}  // namespace twistbar
