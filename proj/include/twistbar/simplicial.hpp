#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "twistbar/certificate.hpp"
#include "twistbar/monoid.hpp"
#include "twistbar/ordinal.hpp"

namespace twistbar {

class BarSigma;
class TwoSidedBar;
class EdgewiseSubdivision;

/// A simplex of some level, with a payload whose shape depends on the complex:
/// (a_1..a_n) for bar constructions, (a_1..a_n, m) for the two-sided bar,
/// [len(s), s..., t...] for products, {id} for hand-built tables, and the
/// row-major n x n matrix for bisimplicial diagonals.
struct Simplex {
  int level = 0;
  std::vector<int> data;

  std::string to_string() const;
  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// A simplicial set truncated at a top level N: levels 0..N, faces out of
/// levels 1..N and degeneracies into levels 1..N. Immutable.
class SimplicialSet {
 public:
  virtual ~SimplicialSet() = default;

  int truncation() const { return truncation_; }
  virtual std::string kind() const = 0;

  /// Every simplex of level n, in a deterministic order.
  virtual std::vector<Simplex> simplices(int n) const = 0;
  /// Cardinality of level n without enumerating it where possible.
  virtual std::uint64_t level_size(int n) const;

  virtual Simplex face(int i, const Simplex& x) const = 0;
  virtual Simplex degeneracy(int j, const Simplex& x) const = 0;

  /// alpha^*(x) for alpha : [m] -> [x.level]; defaults to the factorization of
  /// alpha into elementary operators.
  virtual Simplex act(const OrdinalMap& alpha, const Simplex& x) const;

  /// x lies in the image of some s_j. Uses x = s_j d_j x, which holds exactly
  /// for degenerate simplices.
  bool is_degenerate(const Simplex& x) const;

 protected:
  explicit SimplicialSet(int truncation);
  void require_level(int n) const;
  void require_face(int i, const Simplex& x) const;
  void require_degeneracy(int j, const Simplex& x) const;

 private:
  int truncation_;
};

/// A simplicial set with levelwise involution satisfying tau d_i = d_{n-i} tau
/// and tau s_i = s_{n-i} tau.
///
/// Edgewise subdivisions also carry their involution through this interface,
/// but there tau commutes with every operator (reverses_orientation() is
/// false): the doubled operators are self-conjugate.
class TwistedSimplicialSet : public SimplicialSet {
 public:
  virtual Simplex involution(const Simplex& x) const = 0;
  virtual bool reverses_orientation() const { return true; }
  /// The simplices of level n with tau x = x; defaults to filtering simplices(n).
  virtual std::vector<Simplex> fixed_simplices(int n) const;
  virtual std::uint64_t fixed_count(int n) const;

 protected:
  using SimplicialSet::SimplicialSet;
};

using SetPtr = std::shared_ptr<const SimplicialSet>;
using TwistedPtr = std::shared_ptr<const TwistedSimplicialSet>;
using MonoidPtr = std::shared_ptr<const TwistedMonoid>;

// ---------------------------------------------------------------------------
// Constructions

/// Twisted bar construction: level n = A^n, tau reverses and applies tau.
std::shared_ptr<const BarSigma> bar_sigma(MonoidPtr monoid, int truncation);

/// Two-sided bar B(*, A, Fix): level n = A^n x Fix, last face through b -> a b tau(a).
std::shared_ptr<const TwoSidedBar> two_sided_bar(MonoidPtr monoid, int truncation);

/// Edgewise subdivision: level q is level 2q+1 of the source, alpha acts by double(alpha).
/// Throws TruncationError if the source is truncated below 2N+1 and DomainError
/// if the source involution does not reverse orientation.
std::shared_ptr<const EdgewiseSubdivision> edgewise(TwistedPtr source, int truncation);

/// Levelwise tau-fixed simplices of an edgewise subdivision.
SetPtr fixed_subcomplex(std::shared_ptr<const EdgewiseSubdivision> source);

/// Levelwise product with diagonal operators (and diagonal tau).
/// Throws DimensionError if the truncations differ, or if the factors' involutions
/// are of different kinds.
TwistedPtr product(TwistedPtr s, TwistedPtr t);
SetPtr product(SetPtr s, SetPtr t);

/// Explicit operator tables; simplices of level n are {0..sizes[n]-1}.
struct HandBuiltTables {
  std::vector<int> sizes;                                   // levels 0..N
  std::vector<std::vector<std::vector<int>>> faces;         // faces[n][i][x], n >= 1 (faces[0] empty)
  std::vector<std::vector<std::vector<int>>> degeneracies;  // degeneracies[n][j][x], n < N
  std::vector<std::vector<int>> involution;                 // optional: involution[n][x]
};
SetPtr hand_built(HandBuiltTables tables);
/// Throws DomainError if the tables carry no involution.
TwistedPtr hand_built_twisted(HandBuiltTables tables);

/// Tables of the simplicial circle Delta[1]/boundary through level N. Level n
/// has the base point (id 0) and the maps [n] -> [1] with k zeros, 1 <= k <= n
/// (id k). The involution is induced by reversing both ordinals.
HandBuiltTables simplicial_circle_tables(int truncation);

/// The bisimplicial bar diagonal (A^n)^n of a commutative twisted monoid.
/// Rows carry the outer simplicial direction and columns the inner one; the
/// twisted direction is `twisted_outer ? rows : columns`.
class BisimplicialDiagonal final : public SimplicialSet {
 public:
  BisimplicialDiagonal(MonoidPtr monoid, bool twisted_outer, int truncation);

  std::string kind() const override;
  std::vector<Simplex> simplices(int n) const override;
  std::uint64_t level_size(int n) const override;
  /// Diagonal face: horizontal then vertical d_i.
  Simplex face(int i, const Simplex& x) const override;
  Simplex degeneracy(int j, const Simplex& x) const override;

  /// Same operators composed in the opposite order (vertical first).
  Simplex face_other_order(int i, const Simplex& x) const;
  Simplex degeneracy_other_order(int j, const Simplex& x) const;
  /// tau: reverses the twisted direction and applies tau entrywise.
  Simplex involution(const Simplex& x) const;
  bool twisted_outer() const { return twisted_outer_; }

 private:
  // data is row-major, rows x cols
  std::vector<int> row_face(int i, const std::vector<int>& m, int rows, int cols) const;
  std::vector<int> col_face(int i, const std::vector<int>& m, int rows, int cols) const;
  std::vector<int> row_degeneracy(int j, const std::vector<int>& m, int rows, int cols) const;
  std::vector<int> col_degeneracy(int j, const std::vector<int>& m, int rows, int cols) const;

  MonoidPtr monoid_;
  bool twisted_outer_;
};

class BarSigma final : public TwistedSimplicialSet {
 public:
  BarSigma(MonoidPtr monoid, int truncation);

  std::string kind() const override { return "bar_sigma"; }
  std::vector<Simplex> simplices(int n) const override;
  std::uint64_t level_size(int n) const override;
  Simplex face(int i, const Simplex& x) const override;
  Simplex degeneracy(int j, const Simplex& x) const override;
  Simplex involution(const Simplex& x) const override;
  /// Generated directly: (a_1..a_q, b, tau a_q..tau a_1) with b fixed for n = 2q+1,
  /// (a_1..a_q, tau a_q..tau a_1) for n = 2q.
  std::vector<Simplex> fixed_simplices(int n) const override;
  std::uint64_t fixed_count(int n) const override;

  const TwistedMonoid& monoid() const { return *monoid_; }
  const MonoidPtr& monoid_ptr() const { return monoid_; }

 private:
  MonoidPtr monoid_;
  FixedSet fixed_;
};

class TwoSidedBar final : public SimplicialSet {
 public:
  TwoSidedBar(MonoidPtr monoid, int truncation);

  std::string kind() const override { return "two_sided_bar"; }
  std::vector<Simplex> simplices(int n) const override;
  std::uint64_t level_size(int n) const override;
  Simplex face(int i, const Simplex& x) const override;
  Simplex degeneracy(int j, const Simplex& x) const override;

  const TwistedMonoid& monoid() const { return *monoid_; }
  const FixedSet& fixed() const { return fixed_; }

 private:
  MonoidPtr monoid_;
  FixedSet fixed_;
};

class EdgewiseSubdivision final : public TwistedSimplicialSet {
 public:
  EdgewiseSubdivision(TwistedPtr source, int truncation);

  std::string kind() const override { return "edgewise(" + source_->kind() + ")"; }
  std::vector<Simplex> simplices(int n) const override;
  std::uint64_t level_size(int n) const override;
  Simplex face(int i, const Simplex& x) const override;
  Simplex degeneracy(int j, const Simplex& x) const override;
  Simplex act(const OrdinalMap& alpha, const Simplex& x) const override;
  Simplex involution(const Simplex& x) const override;
  bool reverses_orientation() const override { return false; }
  std::vector<Simplex> fixed_simplices(int n) const override;
  std::uint64_t fixed_count(int n) const override;

  const TwistedSimplicialSet& source() const { return *source_; }

 private:
  TwistedPtr source_;
};

// ---------------------------------------------------------------------------
// Maps and verification

/// A levelwise map between truncated simplicial sets.
struct SimplicialMap {
  std::string name;
  SetPtr source;
  SetPtr target;
  std::function<Simplex(const Simplex&)> apply;
  bool claims_bijection = false;
};

/// (a_1..a_n, b, tau a_n..tau a_1) -> (a_1..a_n, b), from
/// fixed_subcomplex(edgewise(bar_sigma(A, 2N+1))) to two_sided_bar(A, N).
SimplicialMap eta(MonoidPtr monoid, int truncation);
/// eta with the images of the first two level-1 simplices swapped; a negative control.
SimplicialMap corrupted_eta(MonoidPtr monoid, int truncation);
/// (a_1..a_n, m) -> (a_1..a_n), from two_sided_bar(A, N) onto bar_sigma(A, N).
SimplicialMap project_two_sided(MonoidPtr monoid, int truncation);

/// Levelwise bijectivity (if claimed) and commutation with every d_i and s_j
/// through the common truncation.
Certificate verify_simplicial_map(const SimplicialMap& f);

/// All simplicial identities among d_i and s_j through max_level.
Certificate verify_simplicial_identities(const SimplicialSet& s, int max_level);

/// tau tau = id, tau d_i = d_{n-i} tau, tau s_i = s_{n-i} tau through max_level.
/// For sets whose involution does not reverse orientation the expected laws are
/// tau d_i = d_i tau and tau s_i = s_i tau.
Certificate verify_twisted_axioms(const TwistedSimplicialSet& s, int max_level);

/// tau_m(act(conj(alpha), x)) = act(alpha, tau_n(x)) for every alpha:[m]->[n], m, n <= max_top
/// (alpha in place of conj(alpha) when the involution does not reverse orientation).
Certificate verify_conjugate_law(const TwistedSimplicialSet& s, int max_top);

/// act(a o b, x) = act(b, act(a, x)) for all composable a, b with tops <= max_top.
Certificate verify_functoriality(const SimplicialSet& s, int max_top);

/// Every symmetric map with tops <= max_top sends fixed simplices to fixed simplices.
Certificate verify_symmetric_closure(const TwistedSimplicialSet& s, int max_top);

/// Transposes B_p(B^sigma_q A) onto B^sigma_p(B_q A) levelwise. Certifies the
/// two diagonals have the same simplices, that transposition commutes with every
/// d_i, s_j and tau, and that horizontal/vertical operators commute.
/// Throws UnsupportedInput for non-commutative A.
Certificate diagonal_compare(MonoidPtr monoid, int truncation);

/// All words of length n over {0..k-1}, lexicographic.
std::vector<std::vector<int>> all_words(int k, int n);

}  // namespace twistbar
