#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twistbar {

/// The raw tables of a candidate twisted monoid, indexed by dense element ids.
struct MonoidTables {
  std::vector<std::string> names;
  int unit = 0;
  std::vector<std::vector<int>> mult;  // mult[a][b] = a * b (row = left factor)
  std::vector<int> tau;
};

struct AxiomViolation {
  enum class Law { LeftUnit, RightUnit, Associativity, Involution, AntiHomomorphism, UnitFixed };
  Law law;
  std::vector<int> witness;  // the offending element ids, in the order the law quantifies them

  std::string describe(const std::vector<std::string>& names) const;
};

std::string law_name(AxiomViolation::Law law);

/// A finite monoid with an anti-involution: tau(tau a) = a and tau(ab) = tau(b) tau(a).
/// Only obtainable through validate() or the builders, so every instance is lawful.
class TwistedMonoid {
 public:
  int size() const { return static_cast<int>(tables_.names.size()); }
  int unit() const { return tables_.unit; }
  int mul(int a, int b) const { return tables_.mult[a][b]; }
  int tau(int a) const { return tables_.tau[a]; }
  const std::string& name(int a) const { return tables_.names.at(a); }
  const std::vector<std::string>& names() const { return tables_.names; }
  const MonoidTables& tables() const { return tables_; }

  /// Element id for a display name; throws DomainError if unknown.
  int id_of(const std::string& name) const;

  bool is_commutative() const;
  bool is_group() const;

  /// Product of a word, unit for the empty word.
  int product(const std::vector<int>& word) const;

 private:
  friend struct ValidationResult validate(MonoidTables tables);
  explicit TwistedMonoid(MonoidTables t) : tables_(std::move(t)) {}
  MonoidTables tables_;
};

struct ValidationResult {
  std::optional<TwistedMonoid> monoid;
  std::vector<AxiomViolation> violations;

  bool ok() const { return monoid.has_value(); }
};

/// Checks every axiom instance. Throws ParseError on malformed tables
/// (wrong shape, ids out of range); axiom failures are reported, not thrown.
ValidationResult validate(MonoidTables tables);

/// validate() that throws DomainError listing the first violations.
TwistedMonoid make_monoid(MonoidTables tables);

// Built-in corpus. Groups carry tau = inversion unless a tau table is given;
// commutative monoids carry tau = identity.
TwistedMonoid cyclic_group(int k, std::optional<std::vector<int>> tau = std::nullopt);
TwistedMonoid symmetric_group_3(std::optional<std::vector<int>> tau = std::nullopt);
TwistedMonoid boolean_monoid();
TwistedMonoid min_monoid(int k);
/// Direct product with componentwise multiplication and tau; element (a,b) has id a*|B| + b.
TwistedMonoid product_monoid(const TwistedMonoid& a, const TwistedMonoid& b);

/// Builtins addressable by name: c2, c3, c4, c2xc2, s3, boolean, min3.
std::vector<std::string> builtin_names();
/// Throws DomainError for unknown names.
TwistedMonoid builtin_monoid(const std::string& name);

/// The elements with tau(a) = a, sorted. Always contains the unit.
struct FixedSet {
  std::vector<int> members;

  bool contains(int a) const;
  int size() const { return static_cast<int>(members.size()); }
  /// Position of a member in `members`; throws DomainError if not a member.
  int index_of(int a) const;
};

FixedSet fixed_points(const TwistedMonoid& monoid);

/// b -> a b tau(a). Throws DomainError unless b is fixed.
int twisted_action(const TwistedMonoid& monoid, int a, int b);

/// Finitely generated abelian group: Z^free_rank + sum Z/torsion[i], torsion in divisibility order.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Group completion of a commutative monoid, as the cokernel of the relations
/// e_a + e_b - e_{ab}. Throws UnsupportedInput for non-commutative input.
AbelianGroup grothendieck_group(const TwistedMonoid& monoid);

}  // namespace twistbar
