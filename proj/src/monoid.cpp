#include "twistbar/monoid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "twistbar/errors.hpp"
#include "twistbar/smith.hpp"

namespace twistbar {

std::string law_name(AxiomViolation::Law law) {
  switch (law) {
    case AxiomViolation::Law::LeftUnit: return "left unit";
    case AxiomViolation::Law::RightUnit: return "right unit";
    case AxiomViolation::Law::Associativity: return "associativity";
    case AxiomViolation::Law::Involution: return "involution";
    case AxiomViolation::Law::AntiHomomorphism: return "anti-homomorphism";
    case AxiomViolation::Law::UnitFixed: return "tau(unit) = unit";
  }
  return "unknown";
}

std::string AxiomViolation::describe(const std::vector<std::string>& names) const {
  std::string s = law_name(law) + " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) s += (i ? ", " : "") + names.at(witness[i]);
  return s + ")";
}

int TwistedMonoid::id_of(const std::string& name) const {
  auto it = std::find(tables_.names.begin(), tables_.names.end(), name);
  if (it == tables_.names.end()) throw DomainError("unknown element '" + name + "'");
  return static_cast<int>(it - tables_.names.begin());
}

bool TwistedMonoid::is_commutative() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool TwistedMonoid::is_group() const {
  for (int a = 0; a < size(); ++a) {
    bool has_inverse = false;
    for (int b = 0; b < size() && !has_inverse; ++b) has_inverse = mul(a, b) == unit() && mul(b, a) == unit();
    if (!has_inverse) return false;
  }
  return true;
}

int TwistedMonoid::product(const std::vector<int>& word) const {
  int acc = unit();
  for (int x : word) acc = mul(acc, x);
  return acc;
}

ValidationResult validate(MonoidTables tables) {
  const int k = static_cast<int>(tables.names.size());
  if (k == 0) throw ParseError("monoid has no elements");
  {
    std::vector<std::string> sorted = tables.names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("duplicate element names");
  }
  auto in_range = [k](int x) { return x >= 0 && x < k; };
  if (!in_range(tables.unit)) throw ParseError("unit id out of range");
  if (static_cast<int>(tables.mult.size()) != k) throw ParseError("multiplication table must have one row per element");
  for (const auto& row : tables.mult) {
    if (static_cast<int>(row.size()) != k) throw ParseError("multiplication table is not square");
    if (!std::all_of(row.begin(), row.end(), in_range)) throw ParseError("multiplication table entry out of range");
  }
  if (static_cast<int>(tables.tau.size()) != k) throw ParseError("tau table must have one entry per element");
  if (!std::all_of(tables.tau.begin(), tables.tau.end(), in_range)) throw ParseError("tau entry out of range");

  using Law = AxiomViolation::Law;
  ValidationResult result;
  auto& v = result.violations;
  const auto& m = tables.mult;
  const auto& tau = tables.tau;
  const int e = tables.unit;
  for (int a = 0; a < k; ++a) {
    if (m[e][a] != a) v.push_back({Law::LeftUnit, {a}});
    if (m[a][e] != a) v.push_back({Law::RightUnit, {a}});
    if (tau[tau[a]] != a) v.push_back({Law::Involution, {a}});
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (m[m[a][b]][c] != m[a][m[b][c]]) v.push_back({Law::Associativity, {a, b, c}});
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (tau[m[a][b]] != m[tau[b]][tau[a]]) v.push_back({Law::AntiHomomorphism, {a, b}});
  if (tau[e] != e) v.push_back({Law::UnitFixed, {e}});

  if (v.empty()) result.monoid = TwistedMonoid(std::move(tables));
  return result;
}

TwistedMonoid make_monoid(MonoidTables tables) {
  auto names = tables.names;
  auto result = validate(std::move(tables));
  if (!result.ok()) {
    std::string msg = "not a twisted monoid:";
    for (std::size_t i = 0; i < result.violations.size() && i < 5; ++i)
      msg += " " + result.violations[i].describe(names) + ";";
    throw DomainError(msg);
  }
  return std::move(*result.monoid);
}

namespace {

std::vector<int> inversion_table(const std::vector<std::vector<int>>& mult, int unit) {
  const int k = static_cast<int>(mult.size());
  std::vector<int> inv(static_cast<std::size_t>(k), -1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (mult[a][b] == unit && mult[b][a] == unit) inv[a] = b;
  return inv;
}

}  // namespace

TwistedMonoid cyclic_group(int k, std::optional<std::vector<int>> tau) {
  if (k < 1) throw DomainError("cyclic_group needs k >= 1");
  MonoidTables t;
  for (int a = 0; a < k; ++a) t.names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
  t.unit = 0;
  t.mult.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t.mult[a][b] = (a + b) % k;
  t.tau = tau ? *tau : inversion_table(t.mult, 0);
  return make_monoid(std::move(t));
}

TwistedMonoid symmetric_group_3(std::optional<std::vector<int>> tau) {
  // one-line images on {1,2,3}
  const std::array<std::array<int, 3>, 6> perms{{{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}}};
  MonoidTables t;
  t.names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  t.unit = 0;
  t.mult.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      // (ab)(i) = a(b(i))
      std::array<int, 3> ab{};
      for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i] - 1];
      t.mult[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  t.tau = tau ? *tau : inversion_table(t.mult, 0);
  return make_monoid(std::move(t));
}

TwistedMonoid boolean_monoid() {
  MonoidTables t;
  t.names = {"e", "x"};
  t.unit = 0;
  t.mult = {{0, 1}, {1, 1}};
  t.tau = {0, 1};
  return make_monoid(std::move(t));
}

TwistedMonoid min_monoid(int k) {
  if (k < 1) throw DomainError("min_monoid needs k >= 1");
  MonoidTables t;
  for (int a = 0; a < k; ++a) t.names.push_back(std::to_string(a));
  t.unit = k - 1;
  t.mult.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t.mult[a][b] = std::min(a, b);
  t.tau.resize(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) t.tau[a] = a;
  return make_monoid(std::move(t));
}

TwistedMonoid product_monoid(const TwistedMonoid& a, const TwistedMonoid& b) {
  const int ka = a.size(), kb = b.size();
  MonoidTables t;
  for (int x = 0; x < ka; ++x)
    for (int y = 0; y < kb; ++y) t.names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
  auto id = [kb](int x, int y) { return x * kb + y; };
  t.unit = id(a.unit(), b.unit());
  const int k = ka * kb;
  t.mult.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  t.tau.resize(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) {
    t.tau[p] = id(a.tau(p / kb), b.tau(p % kb));
    for (int q = 0; q < k; ++q) t.mult[p][q] = id(a.mul(p / kb, q / kb), b.mul(p % kb, q % kb));
  }
  return make_monoid(std::move(t));
}

std::vector<std::string> builtin_names() { return {"c2", "c3", "c4", "c2xc2", "s3", "boolean", "min3"}; }

TwistedMonoid builtin_monoid(const std::string& name) {
  if (name == "c2") return cyclic_group(2);
  if (name == "c3") return cyclic_group(3);
  if (name == "c4") return cyclic_group(4);
  if (name == "c2xc2") return product_monoid(cyclic_group(2), cyclic_group(2));
  if (name == "s3") return symmetric_group_3();
  if (name == "boolean") return boolean_monoid();
  if (name == "min3") return min_monoid(3);
  throw DomainError("unknown builtin monoid '" + name + "'");
}

bool FixedSet::contains(int a) const { return std::binary_search(members.begin(), members.end(), a); }

int FixedSet::index_of(int a) const {
  auto it = std::lower_bound(members.begin(), members.end(), a);
  if (it == members.end() || *it != a) throw DomainError("element is not tau-fixed");
  return static_cast<int>(it - members.begin());
}

FixedSet fixed_points(const TwistedMonoid& monoid) {
  FixedSet fs;
  for (int a = 0; a < monoid.size(); ++a)
    if (monoid.tau(a) == a) fs.members.push_back(a);
  return fs;
}

int twisted_action(const TwistedMonoid& monoid, int a, int b) {
  if (a < 0 || a >= monoid.size() || b < 0 || b >= monoid.size())
    throw DomainError("twisted_action: element id out of range");
  if (monoid.tau(b) != b) throw DomainError("twisted_action: '" + monoid.name(b) + "' is not tau-fixed");
  return monoid.mul(monoid.mul(a, b), monoid.tau(a));
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (auto d : torsion) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

AbelianGroup grothendieck_group(const TwistedMonoid& monoid) {
  if (!monoid.is_commutative())
    throw UnsupportedInput("grothendieck_group needs a commutative monoid");
  const auto k = static_cast<std::size_t>(monoid.size());
  // one relation row per ordered pair: e_a + e_b - e_{ab}
  IntMatrix rel(k * k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t r = a * k + b;
      rel(r, a) += 1;
      rel(r, b) += 1;
      rel(r, static_cast<std::size_t>(monoid.mul(static_cast<int>(a), static_cast<int>(b)))) -= 1;
    }
  const auto inv = smith_invariants(std::move(rel));
  AbelianGroup g;
  g.free_rank = static_cast<int>(k) - static_cast<int>(inv.size());
  for (const auto& d : inv)
    if (d > 1) g.torsion.push_back(to_int64(d));
  return g;
}

}  // namespace twistbar
