#include "twistbar/simplicial.hpp"

#include <algorithm>
#include <sstream>

#include "twistbar/errors.hpp"

namespace twistbar {

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << "L" << level << "(";
  for (std::size_t i = 0; i < data.size(); ++i) os << (i ? "," : "") << data[i];
  os << ")";
  return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.level) * 0x9e3779b97f4a7c15ULL;
  for (int v : s.data) h = (h ^ static_cast<std::size_t>(v + 1)) * 0x100000001b3ULL;
  return h;
}

std::vector<std::vector<int>> all_words(int k, int n) {
  std::vector<std::vector<int>> out;
  if (n < 0 || (k <= 0 && n > 0)) return out;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(w);
    int p = n - 1;
    while (p >= 0 && w[p] == k - 1) w[p--] = 0;
    if (p < 0) break;
    ++w[p];
  }
  return out;
}

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// SimplicialSet

SimplicialSet::SimplicialSet(int truncation) : truncation_(truncation) {
  if (truncation < 0) throw DomainError("truncation must be >= 0");
}

void SimplicialSet::require_level(int n) const {
  if (n < 0 || n > truncation_)
    throw TruncationError(kind() + ": level " + std::to_string(n) + " outside truncation " +
                          std::to_string(truncation_));
}

void SimplicialSet::require_face(int i, const Simplex& x) const {
  require_level(x.level);
  if (x.level < 1 || i < 0 || i > x.level)
    throw DomainError(kind() + ": face d_" + std::to_string(i) + " undefined at level " + std::to_string(x.level));
}

void SimplicialSet::require_degeneracy(int j, const Simplex& x) const {
  require_level(x.level);
  require_level(x.level + 1);
  if (j < 0 || j > x.level)
    throw DomainError(kind() + ": degeneracy s_" + std::to_string(j) + " undefined at level " + std::to_string(x.level));
}

std::uint64_t SimplicialSet::level_size(int n) const { return simplices(n).size(); }

Simplex SimplicialSet::act(const OrdinalMap& alpha, const Simplex& x) const {
  if (alpha.codomain_top() != x.level)
    throw DimensionError(kind() + ": cannot act by " + alpha.to_string() + " on a level-" +
                         std::to_string(x.level) + " simplex");
  require_level(alpha.domain_top());
  Simplex y = x;
  for (const auto& op : factorize(alpha))
    y = op.kind == ElementaryOp::Kind::Coface ? face(op.index, y) : degeneracy(op.index, y);
  return y;
}

bool SimplicialSet::is_degenerate(const Simplex& x) const {
  if (x.level == 0) return false;
  for (int j = 0; j < x.level; ++j)
    if (degeneracy(j, face(j, x)) == x) return true;
  return false;
}

std::vector<Simplex> TwistedSimplicialSet::fixed_simplices(int n) const {
  std::vector<Simplex> out;
  for (auto& x : simplices(n))
    if (involution(x) == x) out.push_back(std::move(x));
  return out;
}

std::uint64_t TwistedSimplicialSet::fixed_count(int n) const { return fixed_simplices(n).size(); }

// ---------------------------------------------------------------------------
// Bar constructions

namespace {

// Bar face on the tuple part a_1..a_n of `data` (first n entries).
std::vector<int> bar_face(const TwistedMonoid& A, int i, const std::vector<int>& data, int n) {
  std::vector<int> out;
  out.reserve(data.size() - 1);
  if (i == 0) {
    out.assign(data.begin() + 1, data.end());
  } else if (i == n) {
    out.assign(data.begin(), data.begin() + n - 1);
    out.insert(out.end(), data.begin() + n, data.end());
  } else {
    out.assign(data.begin(), data.begin() + i - 1);
    out.push_back(A.mul(data[i - 1], data[i]));
    out.insert(out.end(), data.begin() + i + 1, data.end());
  }
  return out;
}

std::vector<int> bar_degeneracy(const TwistedMonoid& A, int j, const std::vector<int>& data) {
  std::vector<int> out;
  out.reserve(data.size() + 1);
  out.assign(data.begin(), data.begin() + j);
  out.push_back(A.unit());
  out.insert(out.end(), data.begin() + j, data.end());
  return out;
}

}  // namespace

BarSigma::BarSigma(MonoidPtr monoid, int truncation)
    : TwistedSimplicialSet(truncation), monoid_(std::move(monoid)), fixed_(fixed_points(*monoid_)) {}

std::vector<Simplex> BarSigma::simplices(int n) const {
  require_level(n);
  std::vector<Simplex> out;
  for (auto& w : all_words(monoid_->size(), n)) out.push_back({n, std::move(w)});
  return out;
}

std::uint64_t BarSigma::level_size(int n) const {
  require_level(n);
  return ipow(static_cast<std::uint64_t>(monoid_->size()), n);
}

Simplex BarSigma::face(int i, const Simplex& x) const {
  require_face(i, x);
  return {x.level - 1, bar_face(*monoid_, i, x.data, x.level)};
}

Simplex BarSigma::degeneracy(int j, const Simplex& x) const {
  require_degeneracy(j, x);
  return {x.level + 1, bar_degeneracy(*monoid_, j, x.data)};
}

Simplex BarSigma::involution(const Simplex& x) const {
  require_level(x.level);
  Simplex y{x.level, std::vector<int>(x.data.rbegin(), x.data.rend())};
  for (int& a : y.data) a = monoid_->tau(a);
  return y;
}

std::vector<Simplex> BarSigma::fixed_simplices(int n) const {
  require_level(n);
  const int half = n / 2;
  const bool odd = n % 2 == 1;
  std::vector<Simplex> out;
  for (const auto& w : all_words(monoid_->size(), half)) {
    auto mirror = [&](std::vector<int> d) {
      for (int k = half - 1; k >= 0; --k) d.push_back(monoid_->tau(w[k]));
      return d;
    };
    if (odd) {
      for (int b : fixed_.members) {
        std::vector<int> d = w;
        d.push_back(b);
        out.push_back({n, mirror(std::move(d))});
      }
    } else {
      out.push_back({n, mirror(w)});
    }
  }
  return out;
}

std::uint64_t BarSigma::fixed_count(int n) const {
  require_level(n);
  const auto k = static_cast<std::uint64_t>(monoid_->size());
  return n % 2 == 1 ? ipow(k, n / 2) * static_cast<std::uint64_t>(fixed_.size()) : ipow(k, n / 2);
}

std::shared_ptr<const BarSigma> bar_sigma(MonoidPtr monoid, int truncation) {
  if (truncation < 1) throw DomainError("bar_sigma needs truncation >= 1");
  return std::make_shared<const BarSigma>(std::move(monoid), truncation);
}

TwoSidedBar::TwoSidedBar(MonoidPtr monoid, int truncation)
    : SimplicialSet(truncation), monoid_(std::move(monoid)), fixed_(fixed_points(*monoid_)) {}

std::vector<Simplex> TwoSidedBar::simplices(int n) const {
  require_level(n);
  std::vector<Simplex> out;
  for (const auto& w : all_words(monoid_->size(), n))
    for (int m : fixed_.members) {
      std::vector<int> d = w;
      d.push_back(m);
      out.push_back({n, std::move(d)});
    }
  return out;
}

std::uint64_t TwoSidedBar::level_size(int n) const {
  require_level(n);
  return ipow(static_cast<std::uint64_t>(monoid_->size()), n) * static_cast<std::uint64_t>(fixed_.size());
}

Simplex TwoSidedBar::face(int i, const Simplex& x) const {
  require_face(i, x);
  const int n = x.level;
  if (i < n) return {n - 1, bar_face(*monoid_, i, x.data, n)};
  // last face: a_n acts on the fixed coordinate
  std::vector<int> d(x.data.begin(), x.data.begin() + n - 1);
  d.push_back(twisted_action(*monoid_, x.data[n - 1], x.data[n]));
  return {n - 1, std::move(d)};
}

Simplex TwoSidedBar::degeneracy(int j, const Simplex& x) const {
  require_degeneracy(j, x);
  return {x.level + 1, bar_degeneracy(*monoid_, j, x.data)};
}

std::shared_ptr<const TwoSidedBar> two_sided_bar(MonoidPtr monoid, int truncation) {
  return std::make_shared<const TwoSidedBar>(std::move(monoid), truncation);
}

// ---------------------------------------------------------------------------
// Edgewise subdivision and its fixed points

EdgewiseSubdivision::EdgewiseSubdivision(TwistedPtr source, int truncation)
    : TwistedSimplicialSet(truncation), source_(std::move(source)) {
  if (source_->truncation() < 2 * truncation + 1)
    throw TruncationError("edgewise subdivision to level " + std::to_string(truncation) +
                          " needs source truncation " + std::to_string(2 * truncation + 1) + ", have " +
                          std::to_string(source_->truncation()));
  if (!source_->reverses_orientation())
    throw DomainError("edgewise subdivision needs a twisted source, got " + source_->kind());
}

namespace {

Simplex relevel(Simplex x, int level) {
  x.level = level;
  return x;
}

}  // namespace

std::vector<Simplex> EdgewiseSubdivision::simplices(int n) const {
  require_level(n);
  auto out = source_->simplices(2 * n + 1);
  for (auto& x : out) x.level = n;
  return out;
}

std::uint64_t EdgewiseSubdivision::level_size(int n) const {
  require_level(n);
  return source_->level_size(2 * n + 1);
}

Simplex EdgewiseSubdivision::act(const OrdinalMap& alpha, const Simplex& x) const {
  if (alpha.codomain_top() != x.level)
    throw DimensionError("edgewise: cannot act by " + alpha.to_string() + " on level " + std::to_string(x.level));
  require_level(x.level);
  require_level(alpha.domain_top());
  Simplex y = source_->act(double_map(alpha), relevel(x, 2 * x.level + 1));
  return relevel(std::move(y), alpha.domain_top());
}

Simplex EdgewiseSubdivision::face(int i, const Simplex& x) const {
  require_face(i, x);
  return act(OrdinalMap::coface(x.level, i), x);
}

Simplex EdgewiseSubdivision::degeneracy(int j, const Simplex& x) const {
  require_degeneracy(j, x);
  return act(OrdinalMap::codegeneracy(x.level, j), x);
}

Simplex EdgewiseSubdivision::involution(const Simplex& x) const {
  require_level(x.level);
  return relevel(source_->involution(relevel(x, 2 * x.level + 1)), x.level);
}

std::vector<Simplex> EdgewiseSubdivision::fixed_simplices(int n) const {
  require_level(n);
  auto out = source_->fixed_simplices(2 * n + 1);
  for (auto& x : out) x.level = n;
  return out;
}

std::uint64_t EdgewiseSubdivision::fixed_count(int n) const {
  require_level(n);
  return source_->fixed_count(2 * n + 1);
}

std::shared_ptr<const EdgewiseSubdivision> edgewise(TwistedPtr source, int truncation) {
  return std::make_shared<const EdgewiseSubdivision>(std::move(source), truncation);
}

namespace {

class FixedSubcomplex final : public SimplicialSet {
 public:
  explicit FixedSubcomplex(std::shared_ptr<const EdgewiseSubdivision> source)
      : SimplicialSet(source->truncation()), source_(std::move(source)) {}

  std::string kind() const override { return "fixed(" + source_->kind() + ")"; }
  std::vector<Simplex> simplices(int n) const override { return source_->fixed_simplices(n); }
  std::uint64_t level_size(int n) const override { return source_->fixed_count(n); }

  Simplex face(int i, const Simplex& x) const override { return checked(source_->face(i, x)); }
  Simplex degeneracy(int j, const Simplex& x) const override { return checked(source_->degeneracy(j, x)); }
  Simplex act(const OrdinalMap& alpha, const Simplex& x) const override {
    return checked(source_->act(alpha, x));
  }

 private:
  Simplex checked(Simplex y) const {
    if (source_->involution(y) != y)
      throw InvariantFailure("operator left the fixed subcomplex at " + y.to_string());
    return y;
  }

  std::shared_ptr<const EdgewiseSubdivision> source_;
};

}  // namespace

SetPtr fixed_subcomplex(std::shared_ptr<const EdgewiseSubdivision> source) {
  return std::make_shared<const FixedSubcomplex>(std::move(source));
}

// ---------------------------------------------------------------------------
// Products

namespace {

class ProductSet final : public TwistedSimplicialSet {
 public:
  ProductSet(SetPtr s, SetPtr t) : TwistedSimplicialSet(s->truncation()), s_(std::move(s)), t_(std::move(t)) {
    if (s_->truncation() != t_->truncation())
      throw DimensionError("product needs equal truncations, got " + std::to_string(s_->truncation()) + " and " +
                           std::to_string(t_->truncation()));
    const auto* ts = dynamic_cast<const TwistedSimplicialSet*>(s_.get());
    const auto* tt = dynamic_cast<const TwistedSimplicialSet*>(t_.get());
    if (ts && tt && ts->reverses_orientation() != tt->reverses_orientation())
      throw DimensionError("product factors carry involutions of different kinds");
  }

  std::string kind() const override { return "product(" + s_->kind() + "," + t_->kind() + ")"; }

  std::vector<Simplex> simplices(int n) const override {
    require_level(n);
    const auto left = s_->simplices(n);
    const auto right = t_->simplices(n);
    std::vector<Simplex> out;
    out.reserve(left.size() * right.size());
    for (const auto& a : left)
      for (const auto& b : right) out.push_back(pack(a, b));
    return out;
  }

  std::uint64_t level_size(int n) const override { return s_->level_size(n) * t_->level_size(n); }

  Simplex face(int i, const Simplex& x) const override {
    require_face(i, x);
    auto [a, b] = unpack(x);
    return pack(s_->face(i, a), t_->face(i, b));
  }
  Simplex degeneracy(int j, const Simplex& x) const override {
    require_degeneracy(j, x);
    auto [a, b] = unpack(x);
    return pack(s_->degeneracy(j, a), t_->degeneracy(j, b));
  }
  Simplex act(const OrdinalMap& alpha, const Simplex& x) const override {
    auto [a, b] = unpack(x);
    return pack(s_->act(alpha, a), t_->act(alpha, b));
  }
  bool reverses_orientation() const override {
    const auto* ts = dynamic_cast<const TwistedSimplicialSet*>(s_.get());
    return !ts || ts->reverses_orientation();
  }
  Simplex involution(const Simplex& x) const override {
    const auto* ts = dynamic_cast<const TwistedSimplicialSet*>(s_.get());
    const auto* tt = dynamic_cast<const TwistedSimplicialSet*>(t_.get());
    if (!ts || !tt) throw DomainError("product of untwisted simplicial sets has no involution");
    auto [a, b] = unpack(x);
    return pack(ts->involution(a), tt->involution(b));
  }

  static Simplex pack(const Simplex& a, const Simplex& b) {
    Simplex out{a.level, {}};
    out.data.reserve(a.data.size() + b.data.size() + 1);
    out.data.push_back(static_cast<int>(a.data.size()));
    out.data.insert(out.data.end(), a.data.begin(), a.data.end());
    out.data.insert(out.data.end(), b.data.begin(), b.data.end());
    return out;
  }
  static std::pair<Simplex, Simplex> unpack(const Simplex& x) {
    if (x.data.empty()) throw DomainError("not a product simplex: " + x.to_string());
    const auto split = static_cast<std::size_t>(x.data[0]) + 1;
    return {Simplex{x.level, {x.data.begin() + 1, x.data.begin() + static_cast<std::ptrdiff_t>(split)}},
            Simplex{x.level, {x.data.begin() + static_cast<std::ptrdiff_t>(split), x.data.end()}}};
  }

 private:
  SetPtr s_;
  SetPtr t_;
};

}  // namespace

TwistedPtr product(TwistedPtr s, TwistedPtr t) { return std::make_shared<const ProductSet>(std::move(s), std::move(t)); }

SetPtr product(SetPtr s, SetPtr t) { return std::make_shared<const ProductSet>(std::move(s), std::move(t)); }

// ---------------------------------------------------------------------------
// Hand-built tables

namespace {

class HandBuiltSet final : public TwistedSimplicialSet {
 public:
  explicit HandBuiltSet(HandBuiltTables t)
      : TwistedSimplicialSet(static_cast<int>(t.sizes.size()) - 1), t_(std::move(t)) {
    const int top = truncation();
    if (static_cast<int>(t_.faces.size()) != top + 1 || static_cast<int>(t_.degeneracies.size()) != top + 1)
      throw ParseError("hand-built tables need face and degeneracy entries for every level");
    for (int n = 0; n <= top; ++n) {
      const auto expect_faces = n == 0 ? 0u : static_cast<std::size_t>(n) + 1;
      const auto expect_degens = n == top ? 0u : static_cast<std::size_t>(n) + 1;
      if (t_.faces[n].size() != expect_faces || t_.degeneracies[n].size() != expect_degens)
        throw ParseError("hand-built tables: wrong operator count at level " + std::to_string(n));
      for (const auto& f : t_.faces[n]) check_table(f, n, n - 1);
      for (const auto& s : t_.degeneracies[n]) check_table(s, n, n + 1);
    }
    if (!t_.involution.empty()) {
      if (static_cast<int>(t_.involution.size()) != top + 1) throw ParseError("hand-built involution needs every level");
      for (int n = 0; n <= top; ++n) check_table(t_.involution[n], n, n);
    }
  }

  bool twisted() const { return !t_.involution.empty(); }

  std::string kind() const override { return "hand_built"; }
  std::vector<Simplex> simplices(int n) const override {
    require_level(n);
    std::vector<Simplex> out;
    for (int x = 0; x < t_.sizes[n]; ++x) out.push_back({n, {x}});
    return out;
  }
  std::uint64_t level_size(int n) const override {
    require_level(n);
    return static_cast<std::uint64_t>(t_.sizes[n]);
  }
  Simplex face(int i, const Simplex& x) const override {
    require_face(i, x);
    return {x.level - 1, {t_.faces[x.level][i].at(id(x))}};
  }
  Simplex degeneracy(int j, const Simplex& x) const override {
    require_degeneracy(j, x);
    return {x.level + 1, {t_.degeneracies[x.level][j].at(id(x))}};
  }
  Simplex involution(const Simplex& x) const override {
    require_level(x.level);
    if (!twisted()) throw DomainError("hand-built simplicial set has no involution");
    return {x.level, {t_.involution[x.level].at(id(x))}};
  }

 private:
  static std::size_t id(const Simplex& x) {
    if (x.data.size() != 1) throw DomainError("not a hand-built simplex: " + x.to_string());
    return static_cast<std::size_t>(x.data[0]);
  }
  void check_table(const std::vector<int>& table, int from, int to) const {
    if (static_cast<int>(table.size()) != t_.sizes[from])
      throw ParseError("hand-built table at level " + std::to_string(from) + " has the wrong length");
    for (int v : table)
      if (v < 0 || v >= t_.sizes.at(to)) throw ParseError("hand-built table entry out of range");
  }

  HandBuiltTables t_;
};

}  // namespace

SetPtr hand_built(HandBuiltTables tables) { return std::make_shared<const HandBuiltSet>(std::move(tables)); }

TwistedPtr hand_built_twisted(HandBuiltTables tables) {
  auto s = std::make_shared<const HandBuiltSet>(std::move(tables));
  if (!s->twisted()) throw DomainError("hand-built tables carry no involution");
  return s;
}

HandBuiltTables simplicial_circle_tables(int truncation) {
  if (truncation < 1) throw DomainError("circle needs truncation >= 1");
  // id k >= 1 at level n: the map [n] -> [1] with exactly k zeros; id 0: constant maps
  auto id_of_zeros = [](int zeros, int n) { return (zeros == 0 || zeros == n + 1) ? 0 : zeros; };
  // precomposition f o alpha keeps the points of [m] landing on a zero of f
  auto act = [&](const OrdinalMap& alpha, int x) {
    if (x == 0) return 0;
    const int m = alpha.domain_top();
    int zeros = 0;
    for (int i = 0; i <= m; ++i)
      if (alpha(i) < x) ++zeros;
    return id_of_zeros(zeros, m);
  };

  HandBuiltTables t;
  for (int n = 0; n <= truncation; ++n) t.sizes.push_back(n + 1);
  t.faces.resize(static_cast<std::size_t>(truncation) + 1);
  t.degeneracies.resize(static_cast<std::size_t>(truncation) + 1);
  t.involution.resize(static_cast<std::size_t>(truncation) + 1);
  for (int n = 0; n <= truncation; ++n) {
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> f;
        for (int x = 0; x <= n; ++x) f.push_back(act(OrdinalMap::coface(n, i), x));
        t.faces[n].push_back(std::move(f));
      }
    if (n < truncation)
      for (int j = 0; j <= n; ++j) {
        std::vector<int> s;
        for (int x = 0; x <= n; ++x) s.push_back(act(OrdinalMap::codegeneracy(n, j), x));
        t.degeneracies[n].push_back(std::move(s));
      }
    // (tau f)(i) = 1 - f(n - i): k zeros become n + 1 - k zeros
    for (int x = 0; x <= n; ++x) t.involution[n].push_back(x == 0 ? 0 : n + 1 - x);
  }
  return t;
}

}  // namespace twistbar
