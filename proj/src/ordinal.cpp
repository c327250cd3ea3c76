#include "twistbar/ordinal.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "twistbar/errors.hpp"

namespace twistbar {

OrdinalMap::OrdinalMap(int codomain_top, std::vector<int> values)
    : codomain_top_(codomain_top), values_(std::move(values)) {
  if (codomain_top_ < 0 || values_.empty())
    throw DomainError("ordinal map needs non-empty domain and codomain");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > codomain_top_)
      throw DomainError("ordinal map value out of range: " + to_string());
    if (i > 0 && values_[i - 1] > values_[i])
      throw DomainError("ordinal map is not order-preserving: " + to_string());
  }
}

OrdinalMap OrdinalMap::identity(int top) {
  std::vector<int> v(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) v[i] = i;
  return OrdinalMap(top, std::move(v));
}

OrdinalMap OrdinalMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw DomainError("coface index out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v.push_back(k < i ? k : k + 1);
  return OrdinalMap(n, std::move(v));
}

OrdinalMap OrdinalMap::codegeneracy(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw DomainError("codegeneracy index out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n) + 2);
  for (int k = 0; k <= n + 1; ++k) v.push_back(k <= j ? k : k - 1);
  return OrdinalMap(n, std::move(v));
}

bool OrdinalMap::is_injective() const {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool OrdinalMap::is_surjective() const {
  if (values_.front() != 0 || values_.back() != codomain_top_) return false;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] - values_[i - 1] > 1) return false;
  return true;
}

bool OrdinalMap::is_identity() const {
  return domain_top() == codomain_top_ && is_injective();
}

OrdinalMap OrdinalMap::conjugate() const {
  const int m = domain_top();
  std::vector<int> v(values_.size());
  for (int i = 0; i <= m; ++i) v[i] = codomain_top_ - values_[m - i];
  return OrdinalMap(codomain_top_, std::move(v));
}

std::string OrdinalMap::to_string() const {
  std::ostringstream os;
  os << "[" << domain_top() << "]->[" << codomain_top_ << "] (";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const OrdinalMap& map) {
  return os << map.to_string();
}

OrdinalMap compose(const OrdinalMap& outer, const OrdinalMap& inner) {
  if (inner.codomain_top() != outer.domain_top())
    throw DimensionError("cannot compose " + outer.to_string() + " after " + inner.to_string());
  std::vector<int> v;
  v.reserve(inner.values().size());
  for (int x : inner.values()) v.push_back(outer(x));
  return OrdinalMap(outer.codomain_top(), std::move(v));
}

OrdinalMap ElementaryOp::as_map() const {
  return kind == Kind::Coface ? OrdinalMap::coface(codomain_top, index)
                              : OrdinalMap::codegeneracy(codomain_top, index);
}

std::vector<ElementaryOp> factorize(const OrdinalMap& alpha) {
  const auto& vals = alpha.values();
  const int n = alpha.codomain_top();

  // image of alpha, and the positions where it repeats
  std::vector<int> image;
  std::vector<int> repeats;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i > 0 && vals[i] == vals[i - 1])
      repeats.push_back(static_cast<int>(i) - 1);
    else
      image.push_back(vals[i]);
  }
  const int p = static_cast<int>(image.size()) - 1;

  std::vector<ElementaryOp> ops;
  // mono part [p] -> [n]: delta_{j_r} o ... o delta_{j_1}, j_1 < ... < j_r omitted
  std::vector<int> omitted;
  for (int v = 0, k = 0; v <= n; ++v) {
    if (k < static_cast<int>(image.size()) && image[k] == v)
      ++k;
    else
      omitted.push_back(v);
  }
  // delta_{j_s} maps [p+s-1] -> [p+s]
  for (int s = static_cast<int>(omitted.size()); s >= 1; --s)
    ops.push_back({ElementaryOp::Kind::Coface, omitted[s - 1], p + s});

  // epi part [m] -> [p]: sigma_{i_1} o ... o sigma_{i_h}, i_1 < ... < i_h
  // sigma_{i_s} maps [p+s] -> [p+s-1]
  for (std::size_t s = 0; s < repeats.size(); ++s)
    ops.push_back({ElementaryOp::Kind::Codegeneracy, repeats[s], p + static_cast<int>(s)});
  return ops;
}

OrdinalMap recompose(const std::vector<ElementaryOp>& ops, int top_if_empty) {
  if (ops.empty()) return OrdinalMap::identity(top_if_empty);
  OrdinalMap acc = ops.back().as_map();
  for (auto it = ops.rbegin() + 1; it != ops.rend(); ++it) acc = compose(it->as_map(), acc);
  return acc;
}

OrdinalMap double_map(const OrdinalMap& s) {
  const int m = s.domain_top();
  const int n = s.codomain_top();
  std::vector<int> t(static_cast<std::size_t>(2 * m + 2));
  for (int i = 0; i <= 2 * m + 1; ++i) t[i] = i <= m ? s(i) : 2 * n + 1 - s(2 * m + 1 - i);
  return OrdinalMap(2 * n + 1, std::move(t));
}

bool is_symmetric(const OrdinalMap& t) {
  const int big_m = t.domain_top();
  const int big_n = t.codomain_top();
  if (big_m % 2 == 0 || big_n % 2 == 0) return false;
  for (int i = 0; i <= big_m; ++i)
    if (t(i) + t(big_m - i) != big_n) return false;
  return true;
}

OrdinalMap restrict_half(const OrdinalMap& t) {
  if (!is_symmetric(t)) throw DomainError("restrict_half needs a symmetric map, got " + t.to_string());
  const int m = (t.domain_top() - 1) / 2;
  const int n = (t.codomain_top() - 1) / 2;
  std::vector<int> s(t.values().begin(), t.values().begin() + m + 1);
  // symmetry forces t(m) + t(m+1) = 2n+1 with t(m) <= t(m+1), so t(m) <= n
  return OrdinalMap(n, std::move(s));
}

OrdinalMap zero_elimination(int m, int i) {
  if (m < 1) throw DomainError("zero_elimination needs m >= 1");
  if (i < 0 || i > m) throw DomainError("zero_elimination position out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(2 * m));
  for (int k = 0; k <= 2 * m + 1; ++k)
    if (k != i && k != 2 * m + 1 - i) v.push_back(k);
  return OrdinalMap(2 * m + 1, std::move(v));
}

std::vector<OrdinalMap> all_ordinal_maps(int m, int n) {
  std::vector<OrdinalMap> out;
  if (m < 0 || n < 0) return out;
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.emplace_back(n, v);
    // next weakly increasing sequence in lexicographic order
    int k = m;
    while (k >= 0 && v[k] == n) --k;
    if (k < 0) break;
    ++v[k];
    for (int j = k + 1; j <= m; ++j) v[j] = v[k];
  }
  return out;
}

}  // namespace twistbar
