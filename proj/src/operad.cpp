#include "twistbar/operad.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "twistbar/errors.hpp"
#include "twistbar/monoid.hpp"

namespace twistbar {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (int x : image_) {
    if (x < 1 || x > degree() || seen[x]) throw DomainError("not a permutation: " + to_string());
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::reversal(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int a = 1; a <= degree; ++a) img[a - 1] = degree + 1 - a;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int a = 1; a <= degree(); ++a) inv[(*this)(a) - 1] = a;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? "," : "") << image_[i];
  os << "]";
  return os.str();
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation gamma(const Permutation& v, std::span<const Permutation> blocks) {
  const int t = v.degree();
  if (static_cast<int>(blocks.size()) != t)
    throw DimensionError("gamma: " + std::to_string(blocks.size()) + " blocks for arity " +
                         std::to_string(t));
  const Permutation v_inv = v.inverse();
  // offset[i] = sum_{k=1}^{v(i)-1} s_{v^{-1}(k)}: start of the slot block i lands in
  std::vector<int> offset(static_cast<std::size_t>(t) + 1, 0);
  for (int i = 1; i <= t; ++i)
    for (int k = 1; k < v(i); ++k) offset[i] += blocks[v_inv(k) - 1].degree();

  std::vector<int> img;
  for (int i = 1; i <= t; ++i) {
    const Permutation& ui = blocks[i - 1];
    for (int j = 1; j <= ui.degree(); ++j) img.push_back(ui(j) + offset[i]);
  }
  return Permutation(std::move(img));
}

Permutation involute(const Permutation& w) {
  std::vector<int> img(w.image().size());
  const int n = w.degree();
  for (int a = 1; a <= n; ++a) img[a - 1] = n + 1 - w(a);
  return Permutation(std::move(img));
}

namespace {

// Every permutation with degree in [0, max_degree].
std::vector<Permutation> permutations_up_to(int max_degree) {
  std::vector<Permutation> out;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& p : all_permutations(d)) out.push_back(std::move(p));
  return out;
}

// Calls fn(blocks) for every t-tuple drawn from pool.
void for_each_tuple(const std::vector<Permutation>& pool, int t,
                    const std::function<bool(const std::vector<Permutation>&)>& fn) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
  std::vector<Permutation> blocks(static_cast<std::size_t>(t));
  if (t > 0 && pool.empty()) return;
  while (true) {
    for (int i = 0; i < t; ++i) blocks[i] = pool[idx[i]];
    if (!fn(blocks)) return;
    int k = t - 1;
    while (k >= 0 && idx[k] + 1 == pool.size()) idx[k--] = 0;
    if (k < 0) return;
    ++idx[k];
  }
}

std::string describe(const Permutation& v, const std::vector<Permutation>& blocks) {
  std::string s = "v=" + v.to_string() + " blocks=(";
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + blocks[i].to_string();
  return s + ")";
}

}  // namespace

OperadCertificate check_equivariance(int max_arity, int max_block_degree) {
  if (max_arity < 1 || max_block_degree < 1) throw DomainError("operad bounds must be >= 1");
  OperadCertificate cert{"tau-equivariance of gamma", max_arity, max_block_degree, 0, true, {}};
  const auto pool = permutations_up_to(max_block_degree);
  for (int t = 0; t <= max_arity && cert.passed; ++t) {
    for (const auto& v : all_permutations(t)) {
      const Permutation tv = involute(v);
      for_each_tuple(pool, t, [&](const std::vector<Permutation>& blocks) {
        std::vector<Permutation> tblocks;
        tblocks.reserve(blocks.size());
        for (const auto& b : blocks) tblocks.push_back(involute(b));
        ++cert.cases;
        Permutation lhs = gamma(tv, tblocks);
        Permutation rhs = involute(gamma(v, blocks));
        if (lhs != rhs) {
          cert.passed = false;
          cert.counterexample = describe(v, blocks) + " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
          return false;
        }
        return true;
      });
      if (!cert.passed) break;
    }
  }
  return cert;
}

OperadCertificate check_associativity(int max_arity, int max_block_degree) {
  if (max_arity < 1 || max_block_degree < 1) throw DomainError("operad bounds must be >= 1");
  OperadCertificate cert{"associativity and unit of gamma", max_arity, max_block_degree, 0, true, {}};
  const auto pool = permutations_up_to(max_block_degree);
  auto fail = [&](std::string what) {
    cert.passed = false;
    cert.counterexample = std::move(what);
    return false;
  };

  for (int t = 0; t <= max_arity && cert.passed; ++t) {
    for (const auto& v : all_permutations(t)) {
      // right unit: gamma(v; id_1, ..., id_1) = v
      ++cert.cases;
      std::vector<Permutation> ones(static_cast<std::size_t>(t), Permutation::identity(1));
      if (gamma(v, ones) != v) {
        fail("right unit fails at v=" + v.to_string());
        break;
      }
      for_each_tuple(pool, t, [&](const std::vector<Permutation>& us) {
        // left unit: gamma(id_1; u) = u
        if (t == 1) {
          ++cert.cases;
          const Permutation single[] = {us[0]};
          if (gamma(Permutation::identity(1), single) != us[0]) return fail("left unit fails at " + us[0].to_string());
        }
        const Permutation inner = gamma(v, us);
        // second-level blocks: one per input of inner, grouped by the u_i they feed
        for_each_tuple(pool, inner.degree(), [&](const std::vector<Permutation>& ws) {
          ++cert.cases;
          const Permutation lhs = gamma(inner, ws);
          std::vector<Permutation> grouped;
          std::size_t pos = 0;
          for (const auto& ui : us) {
            std::vector<Permutation> chunk(ws.begin() + static_cast<std::ptrdiff_t>(pos),
                                           ws.begin() + static_cast<std::ptrdiff_t>(pos + ui.degree()));
            pos += static_cast<std::size_t>(ui.degree());
            grouped.push_back(gamma(ui, chunk));
          }
          const Permutation rhs = gamma(v, grouped);
          if (lhs != rhs) return fail(describe(v, us) + " second level mismatch " + lhs.to_string() + " vs " + rhs.to_string());
          return true;
        });
        return cert.passed;
      });
      if (!cert.passed) break;
    }
  }
  return cert;
}

int algebra_eval(const TwistedMonoid& monoid, const Permutation& u, std::span<const int> elems) {
  if (static_cast<int>(elems.size()) != u.degree())
    throw DimensionError("algebra_eval: " + std::to_string(elems.size()) + " elements for degree " +
                         std::to_string(u.degree()));
  for (int e : elems)
    if (e < 0 || e >= monoid.size()) throw DomainError("algebra_eval: element id out of range");
  const Permutation inv = u.inverse();
  int acc = monoid.unit();
  for (int a = 1; a <= u.degree(); ++a) acc = monoid.mul(acc, elems[inv(a) - 1]);
  return acc;
}

}  // namespace twistbar
