#include <algorithm>
#include <set>

#include "twistbar/errors.hpp"
#include "twistbar/simplicial.hpp"

namespace twistbar {

BisimplicialDiagonal::BisimplicialDiagonal(MonoidPtr monoid, bool twisted_outer, int truncation)
    : SimplicialSet(truncation), monoid_(std::move(monoid)), twisted_outer_(twisted_outer) {
  if (!monoid_->is_commutative())
    throw UnsupportedInput("the bisimplicial bar needs a commutative monoid");
}

std::string BisimplicialDiagonal::kind() const {
  return twisted_outer_ ? "diag B^sigma_p(B_q A)" : "diag B_p(B^sigma_q A)";
}

std::vector<Simplex> BisimplicialDiagonal::simplices(int n) const {
  require_level(n);
  std::vector<Simplex> out;
  for (auto& w : all_words(monoid_->size(), n * n)) out.push_back({n, std::move(w)});
  return out;
}

std::uint64_t BisimplicialDiagonal::level_size(int n) const {
  require_level(n);
  std::uint64_t r = 1;
  for (int i = 0; i < n * n; ++i) r *= static_cast<std::uint64_t>(monoid_->size());
  return r;
}

// Outer direction: the bar construction of the monoid A^cols under entrywise product.
std::vector<int> BisimplicialDiagonal::row_face(int i, const std::vector<int>& m, int rows, int cols) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>((rows - 1) * cols));
  for (int r = 0; r < rows; ++r) {
    if ((i == 0 && r == 0) || (i == rows && r == rows - 1)) continue;
    if (i > 0 && i < rows && r == i - 1) {
      for (int c = 0; c < cols; ++c) out.push_back(monoid_->mul(m[r * cols + c], m[(r + 1) * cols + c]));
      ++r;
      continue;
    }
    out.insert(out.end(), m.begin() + r * cols, m.begin() + (r + 1) * cols);
  }
  return out;
}

// Inner direction: the bar face applied to every row.
std::vector<int> BisimplicialDiagonal::col_face(int i, const std::vector<int>& m, int rows, int cols) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(rows * (cols - 1)));
  for (int r = 0; r < rows; ++r) {
    const int* row = m.data() + r * cols;
    for (int c = 0; c < cols; ++c) {
      if ((i == 0 && c == 0) || (i == cols && c == cols - 1)) continue;
      if (i > 0 && i < cols && c == i - 1) {
        out.push_back(monoid_->mul(row[c], row[c + 1]));
        ++c;
        continue;
      }
      out.push_back(row[c]);
    }
  }
  return out;
}

std::vector<int> BisimplicialDiagonal::row_degeneracy(int j, const std::vector<int>& m, int rows, int cols) const {
  std::vector<int> out(m.begin(), m.begin() + j * cols);
  out.insert(out.end(), static_cast<std::size_t>(cols), monoid_->unit());
  out.insert(out.end(), m.begin() + j * cols, m.begin() + rows * cols);
  return out;
}

std::vector<int> BisimplicialDiagonal::col_degeneracy(int j, const std::vector<int>& m, int rows, int cols) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(rows * (cols + 1)));
  for (int r = 0; r < rows; ++r) {
    out.insert(out.end(), m.begin() + r * cols, m.begin() + r * cols + j);
    out.push_back(monoid_->unit());
    out.insert(out.end(), m.begin() + r * cols + j, m.begin() + (r + 1) * cols);
  }
  return out;
}

Simplex BisimplicialDiagonal::face(int i, const Simplex& x) const {
  require_face(i, x);
  const int n = x.level;
  return {n - 1, col_face(i, row_face(i, x.data, n, n), n - 1, n)};
}

Simplex BisimplicialDiagonal::face_other_order(int i, const Simplex& x) const {
  require_face(i, x);
  const int n = x.level;
  return {n - 1, row_face(i, col_face(i, x.data, n, n), n, n - 1)};
}

Simplex BisimplicialDiagonal::degeneracy(int j, const Simplex& x) const {
  require_degeneracy(j, x);
  const int n = x.level;
  return {n + 1, col_degeneracy(j, row_degeneracy(j, x.data, n, n), n + 1, n)};
}

Simplex BisimplicialDiagonal::degeneracy_other_order(int j, const Simplex& x) const {
  require_degeneracy(j, x);
  const int n = x.level;
  return {n + 1, row_degeneracy(j, col_degeneracy(j, x.data, n, n), n, n + 1)};
}

Simplex BisimplicialDiagonal::involution(const Simplex& x) const {
  require_level(x.level);
  const int n = x.level;
  Simplex y{n, std::vector<int>(x.data.size())};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int src = twisted_outer_ ? (n - 1 - r) * n + c : r * n + (n - 1 - c);
      y.data[r * n + c] = monoid_->tau(x.data[src]);
    }
  return y;
}

namespace {

Simplex transpose(const Simplex& x) {
  const int n = x.level;
  Simplex y{n, std::vector<int>(x.data.size())};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) y.data[c * n + r] = x.data[r * n + c];
  return y;
}

}  // namespace

Certificate diagonal_compare(MonoidPtr monoid, int truncation) {
  if (!monoid->is_commutative())
    throw UnsupportedInput("diagonal comparison needs a commutative monoid");
  const BisimplicialDiagonal inner_twisted(monoid, false, truncation);  // B_p(B^sigma_q A)
  const BisimplicialDiagonal outer_twisted(monoid, true, truncation);   // B^sigma_p(B_q A)

  Certificate cert;
  cert.name = "diagonal comparison";
  auto check = [&](bool ok, const std::string& what) {
    ++cert.checks;
    if (!ok) cert.fail(what);
    return ok;
  };

  for (int n = 0; n <= truncation; ++n) {
    const auto left = inner_twisted.simplices(n);
    cert.level_sizes.push_back(left.size());
    std::set<Simplex> transposed;
    for (const auto& x : left) transposed.insert(transpose(x));
    const auto right = outer_twisted.simplices(n);
    if (!check(transposed == std::set<Simplex>(right.begin(), right.end()),
               "level " + std::to_string(n) + " simplex sets differ"))
      return cert;

    for (const auto& x : left) {
      const Simplex tx = transpose(x);
      if (!check(transpose(inner_twisted.involution(x)) == outer_twisted.involution(tx), "tau at " + x.to_string()))
        return cert;
      for (int i = 0; n >= 1 && i <= n; ++i) {
        const Simplex dx = inner_twisted.face(i, x);
        if (!check(dx == inner_twisted.face_other_order(i, x), "horizontal/vertical d_" + std::to_string(i) +
                                                                   " disagree at " + x.to_string()) ||
            !check(outer_twisted.face(i, tx) == outer_twisted.face_other_order(i, tx),
                   "horizontal/vertical d_" + std::to_string(i) + " disagree at " + tx.to_string()) ||
            !check(transpose(dx) == outer_twisted.face(i, tx), "transpose and d_" + std::to_string(i) + " at " +
                                                                   x.to_string()))
          return cert;
      }
      for (int j = 0; n < truncation && j <= n; ++j) {
        const Simplex sx = inner_twisted.degeneracy(j, x);
        if (!check(sx == inner_twisted.degeneracy_other_order(j, x), "horizontal/vertical s_" +
                                                                         std::to_string(j) + " disagree at " +
                                                                         x.to_string()) ||
            !check(transpose(sx) == outer_twisted.degeneracy(j, tx), "transpose and s_" + std::to_string(j) +
                                                                         " at " + x.to_string()))
          return cert;
      }
    }
  }
  return cert;
}

}  // namespace twistbar
