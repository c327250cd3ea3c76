#include "twistbar/smith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "twistbar/errors.hpp"

namespace twistbar {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

namespace {

// Moves a minimal-magnitude nonzero entry of the trailing block at t into (t, t).
bool bring_min_pivot(IntMatrix& m, std::size_t t) {
  std::size_t best_r = 0, best_c = 0;
  bool found = false;
  mpz_class best;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      const mpz_class& x = m(r, c);
      if (x == 0) continue;
      if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
        best = x;
        best_r = r;
        best_c = c;
        found = true;
        if (best == 1 || best == -1) goto done;
      }
    }
done:
  if (!found) return false;
  if (best_r != t)
    for (std::size_t c = t; c < m.cols(); ++c) std::swap(m(t, c), m(best_r, c));
  if (best_c != t)
    for (std::size_t r = t; r < m.rows(); ++r) std::swap(m(r, t), m(r, best_c));
  return true;
}

}  // namespace

std::vector<mpz_class> smith_invariants(IntMatrix m) {
  std::vector<mpz_class> diag;
  const std::size_t limit = std::min(m.rows(), m.cols());
  mpz_class q;
  for (std::size_t t = 0; t < limit; ++t) {
    if (!bring_min_pivot(m, t)) break;
    // Euclid on row and column t until the pivot divides everything it touches.
    while (true) {
      bool dirty = false;
      const mpz_class pivot = m(t, t);
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t c = t; c < m.cols(); ++c)
          if (m(t, c) != 0) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t r = t; r < m.rows(); ++r)
          if (m(r, t) != 0) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) dirty = true;
      }
      if (!dirty) break;
      // a smaller remainder appeared in row/column t; make it the pivot
      bring_min_pivot(m, t);
    }
    diag.push_back(abs(m(t, t)));
  }

  // Diagonal form to invariant factors: repeatedly replace (a, b) by (gcd, lcm).
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      mpz_class g = gcd(diag[i], diag[j]);
      mpz_class l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

std::int64_t to_int64(const mpz_class& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return static_cast<std::int64_t>(x.get_si());
}

}  // namespace twistbar
