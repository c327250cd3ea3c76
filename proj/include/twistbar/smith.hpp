#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace twistbar {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Nonzero diagonal of the Smith normal form, positive and in divisibility order
/// (d_1 | d_2 | ...). Its length is the rank.
std::vector<mpz_class> smith_invariants(IntMatrix m);

/// Narrowing for reporting; throws std::overflow_error if a value does not fit.
std::int64_t to_int64(const mpz_class& x);

}  // namespace twistbar
