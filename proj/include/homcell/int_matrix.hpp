#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "homcell/integers.hpp"

namespace homcell {

// Dense row-major integer matrix. Zero-row and zero-column matrices are
// legal and represent zero maps to/from rank-0 modules.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, cols);
  }
  // Square matrix with `diag` on the diagonal.
  static IntMatrix diagonal(const std::vector<Int>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row_i += c * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
  // col_i += c * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);

  IntMatrix top_rows(std::size_t k) const;
  IntMatrix column(std::size_t j) const;
  std::vector<Int> column_vec(std::size_t j) const;

  // Entries reduced into [0, n).
  IntMatrix reduced_mod(const Int& n) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mul(const Int& c, const IntMatrix& a);
IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix negate(const IntMatrix& a);
IntMatrix transpose(const IntMatrix& a);
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

std::vector<Int> mul_vec(const IntMatrix& a, const std::vector<Int>& x);
IntMatrix from_column(const std::vector<Int>& x);

// Laplace expansion; exact, intended for small matrices (tests/oracles).
Int det_laplace(const IntMatrix& a);

}  // namespace homcell
