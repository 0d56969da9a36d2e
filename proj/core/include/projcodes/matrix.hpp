#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "projcodes/field.hpp"

namespace projcodes {

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows,
                          std::size_t cols);
  /// Rows of digit characters ("1011", "0120"); prime fields only.
  static Matrix parse(FieldPtr field, const std::vector<std::string>& rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const { return data_; }

  void append_row(std::span<const Elem> values);
  Matrix stacked(const Matrix& below) const;
  Matrix transpose() const;
  /// Reverse both row and column order of the transpose; maps a
  /// right-justified dot pattern onto the pattern of its conjugate.
  Matrix antitranspose() const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix top_rows(std::size_t count) const;

  bool is_zero() const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix scaled(Elem s) const;
  std::vector<Elem> left_multiply(std::span<const Elem> v) const;  // v * M

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  std::string to_string(char row_sep = '\n') const;

 private:
  void check_same_shape(const Matrix& other) const;

  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix matrix;  // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Rows form a basis of {x : m x^T = 0}, in reduced echelon form.
Matrix null_space(const Matrix& m);
/// Coefficients a with a * basis = target, when target is in the row space
/// of `basis` (rows of `basis` must be linearly independent).
std::optional<std::vector<Elem>> solve_in_row_space(const Matrix& basis,
                                                    std::span<const Elem> target);

/// Rank over GF(2) of rows given as bit masks.
std::size_t gf2_rank(std::span<const std::uint64_t> rows);

}  // namespace projcodes
