#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "projcodes/binary_word.hpp"

namespace projcodes {

/// Ferrers diagram with right-justified rows: row lengths are
/// non-increasing from the top, and the dots of every row are flush with the
/// right edge of an m x eta grid (m rows, eta = length of the top row).
class FerrersDiagram {
 public:
  FerrersDiagram() = default;
  explicit FerrersDiagram(std::vector<std::size_t> row_lengths);
  static FerrersDiagram full(std::size_t rows, std::size_t cols);

  const std::vector<std::size_t>& row_lengths() const { return rows_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return rows_.empty() ? 0 : rows_.front(); }
  /// Dots per column, columns indexed left to right; non-decreasing.
  std::vector<std::size_t> column_counts() const;
  std::size_t dots() const;
  bool empty() const { return rows_.empty(); }
  /// Grid position (r, c), both 0-based, holds a dot.
  bool contains(std::size_t r, std::size_t c) const {
    return r < rows_.size() && c < cols() && c >= cols() - rows_[r];
  }

  std::string to_string() const;

  friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;
  friend auto operator<=>(const FerrersDiagram&, const FerrersDiagram&) = default;

 private:
  std::vector<std::size_t> rows_;
};

/// Diagram read by columns, i.e. reflected across the anti-diagonal.
FerrersDiagram conjugate(const FerrersDiagram& f);

/// nu_i for 0 <= i < delta: dots outside the top i rows and outside the
/// rightmost delta-1-i columns.
std::vector<std::size_t> dim_bound_terms(const FerrersDiagram& f, std::size_t delta);
/// Upper bound on the dimension of a linear rank-metric code with minimum
/// rank distance delta supported on the dots: min_i nu_i.
std::size_t dim_bound(const FerrersDiagram& f, std::size_t delta);
/// The weaker bound using only i = 0 and i = delta-1.
std::size_t corollary_bound(const FerrersDiagram& f, std::size_t delta);

/// True when every one of the rightmost delta-1 columns is full (m dots).
bool rightmost_columns_full(const FerrersDiagram& f, std::size_t delta);

struct GridPosition {
  std::size_t row;
  std::size_t col;
  friend bool operator==(const GridPosition&, const GridPosition&) = default;
};

/// The k x n reduced echelon pattern determined by a weight-k binary word:
/// leading ones at the word's ones, and free entries ("dots") wherever the
/// pattern does not force a zero or one.
class EchelonFerrersForm {
 public:
  /// Throws for the zero word.
  static EchelonFerrersForm of(const BinaryWord& v);

  const BinaryWord& identifying_vector() const { return v_; }
  std::size_t n() const { return v_.size(); }
  std::size_t k() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const FerrersDiagram& diagram() const { return diagram_; }
  /// Ambient columns of the diagram columns, left to right.
  const std::vector<std::size_t>& dot_columns() const { return dot_columns_; }
  /// Dots as (row of the k x n pattern, ambient column).
  std::vector<GridPosition> dot_positions() const;
  bool is_dot(std::size_t row, std::size_t col) const;

  /// Column order that puts the pivot columns first and keeps the rest in
  /// their original order.
  std::vector<std::size_t> alignment() const;

  /// Rows of '1', '0' and '*' (dot).
  std::string to_string() const;

 private:
  BinaryWord v_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> dot_columns_;
  FerrersDiagram diagram_;
};

enum class LexOrder { descending, ascending };

/// All length-n words of weight k in the given lexicographic order.
std::vector<BinaryWord> enumerate_identifying_vectors(std::size_t n, std::size_t k,
                                                      LexOrder order = LexOrder::descending);

}  // namespace projcodes
