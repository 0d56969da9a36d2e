#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "projcodes/binary_word.hpp"
#include "projcodes/matrix.hpp"

namespace projcodes {

/// True when `m` (zero rows allowed only at the bottom) is in reduced row
/// echelon form.
bool is_rref(const Matrix& m);

/// A subspace of GF(q)^n, stored by its unique reduced row echelon
/// generator E(X). Equality is entrywise equality of E(X).
class Subspace {
 public:
  Subspace() = default;

  /// Row space of `rows`; dependent and zero rows are allowed.
  static Subspace span(const Matrix& rows);
  /// Takes a generator already in reduced row echelon form with full rank.
  static Subspace from_rref(Matrix generator);
  static Subspace zero(FieldPtr field, std::size_t n);
  static Subspace full(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return generator_.field(); }
  std::size_t ambient_dim() const { return generator_.cols(); }
  std::size_t dim() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Binary word with ones at the pivot columns of E(X).
  BinaryWord identifying_vector() const;

  bool contains(std::span<const Elem> x) const;
  bool contains(const Subspace& other) const;

  /// All q^dim vectors; meant for small subspaces.
  std::vector<std::vector<Elem>> elements() const;

  /// Delete coordinate i from every vector. Throws when e_i is in the
  /// subspace, since the dimension would drop.
  Subspace puncture(std::size_t i) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.generator_ == b.generator_;
  }
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Matrix generator);

  Matrix generator_;
  std::vector<std::size_t> pivots_;
};

std::size_t subspace_distance(const Subspace& u, const Subspace& v);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);
/// Complement under the standard bilinear form sum x_i y_i.
Subspace orthogonal_complement(const Subspace& x);

/// GF(2) subspace of dimension <= 64 and n <= 64 packed as row masks, for
/// tight distance loops. Bit c of a row is coordinate c.
struct PackedSubspace {
  std::vector<std::uint64_t> rows;

  static PackedSubspace pack(const Subspace& s);
};

std::size_t packed_distance(const PackedSubspace& u, const PackedSubspace& v);

}  // namespace projcodes
