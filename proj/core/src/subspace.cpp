#include "projcodes/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace projcodes {

namespace {

void check_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  if (!u.field()->same_as(*v.field())) throw FieldError("subspaces over different fields");
}

}  // namespace

bool is_rref(const Matrix& m) {
  std::size_t prev = 0;
  bool seen_zero = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t lead = m.cols();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) {
        lead = c;
        break;
      }
    }
    if (lead == m.cols()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (r > 0 && lead <= prev) return false;
    if (m(r, lead) != 1) return false;
    for (std::size_t o = 0; o < m.rows(); ++o) {
      if (o != r && m(o, lead) != 0) return false;
    }
    prev = lead;
  }
  return true;
}

Subspace::Subspace(Matrix generator) : generator_(std::move(generator)) {
  for (std::size_t r = 0; r < generator_.rows(); ++r) {
    for (std::size_t c = 0; c < generator_.cols(); ++c) {
      if (generator_(r, c) != 0) {
        pivots_.push_back(c);
        break;
      }
    }
  }
}

Subspace Subspace::span(const Matrix& rows) {
  auto red = rref(rows);
  return Subspace(red.matrix.top_rows(red.rank));
}

Subspace Subspace::from_rref(Matrix generator) {
  if (!is_rref(generator)) throw std::invalid_argument("generator is not in reduced row echelon form");
  Subspace s(std::move(generator));
  if (s.pivots_.size() != s.generator_.rows()) throw std::invalid_argument("generator has zero rows");
  return s;
}

Subspace Subspace::zero(FieldPtr field, std::size_t n) { return Subspace(Matrix(std::move(field), 0, n)); }

Subspace Subspace::full(FieldPtr field, std::size_t n) {
  return Subspace(Matrix::identity(std::move(field), n));
}

BinaryWord Subspace::identifying_vector() const {
  return BinaryWord::from_positions(ambient_dim(), pivots_);
}

bool Subspace::contains(std::span<const Elem> x) const {
  if (x.size() != ambient_dim()) throw std::invalid_argument("vector length mismatch");
  const Field& f = *field();
  std::vector<Elem> y(x.size(), 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem a = x[pivots_[i]];
    if (a == 0) continue;
    const auto row = generator_.row(i);
    for (std::size_t c = 0; c < y.size(); ++c) y[c] = f.add(y[c], f.mul(a, row[c]));
  }
  return std::equal(y.begin(), y.end(), x.begin());
}

bool Subspace::contains(const Subspace& other) const {
  check_ambient(*this, other);
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.generator_.row(r))) return false;
  }
  return true;
}

std::vector<std::vector<Elem>> Subspace::elements() const {
  const Field& f = *field();
  const std::size_t k = dim();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> coeff(k, 0);
  while (true) {
    out.push_back(generator_.left_multiply(coeff));
    std::size_t i = 0;
    while (i < k) {
      if (coeff[i] + 1 < f.size()) {
        ++coeff[i];
        break;
      }
      coeff[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return out;
}

Subspace Subspace::puncture(std::size_t i) const {
  const std::size_t n = ambient_dim();
  if (i >= n) throw std::out_of_range("puncture coordinate out of range");
  std::vector<Elem> unit(n, 0);
  unit[i] = 1;
  if (contains(unit)) {
    throw std::invalid_argument("unit vector e_" + std::to_string(i + 1) + " lies in the subspace");
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n; ++c) {
    if (c != i) keep.push_back(c);
  }
  return span(generator_.select_columns(keep));
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
  const auto& x = a.generator_.data();
  const auto& y = b.generator_.data();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  if (u.field()->size() == 2 && u.ambient_dim() <= 64) {
    return packed_distance(PackedSubspace::pack(u), PackedSubspace::pack(v));
  }
  const std::size_t r = rank(u.generator().stacked(v.generator()));
  return 2 * r - u.dim() - v.dim();
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  return Subspace::span(u.generator().stacked(v.generator()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.field(), u.ambient_dim());
  const Matrix stacked = u.generator().stacked(v.generator());
  const Matrix relations = null_space(stacked.transpose());
  Matrix vectors(u.field(), 0, u.ambient_dim());
  for (std::size_t r = 0; r < relations.rows(); ++r) {
    const auto rel = relations.row(r);
    vectors.append_row(u.generator().left_multiply(rel.first(u.dim())));
  }
  return Subspace::span(vectors);
}

Subspace orthogonal_complement(const Subspace& x) {
  return Subspace::span(null_space(x.generator()));
}

PackedSubspace PackedSubspace::pack(const Subspace& s) {
  if (s.field()->size() != 2 || s.ambient_dim() > 64) {
    throw std::invalid_argument("packing needs GF(2) and n <= 64");
  }
  PackedSubspace p;
  p.rows.assign(s.dim(), 0);
  const auto& g = s.generator();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (g(r, c)) p.rows[r] |= 1ULL << c;
    }
  }
  return p;
}

std::size_t packed_distance(const PackedSubspace& u, const PackedSubspace& v) {
  std::uint64_t basis[64];
  std::fill(std::begin(basis), std::end(basis), 0);
  std::size_t r = 0;
  auto insert = [&](std::uint64_t x) {
    while (x) {
      const int top = 63 - std::countl_zero(x);
      if (basis[top] == 0) {
        basis[top] = x;
        ++r;
        return;
      }
      x ^= basis[top];
    }
  };
  for (auto x : u.rows) insert(x);
  for (auto x : v.rows) insert(x);
  return 2 * r - u.rows.size() - v.rows.size();
}

}  // namespace projcodes
