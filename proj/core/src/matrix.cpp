#include "projcodes/matrix.hpp"

#include <bit>
#include <stdexcept>

namespace projcodes {

namespace {

char digit_char(std::uint32_t d) {
  return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data has wrong size");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows,
                         std::size_t cols) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::parse(FieldPtr field, const std::vector<std::string>& rows) {
  if (!field->is_prime()) throw std::invalid_argument("digit parsing needs a prime field");
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, 0, cols);
  std::vector<Elem> values(cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = r[c];
      Elem d = 0;
      if (ch >= '0' && ch <= '9') {
        d = static_cast<Elem>(ch - '0');
      } else if (ch >= 'a' && ch <= 'z') {
        d = static_cast<Elem>(ch - 'a' + 10);
      } else {
        throw std::invalid_argument(std::string("bad digit '") + ch + "'");
      }
      if (!field->contains(d)) throw std::invalid_argument("digit out of range");
      values[c] = d;
    }
    m.append_row(values);
  }
  return m;
}

void Matrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (below.cols_ != cols_) throw std::invalid_argument("column count mismatch");
  Matrix out = *this;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::antitranspose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(cols_ - 1 - c, rows_ - 1 - r) = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

Matrix Matrix::top_rows(std::size_t count) const {
  Matrix out(field_, count, cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_),
            out.data_.begin());
  return out;
}

bool Matrix::is_zero() const {
  for (Elem e : data_) {
    if (e != 0) return false;
  }
  return true;
}

void Matrix::check_same_shape(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  if (field_ && other.field_ && !field_->same_as(*other.field_)) {
    throw FieldError("matrices over different fields");
  }
}

Matrix Matrix::operator+(const Matrix& other) const {
  check_same_shape(other);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  check_same_shape(other);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("inner dimension mismatch");
  Matrix out(field_, rows_, other.cols_);
  const Field& f = *field_;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        out(r, c) = f.add(out(r, c), f.mul(a, other(k, c)));
      }
    }
  }
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out = *this;
  for (Elem& e : out.data_) e = field_->mul(e, s);
  return out;
}

std::vector<Elem> Matrix::left_multiply(std::span<const Elem> v) const {
  if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
  std::vector<Elem> out(cols_, 0);
  const Field& f = *field_;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] = f.add(out[c], f.mul(v[r], (*this)(r, c)));
  }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Matrix::to_string(char row_sep) const {
  std::string out;
  const bool prime = field_ && field_->is_prime();
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out.push_back(row_sep);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (prime) {
        out.push_back(digit_char((*this)(r, c)));
      } else {
        const auto digits = field_->prime_digit_vector((*this)(r, c));
        for (std::size_t i = digits.size(); i-- > 0;) out.push_back(digit_char(digits[i]));
      }
    }
  }
  return out;
}

RrefResult rref(Matrix m) {
  RrefResult out;
  const Field& f = *m.field();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t sel = lead_row;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(lead_row, j));
    }
    const Elem inv = f.inv(m(lead_row, c));
    if (inv != 1) {
      for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) = f.mul(m(lead_row, j), inv);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row) continue;
      const Elem factor = m(r, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(lead_row, j)));
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  out.matrix = std::move(m);
  return out;
}

std::size_t gf2_rank(std::span<const std::uint64_t> rows) {
  std::uint64_t basis[64] = {};
  std::size_t r = 0;
  for (std::uint64_t v : rows) {
    while (v) {
      const int top = 63 - std::countl_zero(v);
      if (basis[top] == 0) {
        basis[top] = v;
        ++r;
        break;
      }
      v ^= basis[top];
    }
  }
  return r;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const Field& f = *m.field();
  if (f.size() == 2 && m.cols() <= 64) {
    std::vector<std::uint64_t> packed(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(r, c)) packed[r] |= 1ULL << c;
      }
    }
    return gf2_rank(packed);
  }
  return rref(m).rank;
}

Matrix null_space(const Matrix& m) {
  const auto red = rref(m);
  const Field& f = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  Matrix basis(m.field(), 0, m.cols());
  std::vector<Elem> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      v[red.pivots[i]] = f.neg(red.matrix(i, free));
    }
    basis.append_row(v);
  }
  if (basis.rows() == 0) return basis;
  auto reduced = rref(std::move(basis));
  return reduced.matrix;
}

std::optional<std::vector<Elem>> solve_in_row_space(const Matrix& basis,
                                                    std::span<const Elem> target) {
  if (target.size() != basis.cols()) throw std::invalid_argument("target length mismatch");
  const std::size_t k = basis.rows();
  // Columns of the augmented system: coefficients a_0..a_{k-1}, then target.
  Matrix aug(basis.field(), basis.cols(), k + 1);
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    for (std::size_t r = 0; r < k; ++r) aug(c, r) = basis(r, c);
    aug(c, k) = target[c];
  }
  const auto red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == k) return std::nullopt;
  std::vector<Elem> a(k, 0);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) a[red.pivots[i]] = red.matrix(i, k);
  return a;
}

}  // namespace projcodes
