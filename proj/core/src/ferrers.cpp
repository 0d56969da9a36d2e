#include "projcodes/ferrers.hpp"

#include <algorithm>
#include <stdexcept>

namespace projcodes {

FerrersDiagram::FerrersDiagram(std::vector<std::size_t> row_lengths) : rows_(std::move(row_lengths)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == 0) throw std::invalid_argument("Ferrers rows must have at least one dot");
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw std::invalid_argument("Ferrers row lengths must be non-increasing");
    }
  }
}

FerrersDiagram FerrersDiagram::full(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return {};
  return FerrersDiagram(std::vector<std::size_t>(rows, cols));
}

std::vector<std::size_t> FerrersDiagram::column_counts() const {
  const std::size_t eta = cols();
  std::vector<std::size_t> gamma(eta, 0);
  for (std::size_t len : rows_) {
    for (std::size_t c = eta - len; c < eta; ++c) ++gamma[c];
  }
  return gamma;
}

std::size_t FerrersDiagram::dots() const {
  std::size_t total = 0;
  for (std::size_t len : rows_) total += len;
  return total;
}

std::string FerrersDiagram::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows(); ++r) {
    if (r) out.push_back('\n');
    for (std::size_t c = 0; c < cols(); ++c) out.push_back(contains(r, c) ? '*' : '.');
  }
  return out;
}

FerrersDiagram conjugate(const FerrersDiagram& f) {
  auto gamma = f.column_counts();
  std::reverse(gamma.begin(), gamma.end());
  return FerrersDiagram(std::move(gamma));
}

std::vector<std::size_t> dim_bound_terms(const FerrersDiagram& f, std::size_t delta) {
  if (delta == 0) throw std::invalid_argument("rank distance must be at least 1");
  std::vector<std::size_t> nu;
  const std::size_t eta = f.cols();
  for (std::size_t i = 0; i < delta; ++i) {
    const std::size_t cut = delta - 1 - i;
    const std::size_t limit = cut >= eta ? 0 : eta - cut;  // columns [0, limit) survive
    std::size_t count = 0;
    for (std::size_t r = i; r < f.rows(); ++r) {
      const std::size_t first = eta - f.row_lengths()[r];
      if (limit > first) count += limit - first;
    }
    nu.push_back(count);
  }
  return nu;
}

std::size_t dim_bound(const FerrersDiagram& f, std::size_t delta) {
  const auto nu = dim_bound_terms(f, delta);
  return *std::min_element(nu.begin(), nu.end());
}

std::size_t corollary_bound(const FerrersDiagram& f, std::size_t delta) {
  const auto nu = dim_bound_terms(f, delta);
  return std::min(nu.front(), nu.back());
}

bool rightmost_columns_full(const FerrersDiagram& f, std::size_t delta) {
  if (delta <= 1) return true;
  const auto gamma = f.column_counts();
  if (delta - 1 > gamma.size()) return false;
  for (std::size_t j = gamma.size() - (delta - 1); j < gamma.size(); ++j) {
    if (gamma[j] != f.rows()) return false;
  }
  return true;
}

EchelonFerrersForm EchelonFerrersForm::of(const BinaryWord& v) {
  if (v.weight() == 0) throw std::invalid_argument("echelon Ferrers form needs a nonzero word");
  EchelonFerrersForm ef;
  ef.v_ = v;
  ef.pivots_ = v.ones();
  for (std::size_t c = ef.pivots_.front() + 1; c < v.size(); ++c) {
    if (!v[c]) ef.dot_columns_.push_back(c);
  }
  std::vector<std::size_t> lengths;
  for (std::size_t p : ef.pivots_) {
    const auto after = static_cast<std::size_t>(
        ef.dot_columns_.end() - std::upper_bound(ef.dot_columns_.begin(), ef.dot_columns_.end(), p));
    if (after == 0) break;
    lengths.push_back(after);
  }
  ef.diagram_ = FerrersDiagram(std::move(lengths));
  return ef;
}

std::vector<GridPosition> EchelonFerrersForm::dot_positions() const {
  std::vector<GridPosition> out;
  for (std::size_t r = 0; r < k(); ++r) {
    for (std::size_t c : dot_columns_) {
      if (c > pivots_[r]) out.push_back({r, c});
    }
  }
  return out;
}

bool EchelonFerrersForm::is_dot(std::size_t row, std::size_t col) const {
  return row < k() && col > pivots_[row] && col < n() && !v_[col];
}

std::vector<std::size_t> EchelonFerrersForm::alignment() const {
  std::vector<std::size_t> order = pivots_;
  for (std::size_t c = 0; c < n(); ++c) {
    if (!v_[c]) order.push_back(c);
  }
  return order;
}

std::string EchelonFerrersForm::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < k(); ++r) {
    if (r) out.push_back('\n');
    for (std::size_t c = 0; c < n(); ++c) {
      if (c == pivots_[r]) {
        out.push_back('1');
      } else if (is_dot(r, c)) {
        out.push_back('*');
      } else {
        out.push_back('0');
      }
    }
  }
  return out;
}

std::vector<BinaryWord> enumerate_identifying_vectors(std::size_t n, std::size_t k,
                                                      LexOrder order) {
  if (k > n) throw std::invalid_argument("weight exceeds length");
  if (n > 64) throw std::invalid_argument("length above 64 is not supported");
  std::vector<BinaryWord> out;
  if (k == 0) {
    out.emplace_back(n, 0);
    return out;
  }
  // Gosper's hack walks the weight-k masks in increasing numeric order.
  const std::uint64_t limit_bit = n == 64 ? 0 : (1ULL << n);
  std::uint64_t x = k == 64 ? ~0ULL : ((1ULL << k) - 1);
  while (true) {
    out.emplace_back(n, x);
    if (n == 64 && x == (~0ULL << (64 - k))) break;
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r == 0) break;
    x = (((r ^ x) >> 2) / c) | r;
    if (n < 64 && x >= limit_bit) break;
  }
  if (order == LexOrder::descending) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace projcodes
