#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "projcodes/ferrers.hpp"
#include "projcodes/rank_metric.hpp"
#include "projcodes/subspace.hpp"

namespace testing_helpers {

using namespace projcodes;

inline Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(f->size() - 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  }
  return m;
}

inline Subspace random_subspace(const FieldPtr& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  while (true) {
    auto s = Subspace::span(random_matrix(f, k, n, rng));
    if (s.dim() == k) return s;
  }
}

inline std::vector<oracle::Vec> rows_of(const Matrix& m) {
  std::vector<oracle::Vec> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

/// Vectors of a subspace over a prime field, by closure of its generator rows.
inline std::set<oracle::Vec> vectors_of(const Subspace& s) {
  return oracle::span_mod_p(rows_of(s.generator()), static_cast<int>(s.field()->size()), s.ambient_dim());
}

/// All k-dimensional subspaces of GF(p)^n written out directly as RREF
/// matrices: choose the pivot columns, then fill every free entry right of a
/// pivot that is not itself a pivot column.
inline std::vector<Matrix> all_rref_matrices(const FieldPtr& f, std::size_t n, std::size_t k) {
  std::vector<Matrix> out;
  const int p = static_cast<int>(f->size());
  std::vector<std::size_t> piv(k);
  std::vector<bool> choose(n, false);
  std::fill(choose.begin(), choose.begin() + static_cast<long>(k), true);
  do {
    std::size_t j = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (choose[c]) piv[j++] = c;
    }
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = piv[r] + 1; c < n; ++c) {
        if (!choose[c]) free.emplace_back(r, c);
      }
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < total; ++code) {
      Matrix m(f, k, n);
      for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
      std::size_t c = code;
      for (auto [r, col] : free) {
        m(r, col) = static_cast<Elem>(c % static_cast<std::size_t>(p));
        c /= static_cast<std::size_t>(p);
      }
      out.push_back(m);
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

/// A subspace at distance erase + insert from x: keep a random subspace of
/// x of dimension dim(x) - erase, then add `insert` random vectors outside
/// what is held so far.
inline Subspace corrupt(const Subspace& x, std::size_t erase, std::size_t insert, std::mt19937_64& rng) {
  const FieldPtr& f = x.field();
  const std::size_t keep = x.dim() - erase;
  Subspace y = Subspace::zero(f, x.ambient_dim());
  while (y.dim() < keep) {
    const Matrix coeffs = random_matrix(f, 1, x.dim(), rng);
    const auto v = x.generator().left_multiply(coeffs.row(0));
    if (!y.contains(v)) y = Subspace::span(y.generator().stacked(Matrix::from_rows(f, {v}, v.size())));
  }
  std::size_t added = 0;
  Subspace held = x;
  while (added < insert) {
    const Matrix v = random_matrix(f, 1, x.ambient_dim(), rng);
    if (held.contains(v.row(0))) continue;
    held = Subspace::span(held.generator().stacked(v));
    y = Subspace::span(y.generator().stacked(v));
    ++added;
  }
  return y;
}

/// Every right-justified partition with at most `max_rows` rows and parts <= max_cols.
inline std::vector<std::vector<std::size_t>> all_partitions(std::size_t max_rows, std::size_t max_cols) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t limit) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_rows) return;
    for (std::size_t len = 1; len <= limit; ++len) {
      cur.push_back(len);
      self(self, len);
      cur.pop_back();
    }
  };
  rec(rec, max_cols);
  return out;
}

// Minimum rank over all nonzero codewords, codewords produced by closure of
// the flattened basis and ranks by the oracle elimination. Prime fields only.
inline std::size_t oracle_min_rank(const RankCode& code) {
  const int p = static_cast<int>(code.field()->size());
  const auto words = oracle::span_mod_p(rows_of(code.flattened()), p, code.rows() * code.cols());
  std::size_t best = SIZE_MAX;
  for (const auto& w : words) {
    if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) continue;
    std::vector<oracle::Vec> m;
    for (std::size_t r = 0; r < code.rows(); ++r) {
      m.emplace_back(w.begin() + static_cast<long>(r * code.cols()),
                     w.begin() + static_cast<long>((r + 1) * code.cols()));
    }
    best = std::min(best, static_cast<std::size_t>(oracle::rank_mod_p(m, p)));
  }
  return best;
}

}  // namespace testing_helpers
