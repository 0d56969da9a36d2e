#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "projcodes/ferrers.hpp"

using namespace projcodes;
using namespace testing_helpers;

namespace {

// nu_i counted dot by dot over the grid.
std::size_t naive_bound(const FerrersDiagram& f, std::size_t delta) {
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < delta; ++i) {
    std::size_t count = 0;
    for (std::size_t r = 0; r < f.rows(); ++r) {
      for (std::size_t c = 0; c < f.cols(); ++c) {
        const bool excluded_row = r < i;
        const bool excluded_col = c + (delta - 1 - i) >= f.cols();
        if (f.contains(r, c) && !excluded_row && !excluded_col) ++count;
      }
    }
    best = std::min(best, count);
  }
  return best;
}

}  // namespace

TEST_CASE("conjugate partitions") {
  CHECK(conjugate(FerrersDiagram({6, 5, 5, 3, 2})).row_lengths() ==
        std::vector<std::size_t>{5, 5, 4, 3, 3, 1});
  CHECK(conjugate(FerrersDiagram({4})).row_lengths() == std::vector<std::size_t>{1, 1, 1, 1});
  for (const auto& rows : all_partitions(5, 5)) {
    const FerrersDiagram f(rows);
    const auto c = conjugate(f);
    CHECK(conjugate(c) == f);
    CHECK(c.dots() == f.dots());
    CHECK(c.rows() == f.cols());
    const auto gamma = f.column_counts();
    CHECK(gamma.back() == f.rows());
    CHECK(std::is_sorted(gamma.begin(), gamma.end()));
  }
  CHECK_THROWS(FerrersDiagram({2, 3}));
}

TEST_CASE("echelon Ferrers forms") {
  const auto ef = EchelonFerrersForm::of(BinaryWord::parse("1001001"));
  CHECK(ef.k() == 3);
  CHECK(ef.diagram().row_lengths() == std::vector<std::size_t>{4, 2});
  CHECK(ef.to_string() == "1**0**0\n0001**0\n0000001");
  CHECK(ef.dot_columns() == std::vector<std::size_t>{1, 2, 4, 5});

  CHECK(EchelonFerrersForm::of(BinaryWord::parse("1110000")).diagram().row_lengths() ==
        std::vector<std::size_t>{4, 4, 4});
  CHECK(EchelonFerrersForm::of(BinaryWord::parse("0000001")).diagram().dots() == 0);
  CHECK(EchelonFerrersForm::of(BinaryWord::parse("0000111")).diagram().empty());
  CHECK_THROWS(EchelonFerrersForm::of(BinaryWord::parse("0000")));

  // Every RREF matrix with identifying vector v is nonzero only at pivots and dots.
  auto gf2 = Field::gf(2);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const Matrix& e : all_rref_matrices(gf2, 6, k)) {
      const auto x = Subspace::from_rref(e);
      const auto form = EchelonFerrersForm::of(x.identifying_vector());
      CHECK(form.diagram().dots() == form.dot_positions().size());
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < 6; ++c) {
          if (c == form.pivots()[r]) continue;
          if (e(r, c) != 0) CHECK(form.is_dot(r, c));
        }
      }
    }
  }
}

TEST_CASE("dimension bounds") {
  const FerrersDiagram a({4, 2, 1, 1});
  CHECK(dim_bound(a, 3) == 1);
  CHECK(corollary_bound(a, 3) == 2);
  CHECK(dim_bound(FerrersDiagram({4, 3, 2, 1}), 3) == 3);
  CHECK(dim_bound(FerrersDiagram({4, 3, 3, 1}), 3) == 4);

  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t eta = 1; eta <= 5; ++eta) {
      for (std::size_t delta = 1; delta <= std::min(m, eta); ++delta) {
        CHECK(dim_bound(FerrersDiagram::full(m, eta), delta) ==
              std::min(m * (eta - delta + 1), eta * (m - delta + 1)));
      }
    }
  }

  for (const auto& rows : all_partitions(5, 5)) {
    const FerrersDiagram f(rows);
    CHECK(dim_bound(f, 1) == f.dots());
    for (std::size_t delta = 1; delta <= 5; ++delta) {
      const auto b = dim_bound(f, delta);
      CHECK(b == naive_bound(f, delta));
      CHECK(b <= corollary_bound(f, delta));
      CHECK(b == dim_bound(conjugate(f), delta));
    }
  }
}

TEST_CASE("identifying vector enumeration") {
  CHECK(enumerate_identifying_vectors(4, 0).size() == 1);
  CHECK(enumerate_identifying_vectors(6, 3).size() == 20);
  const auto seven = enumerate_identifying_vectors(7, 3);
  CHECK(seven.size() == 35);
  CHECK(seven.front().to_string() == "1110000");
  CHECK(seven.back().to_string() == "0000111");
  CHECK(std::is_sorted(seven.rbegin(), seven.rend()));
  const auto up = enumerate_identifying_vectors(7, 3, LexOrder::ascending);
  CHECK(std::equal(up.begin(), up.end(), seven.rbegin()));
  for (const auto& w : seven) CHECK(w.weight() == 3);
  CHECK(enumerate_identifying_vectors(64, 63).size() == 64);
}
