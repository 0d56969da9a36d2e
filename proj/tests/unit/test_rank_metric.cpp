#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "projcodes/rank_metric.hpp"

using namespace projcodes;
using namespace testing_helpers;

namespace {

std::size_t oracle_size(const RankCode& code) {
  return oracle::span_mod_p(rows_of(code.flattened()), static_cast<int>(code.field()->size()),
                            code.rows() * code.cols())
      .size();
}

Matrix outer(const FieldPtr& f, const std::vector<Elem>& u, const std::vector<Elem>& v) {
  Matrix m(f, u.size(), v.size());
  for (std::size_t r = 0; r < u.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = f->mul(u[r], v[c]);
  }
  return m;
}

std::vector<Elem> random_nonzero_vector(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(f->size() - 1));
  while (true) {
    std::vector<Elem> v(n);
    for (auto& x : v) x = dist(rng);
    if (std::any_of(v.begin(), v.end(), [](Elem x) { return x != 0; })) return v;
  }
}

}  // namespace

TEST_CASE("rank distance") {
  auto gf2 = Field::gf(2);
  std::mt19937_64 rng(1);
  const Matrix a = random_matrix(gf2, 3, 4, rng);
  CHECK(rank_distance(a, a) == 0);
  CHECK(rank_distance(a, a + outer(gf2, {1, 0, 1}, {0, 1, 1, 0})) == 1);
  CHECK_THROWS(rank_distance(a, Matrix(gf2, 4, 3)));
  auto gf3 = Field::gf(3);
  for (int i = 0; i < 200; ++i) {
    const Matrix x = random_matrix(gf3, 3, 4, rng);
    const Matrix y = random_matrix(gf3, 3, 4, rng);
    const Matrix z = random_matrix(gf3, 3, 4, rng);
    CHECK(rank_distance(x, y) == rank_distance(y, x));
    CHECK(rank_distance(x, z) <= rank_distance(x, y) + rank_distance(y, z));
    CHECK(static_cast<int>(rank_distance(x, y)) == oracle::rank_mod_p(rows_of(x - y), 3));
  }
}

TEST_CASE("linearized polynomials") {
  auto ext = extension_field(Field::gf(2), 4);
  const LinearizedPoly a(ext, {3, 0, 1});
  const LinearizedPoly b(ext, {5, 1});
  const auto ab = compose(a, b);
  for (Elem x = 0; x < 16; ++x) {
    CHECK(ab(x) == a(b(x)));
    for (Elem y = 0; y < 16; ++y) CHECK(a(ext->add(x, y)) == ext->add(a(x), a(y)));
  }
  const auto back = right_divide(ab, a);
  REQUIRE(back.has_value());
  CHECK(back->coeffs()[0] == 5);
  CHECK(back->coeffs()[1] == 1);
  CHECK_FALSE(right_divide(LinearizedPoly(ext, {1, 1, 0, 1}), LinearizedPoly(ext, {0, 0, 1})).has_value());
}

TEST_CASE("Gabidulin codes are MRD") {
  auto gf2 = Field::gf(2);
  {
    const auto code = gabidulin(extension_field(gf2, 3), 2).to_rank_code();
    CHECK(code.size() == 64);
    CHECK(oracle_size(code) == 64);
    CHECK(oracle_min_rank(code) == 2);
  }
  {
    const auto code = gabidulin(extension_field(gf2, 4), 2).to_rank_code();
    CHECK(code.size() == 256);
    CHECK(oracle_min_rank(code) == 3);
  }
  {
    const auto code = gabidulin(extension_field(gf2, 3), 3).to_rank_code();
    CHECK(code.dimension() == 9);
    CHECK(oracle_min_rank(code) == 1);
  }
  for (auto [q, max_m] : {std::pair{2, 4}, std::pair{3, 3}}) {
    auto f = Field::gf(static_cast<std::uint64_t>(q));
    for (std::size_t m = 1; m <= static_cast<std::size_t>(max_m); ++m) {
      for (std::size_t k = 1; k <= m; ++k) {
        for (auto form : {GabidulinForm::evaluation, GabidulinForm::q_cyclic}) {
          const auto g = gabidulin(extension_field(f, static_cast<unsigned>(m)), k, form);
          const auto code = g.to_rank_code();
          CHECK(code.dimension() == m * k);
          CHECK(min_rank_distance(code) == m - k + 1);
          if (q == 2 && m <= 3) CHECK(oracle_min_rank(code) == m - k + 1);
        }
      }
    }
  }
  CHECK_THROWS(GabidulinCode::evaluation(extension_field(gf2, 3), 0));
  CHECK_THROWS(GabidulinCode::evaluation(extension_field(gf2, 3), 4));
}

TEST_CASE("stepped generator shape") {
  auto ext = extension_field(Field::gf(2), 4);
  const auto g = GabidulinCode::q_cyclic(ext, 2);
  const auto& gen = g.generator();
  for (std::size_t c = 0; c + 1 < 4; ++c) CHECK(gen(1, c + 1) == ext->frobenius(gen(0, c)));
  CHECK(gen(1, 0) == 0);
}

TEST_CASE("truncation") {
  auto gf2 = Field::gf(2);
  const auto g = gabidulin(extension_field(gf2, 4), 2);
  const auto same = truncate(g, 4);
  CHECK(same.dimension() == 8);
  CHECK(same.flattened() == g.to_rank_code().flattened());
  const auto t3 = truncate(g, 3);
  CHECK(t3.dimension() == 4);
  CHECK(oracle_min_rank(t3) == 3);
  CHECK(truncate(g, 2).dimension() == 0);
  CHECK_THROWS(truncate(g, 5));
}

TEST_CASE("Ferrers diagram rank-metric codes") {
  auto gf2 = Field::gf(2);
  const auto full = ferrers_rank_code(gf2, FerrersDiagram::full(3, 3), 2);
  CHECK(full.code->dimension() == 6);
  CHECK(full.code->size() == 64);
  CHECK(ferrers_rank_code(gf2, FerrersDiagram({3, 1, 1}), 2).code->size() == 4);
  CHECK(ferrers_rank_code(gf2, FerrersDiagram({2, 1}), 2).code->size() == 2);
  CHECK(ferrers_rank_code(gf2, FerrersDiagram(), 2).code->size() == 1);

  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t nk = k; nk <= 5; ++nk) {
      for (std::size_t delta = 1; delta <= k; ++delta) {
        const auto c = ferrers_rank_code(gf2, FerrersDiagram::full(k, nk), delta);
        CHECK(c.code->dimension() == nk * (k - delta + 1));
      }
    }
  }

  const auto wide = ferrers_rank_code(gf2, FerrersDiagram({4, 2, 1, 1}), 3);
  CHECK(wide.bound == 1);
  CHECK(wide.code->dimension() <= 1);

  const auto too_far = ferrers_rank_code(gf2, FerrersDiagram({3, 3}), 3);
  CHECK(too_far.distance_unreachable);
  CHECK(too_far.code->dimension() == 0);
}

TEST_CASE("Ferrers codes respect the pattern, the bound and the distance") {
  for (auto q : {2, 3}) {
    auto f = Field::gf(static_cast<std::uint64_t>(q));
    for (const auto& rows : all_partitions(4, 4)) {
      const FerrersDiagram diagram(rows);
      for (std::size_t delta = 2; delta <= 3; ++delta) {
        const auto c = build_ferrers_rank_code(f, diagram, delta);
        const auto& code = *c.code;
        CHECK(code.dimension() <= c.bound);
        const auto tall = diagram.rows() < diagram.cols() ? conjugate(diagram) : diagram;
        const auto gamma = tall.column_counts();
        bool full = delta - 1 <= tall.cols();
        for (std::size_t i = 0; full && i + 1 < delta; ++i) full = gamma[tall.cols() - 1 - i] == tall.rows();
        CHECK(c.hypothesis == full);
        if (full) {
          std::size_t expect = 0;
          for (std::size_t i = 0; i + delta <= tall.cols(); ++i) expect += gamma[i];
          CHECK(code.dimension() == expect);
        }
        if (delta == 2) CHECK(code.dimension() == c.bound);
        for (const Matrix& b : code.basis()) {
          for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t col = 0; col < b.cols(); ++col) {
              if (!diagram.contains(r, col)) CHECK(b(r, col) == 0);
            }
          }
        }
        if (code.dimension() > 0 && code.dimension() <= 10) {
          CHECK(oracle_min_rank(code) >= delta);
        }
      }
    }
  }
}

TEST_CASE("distance methods agree") {
  std::mt19937_64 rng(99);
  for (auto q : {2, 3}) {
    auto f = Field::gf(static_cast<std::uint64_t>(q));
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 2 + rng() % 3;
      const std::size_t cols = 2 + rng() % 3;
      const std::size_t dim = 1 + rng() % 4;
      const Matrix flat = random_matrix(f, dim, rows * cols, rng);
      auto red = rref(flat);
      std::vector<Matrix> basis;
      for (std::size_t r = 0; r < red.rank; ++r) {
        const auto row = red.matrix.row(r);
        basis.emplace_back(f, rows, cols, std::vector<Elem>(row.begin(), row.end()));
      }
      const RankCode code(f, rows, cols, basis, 1);
      const auto a = min_rank_distance(code, DistanceMethod::enumerate);
      const auto b = min_rank_distance(code, DistanceMethod::grassmannian);
      CHECK(a == b);
      if (a) CHECK(*a == oracle_min_rank(code));
    }
  }
}

TEST_CASE("fixture bases") {
  const auto one = load_fixture_code("ferrers1_d3_dim3");
  CHECK(one.dimension() == 3);
  CHECK(one.diagram()->row_lengths() == std::vector<std::size_t>{4, 3, 2, 1});
  CHECK(oracle_min_rank(one) == 3);
  CHECK(min_rank_distance(one) == 3);
  const auto two = load_fixture_code("ferrers2_d3_dim4");
  CHECK(two.dimension() == 4);
  CHECK(oracle_min_rank(two) == 3);
  CHECK(two.basis()[0] == Matrix::parse(Field::gf(2), {"0100", "0010", "0000", "0001"}));
  CHECK(two.basis()[3] == Matrix::parse(Field::gf(2), {"1010", "0001", "0101", "0000"}));
  CHECK_THROWS(load_fixture_code("nope"));

  // The cache prefers the larger of the kernel construction and a fixture.
  auto gf2 = Field::gf(2);
  for (const auto& fx : {one, two}) {
    const auto c = ferrers_rank_code(gf2, *fx.diagram(), 3);
    CHECK(c.code->dimension() >= fx.dimension());
    CHECK(c.code->dimension() == c.bound);
  }
}

TEST_CASE("encoding is linear and injective") {
  auto gf3 = Field::gf(3);
  const auto code = *ferrers_rank_code(gf3, FerrersDiagram({3, 3, 2}), 2).code;
  const std::size_t dim = code.dimension();
  CHECK(code.encode(std::vector<Elem>(dim, 0)).is_zero());
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Elem> unit(dim, 0);
    unit[i] = 1;
    CHECK(code.encode(unit) == code.basis()[i]);
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    std::vector<Elem> a(dim), b(dim), s(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      a[i] = static_cast<Elem>(rng() % 3);
      b[i] = static_cast<Elem>(rng() % 3);
      s[i] = gf3->add(a[i], b[i]);
    }
    CHECK(code.encode(s) == code.encode(a) + code.encode(b));
    CHECK(code.message_of(code.encode(a)) == a);
  }
  CHECK_THROWS(code.encode(std::vector<Elem>(dim + 1, 0)));
}

TEST_CASE("rank decoding agrees with the reference search") {
  std::mt19937_64 rng(2024);
  struct Case {
    std::uint64_t q;
    std::vector<std::size_t> rows;
    std::size_t delta;
  };
  const std::vector<Case> cases = {
      {2, {4, 4, 4}, 3}, {2, {4, 3, 3, 2}, 3}, {2, {5, 5, 5, 5}, 4}, {2, {3, 3, 3}, 3},
      {3, {3, 3, 3}, 3}, {2, {4, 4, 3}, 2},    {2, {2, 2, 2, 2, 1}, 2}, {4, {3, 3}, 2},
  };
  for (const auto& cs : cases) {
    auto f = Field::gf(cs.q);
    const auto code = *ferrers_rank_code(f, FerrersDiagram(cs.rows), cs.delta).code;
    REQUIRE(code.embedding().has_value());
    const std::size_t t = (cs.delta - 1) / 2;
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Elem> msg(code.dimension());
      for (auto& x : msg) x = static_cast<Elem>(rng() % cs.q);
      const Matrix a = code.encode(msg);
      CHECK(decode_rank(code, a).codeword == a);
      Matrix r = a;
      const std::size_t errs = rng() % (t + 2);
      for (std::size_t e = 0; e < errs; ++e) {
        r = r + outer(f, random_nonzero_vector(f, code.rows(), rng), random_nonzero_vector(f, code.cols(), rng));
      }
      const auto fast = decode_rank(code, r);
      const auto slow = decode_rank_reference(code, r);
      CHECK(fast.success == slow.success);
      if (slow.success) {
        CHECK(fast.codeword == slow.codeword);
        CHECK_FALSE(slow.ambiguous);
      }
      if (rank_distance(r, a) <= t) CHECK(fast.codeword == a);
    }
  }
}

TEST_CASE("decoding at the ambiguity radius") {
  auto gf2 = Field::gf(2);
  const auto code = gabidulin(extension_field(gf2, 3), 2).to_rank_code();
  // Find a rank-2 codeword B = u1 v1^T + u2 v2^T; R = u1 v1^T is at rank
  // distance 1 from both 0 and B.
  Matrix b;
  for_each_codeword(code, [&](std::span<const Elem> w) {
    Matrix m(gf2, 3, 3, std::vector<Elem>(w.begin(), w.end()));
    if (b.rows() == 0 && rank(m) == 2) b = m;
  });
  REQUIRE(b.rows() == 3);
  auto red = rref(b);
  // b = C * R where R are the two nonzero RREF rows; take the first term.
  const auto rows = red.matrix.top_rows(2);
  Matrix r(gf2, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto coeffs = solve_in_row_space(rows, b.row(i));
    REQUIRE(coeffs.has_value());
    for (std::size_t c = 0; c < 3; ++c) r(i, c) = gf2->mul((*coeffs)[0], rows(0, c));
  }
  CHECK(rank_distance(r, Matrix(gf2, 3, 3)) == 1);
  CHECK(rank_distance(r, b) == 1);
  const auto ref = decode_rank_reference(code, r);
  CHECK(ref.distance == 1);
  CHECK(ref.ambiguous);
  CHECK_FALSE(ref.success);
  CHECK_FALSE(decode_rank(code, r).success);
}
