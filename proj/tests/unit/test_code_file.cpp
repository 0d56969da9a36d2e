#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "projcodes/code_file.hpp"
#include "projcodes/simulator.hpp"

using namespace projcodes;
using namespace testing_helpers;

namespace {

std::string saved(const SubspaceCode& c, const Construction& how) {
  std::ostringstream out;
  save_code(out, c, how);
  return out.str();
}

LoadedCode loaded(const std::string& text) {
  std::istringstream in(text);
  return load_code(in);
}

}  // namespace

TEST_CASE("code files round trip") {
  const auto ex5 = construct_multilevel(Field::gf(2), lexicode(6, 3, 4), 2);
  const std::string text = saved(ex5, Construction::of(ex5));
  CHECK(text.rfind("projcodes-code v1\nfield 2 1\nn 6\nd 4\nM 71\nkind multilevel\n"
                   "skeleton 111000,100110,010101,001011\ndelta 2\ncodeword 3\n", 0) == 0);
  const auto back = loaded(text);
  CHECK(back.code->size() == 71);
  CHECK(back.construction.delta == 2);
  CHECK(saved(*back.code, back.construction) == text);
  const auto rebuilt = rebuild_multilevel(back);
  CHECK(rebuilt->size() == 71);

  const auto ex6 = construct_multilevel(Field::gf(2), hamming_weight_class("extended_hamming_8_4_4", 4), 2);
  const std::string t6 = saved(ex6, Construction::of(ex6));
  const auto b6 = loaded(t6);
  CHECK(b6.code->size() == 4573);
  CHECK(saved(*b6.code, b6.construction) == t6);

  // GF(4) symbols take two binary digits each.
  auto gf4 = Field::gf(4);
  const auto x = Subspace::span(Matrix::from_rows(gf4, {{1, 2, 3}}, 3));
  const SubspaceCode small(gf4, 3, 1, {x});
  const std::string t4 = saved(small, {});
  CHECK(t4 == "projcodes-code v1\nfield 2 2 1 1 1\nn 3\nd 1\nM 1\nkind bare\ncodeword 1\n011011\n");
  CHECK(loaded(t4).code->words().front() == x);

  const SubspaceCode empty(Field::gf(3), 4, 1, {});
  const auto e = loaded(saved(empty, {}));
  CHECK(e.code->size() == 0);
  CHECK(e.code->field()->size() == 3);

  const auto p = generalized_punctured_family(Field::gf(2), 2, false, true);
  const auto bp = loaded(saved(*p.code, Construction::of(p)));
  const auto rp = rebuild_punctured(bp);
  CHECK(rp.code->size() == 514);
  CHECK(rp.context.v() == p.context.v());
}

TEST_CASE("code file errors") {
  CHECK_THROWS_AS(loaded("projcodes-code v2\n"), FormatError);
  CHECK_THROWS_AS(loaded("projcodes-code v1\nfield 2 1\nn 3\nd 1\nM 1\nkind bare\ncodeword 1\n201\n"), FormatError);
  CHECK_THROWS_AS(loaded("projcodes-code v1\nfield 2 1\nn 3\nd 1\nM 2\nkind bare\ncodeword 1\n001\n"), FormatError);
  CHECK_THROWS_AS(loaded("projcodes-code v1\nfield 2 1\nn 3\nd 1\nM 1\nkind bare\ncodeword 1\n0110\n"), FormatError);
  CHECK_THROWS_AS(loaded("projcodes-code v1\nfield 2 1\nn 3\nd 1\nM 1\nkind bare\ncodeword 2\n110\n100\n"),
                  FormatError);
  CHECK_THROWS_AS(loaded("projcodes-code v1\nfield 2 1\nn 3\nd 1\nM 2\nkind bare\ncodeword 1\n100\ncodeword 1\n100\n"),
                  FormatError);
  // Codewords that the stated construction does not produce.
  const auto bad = loaded(
      "projcodes-code v1\nfield 2 1\nn 6\nd 4\nM 1\nkind multilevel\nskeleton 111000\ndelta 2\ncodeword 1\n100000\n");
  CHECK_THROWS_AS(rebuild_multilevel(bad), FormatError);

  std::istringstream sub("projcodes-subspace v1\nfield 3 1\nn 4\n1200\n2100\n0012\n");
  const auto s = load_subspace(sub);
  CHECK(s.dim() == 2);
  std::ostringstream out;
  save_subspace(out, s);
  CHECK(out.str() == "projcodes-subspace v1\nfield 3 1\nn 4\n1200\n0012\n");
}

TEST_CASE("operator channel simulation") {
  std::mt19937_64 rng(53);
  auto gf3 = Field::gf(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_subspace(gf3, 6, 3, rng);
    const std::size_t rho = rng() % 4;
    const std::size_t t = rng() % 4;
    const auto y = operator_channel(x, t, rho, rng);
    CHECK(y.dim() == 3 - rho + t);
    CHECK(intersection(x, y).dim() == 3 - rho);
    CHECK(subspace_distance(x, y) == rho + t);
  }
  CHECK_THROWS(operator_channel(random_subspace(gf3, 4, 2, rng), 3, 0, rng));

  const auto ex5 = construct_multilevel(Field::gf(2), lexicode(6, 3, 4), 2);
  const Decoder dec = [&](const Subspace& y) { return decode_multilevel(ex5, y); };
  // 4t + 2 rho < d = 4 leaves t = 0, rho <= 1.
  for (std::size_t rho : {0u, 1u}) {
    const auto r = simulate(ex5, dec, {0, rho, 9}, 2000);
    CHECK(r.trials == 2000);
    CHECK(r.success_rate() == 1.0);
  }
  const auto a = simulate(ex5, dec, {1, 0, 9}, 500);
  const auto b = simulate(ex5, dec, {1, 0, 9}, 500);
  CHECK(a.successes == b.successes);
  CHECK(a.success_rate() <= 1.0);
}
