#include <benchmark/benchmark.h>

#include <random>

#include "projcodes/multilevel.hpp"
#include "projcodes/puncturing.hpp"
#include "projcodes/rank_metric.hpp"
#include "projcodes/simulator.hpp"

using namespace projcodes;

namespace {

const SkeletonCode& weight4_class() {
  static const auto s = hamming_weight_class("extended_hamming_8_4_4", 4);
  return s;
}

const std::shared_ptr<const SubspaceCode>& code_4573() {
  static const auto c =
      std::make_shared<const SubspaceCode>(construct_multilevel(Field::gf(2), weight4_class(), 2));
  return c;
}

void BM_RrefSpan(benchmark::State& state) {
  const auto f = Field::gf(static_cast<std::uint64_t>(state.range(0)));
  std::mt19937_64 rng(1);
  Matrix m(f, 8, 16);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 16; ++c) m(r, c) = static_cast<Elem>(rng() % f->size());
  }
  for (auto _ : state) benchmark::DoNotOptimize(Subspace::span(m));
}
BENCHMARK(BM_RrefSpan)->Arg(2)->Arg(3)->Arg(4)->Arg(16);

void BM_Construct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construct_multilevel(Field::gf(2), weight4_class(), 2));
}
BENCHMARK(BM_Construct)->Unit(benchmark::kMillisecond);

void BM_SizeTable(benchmark::State& state) {
  const auto s = lexicode(13, 4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(code_size_analytic(Field::gf(2), s, 3));
}
BENCHMARK(BM_SizeTable)->Unit(benchmark::kMillisecond);

void BM_VerifyExhaustive(benchmark::State& state) {
  VerifyOptions opts;
  opts.force_exhaustive = true;
  for (auto _ : state) benchmark::DoNotOptimize(verify_code(*code_4573(), opts));
}
BENCHMARK(BM_VerifyExhaustive)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_GabidulinDecode(benchmark::State& state) {
  const auto ext = extension_field(Field::gf(2), 8);
  const auto g = gabidulin(ext, 4);
  std::mt19937_64 rng(2);
  std::vector<Elem> msg(4);
  for (auto& x : msg) x = static_cast<Elem>(rng() % ext->size());
  auto word = g.encode(msg);
  word[1] ^= 1;
  word[5] ^= 3;
  for (auto _ : state) benchmark::DoNotOptimize(g.decode(word));
}
BENCHMARK(BM_GabidulinDecode);

void BM_MultilevelDecode(benchmark::State& state) {
  const auto& code = *code_4573();
  std::mt19937_64 rng(3);
  std::vector<Subspace> received;
  for (int i = 0; i < 256; ++i) {
    received.push_back(operator_channel(code.codeword_at(rng() % code.size()), 0, 1, rng));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decode_multilevel(code, received[i++ % received.size()]));
}
BENCHMARK(BM_MultilevelDecode);

void BM_Puncture(benchmark::State& state) {
  const auto ctx = PuncturingContext::standard(Field::gf(2), {1, 0, 0, 0, 0, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(puncture_code(code_4573(), ctx, true));
}
BENCHMARK(BM_Puncture)->Unit(benchmark::kMillisecond);

void BM_ContextSearchSampled(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_context_search(*code_4573(), SearchStrategy::sampled, 64, 1));
  }
}
BENCHMARK(BM_ContextSearchSampled)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
