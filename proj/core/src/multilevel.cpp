#include "projcodes/multilevel.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace projcodes {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw std::overflow_error("code size exceeds 64 bits");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("code size exceeds 64 bits");
  return a + b;
}

std::uint64_t power(std::uint64_t q, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) out = checked_mul(out, q);
  return out;
}

bool can_pack(const FieldPtr& f, std::size_t n) { return f->size() == 2 && n <= 64; }

std::size_t radius(const SubspaceCode& code) { return (code.declared_distance() - 1) / 2; }

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("PROJCODES_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Subspace lift(const FieldPtr& field, const BinaryWord& v, const Matrix& a) {
  if (v.weight() == 0) return Subspace::zero(field, v.size());
  const auto form = EchelonFerrersForm::of(v);
  const auto& f = form.diagram();
  if (a.rows() != f.rows() || a.cols() != f.cols()) {
    throw std::invalid_argument("matrix shape does not match the Ferrers diagram");
  }
  Matrix g(field, form.k(), v.size());
  for (std::size_t r = 0; r < form.k(); ++r) g(r, form.pivots()[r]) = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      if (!f.contains(r, c)) throw std::invalid_argument("matrix is nonzero off the Ferrers diagram");
      g(r, form.dot_columns()[c]) = a(r, c);
    }
  }
  return Subspace::from_rref(std::move(g));
}

std::uint64_t CodeBlock::size() const {
  if (!rank_code) return 1;
  return rank_code->size();
}

Subspace CodeBlock::codeword(const FieldPtr& field, std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("block codeword index");
  if (!rank_code) return Subspace::zero(field, identifying_vector.size());
  std::vector<Elem> message(rank_code->dimension());
  for (auto& m : message) {
    m = static_cast<Elem>(index % field->size());
    index /= field->size();
  }
  return lift(field, identifying_vector, rank_code->encode(message));
}

SubspaceCode::SubspaceCode(FieldPtr field, std::size_t n, std::size_t declared_distance,
                           std::vector<Subspace> words)
    : field_(std::move(field)), n_(n), d_(declared_distance), words_(std::move(words)) {
  for (const auto& w : words_) {
    if (w.ambient_dim() != n_ || !w.field()->same_as(*field_)) throw std::invalid_argument("codeword over the wrong space");
  }
  std::vector<const Subspace*> order;
  for (const auto& w : words_) order.push_back(&w);
  std::sort(order.begin(), order.end(), [](const Subspace* a, const Subspace* b) { return *a < *b; });
  if (std::adjacent_find(order.begin(), order.end(),
                         [](const Subspace* a, const Subspace* b) { return *a == *b; }) != order.end()) {
    throw std::invalid_argument("duplicate codeword");
  }
  offsets_ = {0, words_.size()};
  finish();
}

SubspaceCode::SubspaceCode(FieldPtr field, std::size_t n, std::size_t declared_distance, MultilevelInfo info,
                           std::uint64_t materialize_limit)
    : field_(std::move(field)), n_(n), d_(declared_distance), info_(std::move(info)) {
  std::uint64_t total = 0;
  for (const auto& b : info_->blocks) total = checked_add(total, b.size());
  materialized_ = total <= materialize_limit;
  if (materialized_) {
    words_.reserve(total);
    for (const auto& b : info_->blocks) {
      offsets_.push_back(words_.size());
      for (std::uint64_t i = 0; i < b.size(); ++i) words_.push_back(b.codeword(field_, i));
    }
    offsets_.push_back(words_.size());
  }
  finish();
  size_ = total;
}

void SubspaceCode::finish() {
  size_ = words_.size();
  if (materialized_ && can_pack(field_, n_)) {
    packed_.reserve(words_.size());
    for (const auto& w : words_) packed_.push_back(PackedSubspace::pack(w));
  }
  std::optional<std::size_t> dim;
  bool same = true;
  auto note = [&](std::size_t k) {
    if (!dim) dim = k;
    else if (*dim != k) same = false;
  };
  if (info_) {
    for (const auto& b : info_->blocks) note(b.identifying_vector.weight());
  } else {
    for (const auto& w : words_) note(w.dim());
  }
  if (same) constant_dim_ = dim;
}

Subspace SubspaceCode::codeword_at(std::uint64_t i) const {
  if (i >= size_) throw std::out_of_range("codeword index");
  if (materialized_) return words_[i];
  for (const auto& b : info_->blocks) {
    if (i < b.size()) return b.codeword(field_, i);
    i -= b.size();
  }
  throw std::logic_error("block sizes do not add up");
}

void SubspaceCode::for_each(const std::function<void(const Subspace&)>& visit) const {
  if (materialized_) {
    for (const auto& w : words_) visit(w);
    return;
  }
  for (const auto& b : info_->blocks) {
    for (std::uint64_t i = 0; i < b.size(); ++i) visit(b.codeword(field_, i));
  }
}

SubspaceCode SubspaceCode::bare() const {
  if (!materialized_) throw std::invalid_argument("code is too large to list");
  return SubspaceCode(field_, n_, d_, words_);
}

SubspaceCode construct_multilevel(const FieldPtr& field, const SkeletonCode& skeleton, std::size_t delta,
                                  std::uint64_t materialize_limit) {
  if (delta == 0) throw std::invalid_argument("delta must be positive");
  const auto actual = min_hamming_distance(skeleton.words()).value_or(std::numeric_limits<std::size_t>::max());
  std::size_t declared = 2 * delta;
  if (actual < 2 * delta) {
    if (skeleton.constant_weight()) {
      throw std::invalid_argument("skeleton distance " + std::to_string(actual) + " is below 2*delta");
    }
    declared = actual;
  }
  MultilevelInfo info;
  info.skeleton = std::make_shared<const SkeletonCode>(skeleton);
  info.delta = delta;
  for (const auto& v : skeleton.words()) {
    CodeBlock b;
    b.identifying_vector = v;
    if (v.weight() > 0) {
      b.form = EchelonFerrersForm::of(v);
      const FerrersCode fc = ferrers_rank_code(field, b.form->diagram(), delta);
      b.rank_code = fc.code;
      b.bound = fc.bound;
      b.hypothesis = fc.hypothesis;
      b.from_fixture = fc.from_fixture;
    }
    info.blocks.push_back(std::move(b));
  }
  return SubspaceCode(field, skeleton.n(), declared, std::move(info), materialize_limit);
}

SizeTable code_size_analytic(const FieldPtr& field, const SkeletonCode& skeleton, std::size_t delta) {
  SizeTable table;
  for (const auto& v : skeleton.words()) {
    BlockDimension row;
    row.identifying_vector = v;
    if (v.weight() > 0) {
      const FerrersDiagram f = EchelonFerrersForm::of(v).diagram();
      const FerrersDiagram tall = f.rows() < f.cols() ? conjugate(f) : f;
      row.bound = dim_bound(f, delta);
      if (!f.empty() && delta <= tall.cols()) {
        if (rightmost_columns_full(tall, delta)) {
          const auto gamma = tall.column_counts();
          for (std::size_t i = 0; i < tall.cols() - delta + 1; ++i) row.dimension += gamma[i];
          row.hypothesis = true;
        } else {
          const FerrersCode fc = ferrers_rank_code(field, f, delta);
          row.dimension = fc.code->dimension();
          row.from_fixture = fc.from_fixture;
        }
      }
    }
    row.size = power(field->size(), row.dimension);
    table.total = checked_add(table.total, row.size);
    table.shortfall += row.bound - std::min(row.bound, row.dimension);
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

SubspaceDecodeResult search_block(const SubspaceCode& code, std::size_t block, const Subspace& y) {
  SubspaceDecodeResult best;
  best.block = block;
  best.path = DecodePath::block_search;
  best.distance = std::numeric_limits<std::size_t>::max();
  auto consider = [&](std::size_t d, auto&& make) {
    if (d < best.distance) {
      best.distance = d;
      best.codeword = make();
      best.ambiguous = false;
    } else if (d == best.distance) {
      best.ambiguous = true;
    }
  };
  if (code.materialized()) {
    const std::size_t lo = code.block_offsets()[block];
    const std::size_t hi = code.block_offsets()[block + 1];
    if (!code.packed().empty()) {
      const auto py = PackedSubspace::pack(y);
      for (std::size_t i = lo; i < hi; ++i) {
        consider(packed_distance(code.packed()[i], py), [&] { return code.words()[i]; });
      }
    } else {
      for (std::size_t i = lo; i < hi; ++i) {
        consider(subspace_distance(code.words()[i], y), [&] { return code.words()[i]; });
      }
    }
  } else {
    const auto& b = code.multilevel()->blocks[block];
    for (std::uint64_t i = 0; i < b.size(); ++i) {
      Subspace x = b.codeword(code.field(), i);
      consider(subspace_distance(x, y), [&] { return x; });
    }
  }
  return best;
}

// Rank-metric decoding of Y against block b when Y reduces to [I | R] after
// moving the pivot columns of EF(v) to the front.
std::optional<SubspaceDecodeResult> decode_aligned(const SubspaceCode& code, std::size_t block,
                                                   const Subspace& y) {
  const auto& b = code.multilevel()->blocks[block];
  if (!b.form || !b.rank_code || b.rank_code->dimension() == 0) return std::nullopt;
  const auto& form = *b.form;
  const std::size_t k = form.k();
  if (y.dim() != k) return std::nullopt;
  const auto order = form.alignment();
  const RrefResult aligned = rref(y.generator().select_columns(order));
  for (std::size_t i = 0; i < k; ++i) {
    if (aligned.pivots[i] != i) return std::nullopt;
  }
  std::vector<std::size_t> slot(code.n(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) slot[order[i]] = i;
  const auto& f = form.diagram();
  Matrix received(code.field(), f.rows(), f.cols());
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) received(r, c) = aligned.matrix(r, slot[form.dot_columns()[c]]);
  }
  SubspaceDecodeResult out;
  out.block = block;
  out.path = DecodePath::algebraic;
  const RankDecodeResult rd = decode_rank(*b.rank_code, received);
  if (!rd.success) return out;
  out.codeword = lift(code.field(), b.identifying_vector, *rd.codeword);
  out.distance = subspace_distance(*out.codeword, y);
  out.ambiguous = rd.ambiguous;
  return out;
}

}  // namespace

SubspaceDecodeResult decode_multilevel(const SubspaceCode& code, const Subspace& y) {
  if (!code.multilevel()) throw std::invalid_argument("code has no construction metadata");
  if (y.ambient_dim() != code.n() || !y.field()->same_as(*code.field())) {
    throw std::invalid_argument("received subspace over the wrong space");
  }
  const auto& info = *code.multilevel();
  const SkeletonDecodeResult s = decode_skeleton(*info.skeleton, y.identifying_vector());
  const auto& b = info.blocks[s.index];

  SubspaceDecodeResult out;
  if (b.size() == 1) {
    out.block = s.index;
    out.path = DecodePath::trivial;
    out.codeword = b.codeword(code.field(), 0);
    out.distance = subspace_distance(*out.codeword, y);
  } else if (auto aligned = decode_aligned(code, s.index, y)) {
    out = std::move(*aligned);
  } else {
    out = search_block(code, s.index, y);
  }
  out.ambiguous = out.ambiguous || s.ambiguous;
  out.success = out.codeword.has_value() && out.distance <= radius(code);
  if (!out.success) out.codeword.reset();
  return out;
}

SubspaceDecodeResult nearest_codeword(const SubspaceCode& code, const Subspace& y) {
  SubspaceDecodeResult best;
  best.path = DecodePath::block_search;
  best.distance = std::numeric_limits<std::size_t>::max();
  std::optional<PackedSubspace> py;
  if (!code.packed().empty()) py = PackedSubspace::pack(y);
  std::size_t i = 0;
  code.for_each([&](const Subspace& x) {
    const std::size_t d = py ? packed_distance(code.packed()[i], *py) : subspace_distance(x, y);
    if (d < best.distance) {
      best.distance = d;
      best.codeword = x;
      best.ambiguous = false;
      best.block = i;
    } else if (d == best.distance) {
      best.ambiguous = true;
    }
    ++i;
  });
  best.success = best.codeword.has_value() && best.distance <= radius(code);
  return best;
}

VerifyReport verify_code(const SubspaceCode& code, const VerifyOptions& options) {
  if (!code.materialized()) throw std::invalid_argument("verification needs a listed code");
  const auto& words = code.words();
  const auto& packed = code.packed();
  const std::uint64_t m = words.size();
  VerifyReport report;
  report.size = m;
  const std::uint64_t all_pairs = m < 2 ? 0 : m * (m - 1) / 2;
  auto distance = [&](std::size_t i, std::size_t j) {
    return packed.empty() ? subspace_distance(words[i], words[j]) : packed_distance(packed[i], packed[j]);
  };
  const std::size_t declared = code.declared_distance();

  if (all_pairs <= options.exhaustive_pair_limit || options.force_exhaustive) {
    report.pairs = all_pairs;
    std::mutex mutex;
    detail::parallel_for(m, [&](std::size_t i) {
      std::optional<std::size_t> local;
      std::optional<std::pair<std::uint64_t, std::uint64_t>> bad;
      for (std::size_t j = i + 1; j < m; ++j) {
        const std::size_t d = distance(i, j);
        if (!local || d < *local) local = d;
        if (!bad && d < declared) bad = std::pair<std::uint64_t, std::uint64_t>{i, j};
      }
      std::lock_guard lock(mutex);
      if (local && (!report.min_distance || *local < *report.min_distance)) report.min_distance = local;
      if (bad && (!report.violation || *bad < *report.violation)) report.violation = bad;
    });
    return report;
  }

  report.exhaustive = false;
  report.pairs = options.samples;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, m - 1);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    std::uint64_t i = pick(rng);
    std::uint64_t j = pick(rng);
    while (j == i) j = pick(rng);
    if (j < i) std::swap(i, j);
    const std::size_t d = distance(i, j);
    if (!report.min_distance || d < *report.min_distance) report.min_distance = d;
    if (!report.violation && d < declared) report.violation = std::pair{i, j};
  }
  return report;
}

}  // namespace projcodes
