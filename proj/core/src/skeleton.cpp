#include "projcodes/skeleton.hpp"

#include <algorithm>
#include <sstream>

#include "fixture_data.hpp"

namespace projcodes {

namespace {

std::string violation_text(std::size_t i, std::size_t j, std::size_t distance, std::size_t declared) {
  std::ostringstream s;
  s << "codewords " << i << " and " << j << " are at Hamming distance " << distance
    << " < " << declared;
  return s.str();
}

// First pair below `bound`, if any.
std::optional<std::pair<std::size_t, std::size_t>> close_pair(const std::vector<BinaryWord>& w,
                                                              std::size_t bound) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (hamming_distance(w[i], w[j]) < bound) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace

DistanceViolation::DistanceViolation(std::size_t i, std::size_t j, std::size_t d, std::size_t declared)
    : std::runtime_error(violation_text(i, j, d, declared)), first(i), second(j), distance(d) {}

SkeletonCode::SkeletonCode(std::size_t n, std::size_t declared_distance, std::vector<BinaryWord> words,
                           SkeletonKind kind)
    : n_(n), d_(declared_distance), words_(std::move(words)), kind_(kind) {
  for (const auto& w : words_) {
    if (w.size() != n_) throw std::invalid_argument("skeleton word length mismatch");
  }
  if (auto bad = close_pair(words_, d_)) {
    auto [i, j] = *bad;
    throw DistanceViolation(i, j, hamming_distance(words_[i], words_[j]), d_);
  }
  if (!words_.empty()) {
    const auto k = words_.front().weight();
    if (std::all_of(words_.begin(), words_.end(), [&](const BinaryWord& w) { return w.weight() == k; })) {
      weight_ = k;
    }
  }
}

SkeletonCode lexicode(std::size_t n, std::size_t k, std::size_t d, LexOrder order) {
  if (k == 0 || k > n) throw std::invalid_argument("lexicode needs 0 < k <= n");
  if (d % 2 != 0) throw std::invalid_argument("constant-weight distance must be even");
  std::vector<BinaryWord> kept;
  for (const auto& w : enumerate_identifying_vectors(n, k, order)) {
    const bool fits = std::all_of(kept.begin(), kept.end(),
                                  [&](const BinaryWord& c) { return hamming_distance(c, w) >= d; });
    if (fits) kept.push_back(w);
  }
  return SkeletonCode(n, d, std::move(kept), SkeletonKind::lexicode);
}

std::vector<std::string> hamming_fixture_names() { return {"extended_hamming_8_4_4", "hamming_7_4_3"}; }

SkeletonCode hamming_weight_class(std::string_view fixture, std::optional<std::size_t> weight) {
  const auto names = hamming_fixture_names();
  if (std::find(names.begin(), names.end(), fixture) == names.end()) {
    throw std::invalid_argument("unknown fixture: " + std::string(fixture));
  }
  std::istringstream in{std::string(detail::fixture_text(fixture))};
  std::vector<BinaryWord> checks;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    checks.push_back(BinaryWord::parse(line));
  }
  const std::size_t n = checks.front().size();
  const std::size_t d = fixture == "hamming_7_4_3" ? 3 : 4;

  std::vector<BinaryWord> words;
  for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
    const BinaryWord w(n, bits);
    const bool in_code = std::all_of(checks.begin(), checks.end(), [&](const BinaryWord& h) {
      return std::popcount(h.bits() & bits) % 2 == 0;
    });
    if (in_code && (!weight || w.weight() == *weight)) words.push_back(w);
  }
  std::reverse(words.begin(), words.end());
  return SkeletonCode(n, d, std::move(words), SkeletonKind::hamming_fixture);
}

SkeletonDecodeResult decode_skeleton(const SkeletonCode& s, const BinaryWord& y) {
  if (y.size() != s.n()) throw std::invalid_argument("received word length mismatch");
  if (s.words().empty()) throw std::invalid_argument("empty skeleton");
  SkeletonDecodeResult best;
  best.distance = SIZE_MAX;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto d = hamming_distance(s.words()[i], y);
    if (d < best.distance) {
      best = {i, s.words()[i], d, false};
    } else if (d == best.distance) {
      best.ambiguous = true;
    }
  }
  return best;
}

std::optional<std::size_t> min_hamming_distance(const std::vector<BinaryWord>& words) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const auto d = hamming_distance(words[i], words[j]);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

std::optional<std::size_t> verify_min_distance(const SkeletonCode& s) {
  if (auto bad = close_pair(s.words(), s.declared_distance())) {
    auto [i, j] = *bad;
    throw DistanceViolation(i, j, hamming_distance(s.words()[i], s.words()[j]), s.declared_distance());
  }
  return min_hamming_distance(s.words());
}

}  // namespace projcodes
