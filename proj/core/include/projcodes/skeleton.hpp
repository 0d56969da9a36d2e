#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "projcodes/binary_word.hpp"
#include "projcodes/ferrers.hpp"

namespace projcodes {

enum class SkeletonKind { lexicode, hamming_fixture, user };

/// Two codewords closer than the declared distance.
class DistanceViolation : public std::runtime_error {
 public:
  DistanceViolation(std::size_t i, std::size_t j, std::size_t distance, std::size_t declared);
  std::size_t first;
  std::size_t second;
  std::size_t distance;
};

/// Binary code whose words are used as identifying vectors.
class SkeletonCode {
 public:
  /// Checks every pair against `declared_distance`; throws DistanceViolation.
  SkeletonCode(std::size_t n, std::size_t declared_distance, std::vector<BinaryWord> words,
               SkeletonKind kind = SkeletonKind::user);

  std::size_t n() const { return n_; }
  std::size_t declared_distance() const { return d_; }
  const std::vector<BinaryWord>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  /// Common weight of all words, if there is one.
  std::optional<std::size_t> constant_weight() const { return weight_; }
  SkeletonKind kind() const { return kind_; }

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<BinaryWord> words_;
  std::optional<std::size_t> weight_;
  SkeletonKind kind_;
};

/// Greedy constant-weight code: scan the weight-k words in `order` and keep
/// each one at distance >= d from everything kept so far.
SkeletonCode lexicode(std::size_t n, std::size_t k, std::size_t d,
                      LexOrder order = LexOrder::descending);

std::vector<std::string> hamming_fixture_names();
/// Words of the fixture code of weight `weight`, or all of them; descending
/// lexicographic order.
SkeletonCode hamming_weight_class(std::string_view fixture, std::optional<std::size_t> weight);

struct SkeletonDecodeResult {
  std::size_t index = 0;
  BinaryWord word;
  std::size_t distance = 0;
  bool ambiguous = false;
};

/// Nearest codeword; ties go to the earlier word and set `ambiguous`.
SkeletonDecodeResult decode_skeleton(const SkeletonCode& s, const BinaryWord& y);

/// Exact pairwise minimum; nothing when there are fewer than two words.
std::optional<std::size_t> min_hamming_distance(const std::vector<BinaryWord>& words);
/// Exact minimum; throws DistanceViolation when below the declared distance.
std::optional<std::size_t> verify_min_distance(const SkeletonCode& s);

}  // namespace projcodes
