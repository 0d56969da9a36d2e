#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "projcodes/ferrers.hpp"
#include "projcodes/rank_metric.hpp"
#include "projcodes/skeleton.hpp"
#include "projcodes/subspace.hpp"

namespace projcodes {

/// Worker threads for parallel loops: PROJCODES_THREADS if set, else the
/// hardware concurrency.
unsigned worker_count();

/// Subspace with identifying vector v whose dots hold the entries of `a`, an
/// F-shaped matrix for F the Ferrers diagram of EF(v). Throws when `a` is
/// nonzero off the diagram.
Subspace lift(const FieldPtr& field, const BinaryWord& v, const Matrix& a);

/// Lifted rank code for one skeleton word.
struct CodeBlock {
  BinaryWord identifying_vector;
  /// Absent for the zero word, whose block is just {0}.
  std::optional<EchelonFerrersForm> form;
  std::shared_ptr<const RankCode> rank_code;
  std::size_t bound = 0;
  bool hypothesis = false;
  bool from_fixture = false;

  std::uint64_t size() const;
  /// Lift of the codeword with message digits `index` in base q.
  Subspace codeword(const FieldPtr& field, std::uint64_t index) const;
};

struct MultilevelInfo {
  std::shared_ptr<const SkeletonCode> skeleton;
  std::size_t delta = 0;
  std::vector<CodeBlock> blocks;
};

/// A set of subspaces of GF(q)^n with a declared minimum distance. Codes from
/// the multilevel construction keep their blocks; codewords are stored
/// explicitly unless there are too many, in which case they are generated
/// from the blocks on demand.
class SubspaceCode {
 public:
  /// Bare set; duplicates are rejected.
  SubspaceCode(FieldPtr field, std::size_t n, std::size_t declared_distance,
               std::vector<Subspace> words);
  SubspaceCode(FieldPtr field, std::size_t n, std::size_t declared_distance, MultilevelInfo info,
               std::uint64_t materialize_limit);

  const FieldPtr& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t declared_distance() const { return d_; }
  std::uint64_t size() const { return size_; }
  bool materialized() const { return materialized_; }
  /// Stored codewords, block by block; empty when not materialized.
  const std::vector<Subspace>& words() const { return words_; }
  /// Index of the first word of each block within words(), plus the end.
  const std::vector<std::size_t>& block_offsets() const { return offsets_; }
  /// GF(2) packed copies of words(), for distance loops; empty otherwise.
  const std::vector<PackedSubspace>& packed() const { return packed_; }
  const std::optional<MultilevelInfo>& multilevel() const { return info_; }
  /// Common dimension of all codewords, if there is one.
  std::optional<std::size_t> constant_dimension() const { return constant_dim_; }

  /// Codeword number i in block order, materialized or not.
  Subspace codeword_at(std::uint64_t i) const;
  /// Visits every codeword, materialized or not, in block order.
  void for_each(const std::function<void(const Subspace&)>& visit) const;
  /// Same words without construction metadata.
  SubspaceCode bare() const;

 private:
  void finish();

  FieldPtr field_;
  std::size_t n_;
  std::size_t d_;
  std::uint64_t size_ = 0;
  bool materialized_ = true;
  std::vector<Subspace> words_;
  std::vector<std::size_t> offsets_;
  std::vector<PackedSubspace> packed_;
  std::optional<MultilevelInfo> info_;
  std::optional<std::size_t> constant_dim_;
};

/// Union of the lifted Ferrers codes of distance delta over the skeleton
/// words. The declared distance is 2*delta, or the skeleton's minimum
/// distance when that is smaller and the skeleton mixes weights.
SubspaceCode construct_multilevel(const FieldPtr& field, const SkeletonCode& skeleton,
                                  std::size_t delta, std::uint64_t materialize_limit = 1ULL << 21);

struct BlockDimension {
  BinaryWord identifying_vector;
  std::size_t dimension = 0;  // of the Ferrers rank code over GF(q)
  std::size_t bound = 0;
  bool hypothesis = false;
  bool from_fixture = false;
  std::uint64_t size = 1;
};

struct SizeTable {
  std::vector<BlockDimension> rows;
  std::uint64_t total = 0;
  /// Sum of bound - dimension over the rows.
  std::size_t shortfall = 0;
};

/// Block sizes without listing codewords: the column-count sum when the
/// Ferrers hypothesis holds, the Ferrers construction otherwise.
SizeTable code_size_analytic(const FieldPtr& field, const SkeletonCode& skeleton, std::size_t delta);

enum class DecodePath { trivial, algebraic, block_search };

struct SubspaceDecodeResult {
  bool success = false;
  std::optional<Subspace> codeword;
  std::size_t distance = 0;
  bool ambiguous = false;
  std::size_t block = 0;
  DecodePath path = DecodePath::trivial;
};

/// Two-step decoding: skeleton decoding of v(Y) picks the block; the aligned
/// received matrix is decoded in the block's rank code when Y has the block's
/// dimension and reduces to [I | R], and the block is searched otherwise.
/// Succeeds when the result is within floor((d-1)/2) of Y.
SubspaceDecodeResult decode_multilevel(const SubspaceCode& code, const Subspace& y);

/// Exhaustive nearest codeword over the whole code; ties go to the first.
SubspaceDecodeResult nearest_codeword(const SubspaceCode& code, const Subspace& y);

struct VerifyOptions {
  std::uint64_t exhaustive_pair_limit = 20'000'000;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  bool force_exhaustive = false;
};

struct VerifyReport {
  std::uint64_t size = 0;
  std::uint64_t pairs = 0;
  bool exhaustive = true;
  std::optional<std::size_t> min_distance;
  /// First pair found below the declared distance.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Pairwise minimum distance, exhaustive up to the pair limit and sampled
/// beyond it. Needs a materialized code.
VerifyReport verify_code(const SubspaceCode& code, const VerifyOptions& options = {});

}  // namespace projcodes
