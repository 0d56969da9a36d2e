#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "projcodes/multilevel.hpp"

namespace projcodes {

/// A hyperplane Q of GF(q)^n, the coordinate tau where v(Q) is zero, and a
/// vector v outside Q.
class PuncturingContext {
 public:
  PuncturingContext(Subspace hyperplane, std::vector<Elem> v);
  /// Q = row space of [I_(n-1) | 0].
  static PuncturingContext standard(const FieldPtr& field, std::vector<Elem> v);

  const FieldPtr& field() const { return q_.field(); }
  std::size_t n() const { return q_.ambient_dim(); }
  const Subspace& hyperplane() const { return q_; }
  std::size_t tau() const { return tau_; }
  const std::vector<Elem>& v() const { return v_; }
  /// Nonzero h with Q = {x : h . x = 0}, scaled so its first nonzero entry is 1.
  const std::vector<Elem>& normal() const { return normal_; }

 private:
  Subspace q_;
  std::vector<Elem> v_;
  std::vector<Elem> normal_;
  std::size_t tau_ = 0;
};

/// The subspace Y of Q whose puncturing at tau is `y`; its generator is
/// G(y) E(Q), which is already reduced.
Subspace embed_in_hyperplane(const Subspace& y, const PuncturingContext& ctx);

struct PuncturedCode {
  /// Codewords in GF(q)^(n-1): the part from X inside Q, then the part from
  /// X through v, then {0} and the whole space when augmented.
  std::shared_ptr<const SubspaceCode> code;
  std::shared_ptr<const SubspaceCode> source;
  PuncturingContext context;
  std::size_t inside = 0;      // |C_Q| before removing duplicates
  std::size_t through_v = 0;   // |C_Q,v| before removing duplicates
  std::size_t duplicates = 0;
  std::size_t trivial_added = 0;
  bool augmented = false;
  /// Per source block: codewords contributed to each part.
  std::vector<std::size_t> inside_by_block;
  std::vector<std::size_t> through_v_by_block;
};

/// C'_{Q,v} = {X \ tau : X in C, X in Q} U {(X n Q) \ tau : X in C, v in X}.
/// The declared distance is d - 1, lowered if needed when the trivial
/// codewords are added.
PuncturedCode puncture_code(std::shared_ptr<const SubspaceCode> source, const PuncturingContext& ctx,
                            bool augment_trivial = false);

enum class SearchStrategy { exhaustive, sampled };

struct ContextSearchResult {
  PuncturingContext context;
  /// |C_Q| + |C_Q,v| for the chosen context, before removing duplicates.
  std::uint64_t size = 0;
  std::uint64_t contexts_examined = 0;
};

/// Largest punctured code over hyperplanes and vectors outside them. For each
/// hyperplane examined every v is scored at once; exhaustive visits every
/// hyperplane, sampled draws `samples` of them from `seed`. Ties keep the
/// first found.
ContextSearchResult best_context_search(const SubspaceCode& source, SearchStrategy strategy,
                                        std::uint64_t samples = 2048, std::uint64_t seed = 1);

/// The (4k-1, 2q^(2k^2), 2k-1) family: the single block 1^(2k) 0^(2k) with
/// delta = k punctured by Q = [I | 0] and v = 1 0^(2k-1) u, u a first row of
/// a codeword ending in one (0...01 when available). With `extended` the
/// skeleton is lexicode(4k, 2k, 2k) instead of the one word.
PuncturedCode generalized_punctured_family(const FieldPtr& field, std::size_t k, bool extended = false,
                                           bool augment_trivial = false);

/// Decodes y in GF(q)^(n-1): embed into Q, add v when the parity rule says
/// so, decode in the source, intersect with Q and puncture. Succeeds when
/// the result is within floor((d'-1)/2) of y, d' the punctured distance.
SubspaceDecodeResult decode_punctured(const PuncturedCode& code, const Subspace& y);

}  // namespace projcodes
