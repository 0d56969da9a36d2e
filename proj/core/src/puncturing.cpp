#include "projcodes/puncturing.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "parallel.hpp"

namespace projcodes {

namespace {

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

std::vector<Elem> normalized(const Field& f, std::vector<Elem> h) {
  auto lead = std::find_if(h.begin(), h.end(), [](Elem x) { return x != 0; });
  if (lead == h.end()) throw std::invalid_argument("zero normal vector");
  const Elem s = f.inv(*lead);
  for (auto& x : h) x = f.mul(x, s);
  return h;
}

bool inside(const Subspace& x, const std::vector<Elem>& h) {
  const Field& f = *x.field();
  for (std::size_t r = 0; r < x.dim(); ++r) {
    if (dot(f, x.generator().row(r), h) != 0) return false;
  }
  return true;
}

// X n {h . x = 0} for X not inside the hyperplane.
Subspace meet(const Subspace& x, const std::vector<Elem>& h) {
  const Field& f = *x.field();
  const Matrix& g = x.generator();
  std::vector<Elem> s(x.dim());
  for (std::size_t r = 0; r < x.dim(); ++r) s[r] = dot(f, g.row(r), h);
  const auto pivot = static_cast<std::size_t>(std::find_if(s.begin(), s.end(), [](Elem e) { return e != 0; }) - s.begin());
  Matrix rows(x.field(), 0, x.ambient_dim());
  std::vector<Elem> row(x.ambient_dim());
  for (std::size_t r = 0; r < x.dim(); ++r) {
    if (r == pivot) continue;
    const Elem c = f.div(s[r], s[pivot]);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = f.sub(g(r, j), f.mul(c, g(pivot, j)));
    rows.append_row(row);
  }
  return Subspace::span(rows);
}

// Source dimensions all share this parity.
std::size_t source_parity(const SubspaceCode& c) {
  std::optional<std::size_t> p;
  auto note = [&](std::size_t dim) {
    if (!p) p = dim % 2;
    else if (*p != dim % 2) throw std::invalid_argument("source dimensions have mixed parity");
  };
  if (c.multilevel()) {
    for (const auto& b : c.multilevel()->blocks) note(b.identifying_vector.weight());
  } else {
    for (const auto& w : c.words()) note(w.dim());
  }
  return p.value_or(0);
}

std::uint64_t vector_index(std::span<const Elem> v, std::uint64_t q) {
  std::uint64_t idx = 0;
  for (Elem e : v) idx = idx * q + e;
  return idx;
}

std::vector<Elem> vector_at(std::uint64_t idx, std::size_t n, std::uint64_t q) {
  std::vector<Elem> v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<Elem>(idx % q);
    idx /= q;
  }
  return v;
}

}  // namespace

PuncturingContext::PuncturingContext(Subspace hyperplane, std::vector<Elem> v)
    : q_(std::move(hyperplane)), v_(std::move(v)) {
  const std::size_t n = q_.ambient_dim();
  if (n < 2 || q_.dim() != n - 1) throw std::invalid_argument("Q must have dimension n-1");
  if (v_.size() != n) throw std::invalid_argument("v has the wrong length");
  for (Elem e : v_) {
    if (!q_.field()->contains(e)) throw std::invalid_argument("v has a symbol outside the field");
  }
  if (q_.contains(v_)) throw std::invalid_argument("v lies in Q");
  const Subspace perp = orthogonal_complement(q_);
  normal_ = normalized(*q_.field(), {perp.generator().row(0).begin(), perp.generator().row(0).end()});
  const auto word = q_.identifying_vector();
  for (std::size_t i = 0; i < n; ++i) {
    if (!word[i]) tau_ = i;
  }
}

PuncturingContext PuncturingContext::standard(const FieldPtr& field, std::vector<Elem> v) {
  const std::size_t n = v.size();
  Matrix g(field, n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) g(i, i) = 1;
  return PuncturingContext(Subspace::from_rref(std::move(g)), std::move(v));
}

Subspace embed_in_hyperplane(const Subspace& y, const PuncturingContext& ctx) {
  if (y.ambient_dim() + 1 != ctx.n()) throw std::invalid_argument("received subspace has the wrong length");
  if (y.dim() == 0) return Subspace::zero(ctx.field(), ctx.n());
  return Subspace::from_rref(y.generator() * ctx.hyperplane().generator());
}

PuncturedCode puncture_code(std::shared_ptr<const SubspaceCode> source, const PuncturingContext& ctx,
                            bool augment_trivial) {
  if (source->n() != ctx.n() || !source->field()->same_as(*ctx.field())) {
    throw std::invalid_argument("context does not match the code");
  }
  if (source->declared_distance() < 2) throw std::invalid_argument("source distance must be at least 2");
  PuncturedCode out{nullptr, source, ctx, 0, 0, 0, 0, false, {}, {}};
  const auto& h = ctx.normal();

  std::map<BinaryWord, std::size_t> block_of;
  if (source->multilevel()) {
    const auto& blocks = source->multilevel()->blocks;
    for (std::size_t b = 0; b < blocks.size(); ++b) block_of[blocks[b].identifying_vector] = b;
    out.inside_by_block.assign(blocks.size(), 0);
    out.through_v_by_block.assign(blocks.size(), 0);
  }

  std::vector<Subspace> part_q;
  std::vector<Subspace> part_v;
  source->for_each([&](const Subspace& x) {
    auto block = block_of.find(x.identifying_vector());
    if (inside(x, h)) {
      part_q.push_back(x.puncture(ctx.tau()));
      if (block != block_of.end()) ++out.inside_by_block[block->second];
    } else if (x.contains(ctx.v())) {
      part_v.push_back(meet(x, h).puncture(ctx.tau()));
      if (block != block_of.end()) ++out.through_v_by_block[block->second];
    }
  });
  out.inside = part_q.size();
  out.through_v = part_v.size();

  std::set<Subspace> seen;
  std::vector<Subspace> words;
  for (auto* part : {&part_q, &part_v}) {
    for (auto& w : *part) {
      if (seen.insert(w).second) {
        words.push_back(std::move(w));
      } else {
        ++out.duplicates;
      }
    }
  }

  const FieldPtr& f = ctx.field();
  const std::size_t n1 = ctx.n() - 1;
  std::size_t declared = source->declared_distance() - 1;
  if (augment_trivial) {
    out.augmented = true;
    for (const auto& t : {Subspace::zero(f, n1), Subspace::full(f, n1)}) {
      if (seen.insert(t).second) {
        words.push_back(t);
        ++out.trivial_added;
      }
    }
    for (std::size_t i = 0; i + out.trivial_added < words.size(); ++i) {
      declared = std::min({declared, words[i].dim(), n1 - words[i].dim()});
    }
  }
  out.code = std::make_shared<const SubspaceCode>(f, n1, declared, std::move(words));
  return out;
}

ContextSearchResult best_context_search(const SubspaceCode& source, SearchStrategy strategy,
                                        std::uint64_t samples, std::uint64_t seed) {
  const FieldPtr& field = source.field();
  const Field& f = *field;
  const std::uint64_t q = f.size();
  const std::size_t n = source.n();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    space *= q;
    if (space > (1ULL << 24)) throw std::invalid_argument("ambient space too large for a context search");
  }
  if (!source.materialized()) throw std::invalid_argument("context search needs a listed code");

  // Index of every element of every codeword.
  struct Listed {
    const Subspace* x;
    std::vector<std::uint32_t> index;
  };
  std::vector<Listed> listed;
  for (const auto& x : source.words()) {
    Listed l{&x, {}};
    for (const auto& e : x.elements()) l.index.push_back(static_cast<std::uint32_t>(vector_index(e, q)));
    listed.push_back(std::move(l));
  }
  // Elements of the whole space GF(q)^k list the coefficient vectors in the
  // order elements() uses for every k-dimensional subspace.
  std::map<std::size_t, std::vector<std::vector<Elem>>> coeff_by_dim;
  for (const auto& l : listed) {
    const std::size_t k = l.x->dim();
    if (!coeff_by_dim.count(k)) coeff_by_dim[k] = Subspace::full(field, k).elements();
  }

  std::vector<std::vector<Elem>> normals;
  if (strategy == SearchStrategy::exhaustive) {
    for (std::uint64_t idx = 1; idx < space; ++idx) {
      auto h = vector_at(idx, n, q);
      if (*std::find_if(h.begin(), h.end(), [](Elem e) { return e != 0; }) == 1) normals.push_back(std::move(h));
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, space - 1);
    for (std::uint64_t s = 0; s < samples; ++s) normals.push_back(normalized(f, vector_at(pick(rng), n, q)));
  }

  struct Score {
    std::uint64_t size = 0;
    std::uint64_t v = 0;
  };
  std::vector<Score> scores(normals.size());
  detail::parallel_for(normals.size(), [&](std::size_t hi) {
    const auto& h = normals[hi];
    std::vector<std::uint32_t> counts(space, 0);
    std::uint64_t in_q = 0;
    std::vector<Elem> s;
    for (const auto& l : listed) {
      const Matrix& g = l.x->generator();
      s.assign(g.rows(), 0);
      bool all_zero = true;
      for (std::size_t r = 0; r < g.rows(); ++r) {
        s[r] = dot(f, g.row(r), h);
        all_zero = all_zero && s[r] == 0;
      }
      if (all_zero) {
        ++in_q;
        continue;
      }
      const auto& cs = coeff_by_dim.at(g.rows());
      for (std::size_t e = 0; e < cs.size(); ++e) {
        if (dot(f, cs[e], s) != 0) ++counts[l.index[e]];
      }
    }
    Score best;
    bool found = false;
    for (std::uint64_t vi = 0; vi < space; ++vi) {
      if (dot(f, vector_at(vi, n, q), h) == 0) continue;
      if (!found || counts[vi] > best.size) {
        best = {counts[vi], vi};
        found = true;
      }
    }
    scores[hi] = {best.size + in_q, best.v};
  });

  std::size_t winner = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i].size > scores[winner].size) winner = i;
  }
  const Subspace hyper = orthogonal_complement(Subspace::span(Matrix::from_rows(field, {normals[winner]}, n)));
  return {PuncturingContext(hyper, vector_at(scores[winner].v, n, q)), scores[winner].size, normals.size()};
}

PuncturedCode generalized_punctured_family(const FieldPtr& field, std::size_t k, bool extended,
                                           bool augment_trivial) {
  if (k == 0 || 4 * k > 12) throw std::invalid_argument("family-4k supports 1 <= k <= 3");
  const std::size_t n = 4 * k;
  std::vector<std::size_t> ones(2 * k);
  for (std::size_t i = 0; i < 2 * k; ++i) ones[i] = i;
  const SkeletonCode skeleton = extended ? lexicode(n, 2 * k, 2 * k)
                                         : SkeletonCode(n, 2 * k, {BinaryWord::from_positions(n, ones)});
  auto source = std::make_shared<const SubspaceCode>(construct_multilevel(field, skeleton, k));

  // u: 0...01 when some codeword has it as first row, else the first row
  // of the first basis matrix that ends in a nonzero entry, scaled.
  const RankCode& lead = *source->multilevel()->blocks.front().rank_code;
  Matrix first_rows(field, 0, 2 * k);
  for (const auto& b : lead.basis()) first_rows.append_row(b.row(0));
  std::vector<Elem> u(2 * k, 0);
  u.back() = 1;
  if (rank(first_rows.stacked(Matrix::from_rows(field, {u}, 2 * k))) != rank(first_rows)) {
    const Field& f = *field;
    for (const auto& b : lead.basis()) {
      if (b(0, 2 * k - 1) == 0) continue;
      const Elem s = f.inv(b(0, 2 * k - 1));
      for (std::size_t j = 0; j < 2 * k; ++j) u[j] = f.mul(b(0, j), s);
      break;
    }
  }
  std::vector<Elem> v(n, 0);
  v[0] = 1;
  std::copy(u.begin(), u.end(), v.begin() + static_cast<long>(2 * k));
  return puncture_code(source, PuncturingContext::standard(field, v), augment_trivial);
}

SubspaceDecodeResult decode_punctured(const PuncturedCode& code, const Subspace& y) {
  const auto& ctx = code.context;
  const SubspaceCode& source = *code.source;
  if (!source.multilevel()) throw std::invalid_argument("source code has no construction metadata");
  if (source.declared_distance() % 2 != 0) throw std::invalid_argument("source distance must be even");
  const std::size_t delta = source.declared_distance() / 2;
  const std::size_t parity = source_parity(source);
  const std::size_t n1 = ctx.n() - 1;
  const std::size_t reach = (code.code->declared_distance() - 1) / 2;
  const std::size_t ell = y.dim();

  SubspaceDecodeResult out;
  if (code.augmented) {
    if (ell <= reach) {
      out.codeword = Subspace::zero(ctx.field(), n1);
    } else if (n1 - ell <= reach) {
      out.codeword = Subspace::full(ctx.field(), n1);
    }
    if (out.codeword) {
      out.distance = subspace_distance(*out.codeword, y);
      out.success = true;
      return out;
    }
  }

  Subspace z = embed_in_hyperplane(y, ctx);
  const bool same = ell % 2 == parity;
  const bool extend = delta % 2 == 0 ? same : !same;
  if (extend) {
    z = Subspace::span(z.generator().stacked(Matrix::from_rows(ctx.field(), {ctx.v()}, ctx.n())));
    if (z.dim() != ell + 1) throw std::logic_error("v fell inside the embedded subspace");
  }

  const SubspaceDecodeResult inner = decode_multilevel(source, z);
  out.path = inner.path;
  out.block = inner.block;
  out.ambiguous = inner.ambiguous;
  if (!inner.success) return out;
  const Subspace& x = *inner.codeword;
  if (inside(x, ctx.normal())) {
    out.codeword = x.puncture(ctx.tau());
  } else if (x.contains(ctx.v())) {
    out.codeword = meet(x, ctx.normal()).puncture(ctx.tau());
  } else {
    return out;
  }
  out.distance = subspace_distance(*out.codeword, y);
  out.success = out.distance <= reach;
  if (!out.success) out.codeword.reset();
  return out;
}

}  // namespace projcodes
