#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "projcodes/ferrers.hpp"
#include "projcodes/matrix.hpp"

namespace projcodes {

/// Cached GF(q^m) over `base` with its default modulus.
FieldPtr extension_field(const FieldPtr& base, unsigned m);

/// sum_i c_i x^(q^i) over an extension field, q = base size.
class LinearizedPoly {
 public:
  LinearizedPoly(FieldPtr field, std::vector<Elem> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  /// Largest i with c_i != 0, or -1 for the zero polynomial.
  int q_degree() const;
  bool is_monic() const { return q_degree() >= 0 && coeffs_[q_degree()] == 1; }

  Elem operator()(Elem x) const;

  /// (a o b)(x) = a(b(x)).
  friend LinearizedPoly compose(const LinearizedPoly& a, const LinearizedPoly& b);

 private:
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// f with n = v o f, when v divides n on the right exactly.
std::optional<LinearizedPoly> right_divide(const LinearizedPoly& n, const LinearizedPoly& v);

class RankCode;

enum class GabidulinForm {
  /// Rows (g_j^(q^i)) at the points g_j = x^j of the polynomial basis.
  evaluation,
  /// Stepped rows from a monic generator polynomial, each row the
  /// Frobenius image of the previous one shifted right by one.
  q_cyclic,
};

/// Gabidulin code of length m and dimension K over GF(q^m).
class GabidulinCode {
 public:
  static GabidulinCode evaluation(FieldPtr ext, std::size_t k);
  /// Without a generator polynomial the default
  /// g = primitive + x^(q^(m-K)) is used (g = x when K = m).
  static GabidulinCode q_cyclic(FieldPtr ext, std::size_t k,
                                std::optional<LinearizedPoly> generator_poly = std::nullopt);

  const FieldPtr& ext() const { return ext_; }
  const FieldPtr& base() const { return ext_->base(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t message_dim() const { return generator_.rows(); }
  std::size_t design_distance() const { return length() - message_dim() + 1; }
  GabidulinForm form() const { return form_; }
  const Matrix& generator() const { return generator_; }
  const std::optional<LinearizedPoly>& generator_poly() const { return generator_poly_; }

  std::vector<Elem> encode(std::span<const Elem> message) const;
  /// m x len matrix over the base field; column j holds the coordinates of
  /// symbol j.
  Matrix expand(std::span<const Elem> word) const;
  std::vector<Elem> contract(const Matrix& a) const;

  /// The code as m x m matrices over the base field.
  RankCode to_rank_code() const;

  /// Algebraic decoding up to floor((d-1)/2) rank errors; evaluation form
  /// only. Returns the codeword.
  std::optional<std::vector<Elem>> decode(std::span<const Elem> received) const;

 private:
  GabidulinCode(FieldPtr ext, Matrix generator, GabidulinForm form)
      : ext_(std::move(ext)), generator_(std::move(generator)), form_(form) {}

  FieldPtr ext_;
  Matrix generator_;
  GabidulinForm form_;
  std::optional<LinearizedPoly> generator_poly_;
};

/// Gabidulin code of the requested form; a q-cyclic request whose default
/// generator polynomial fails an exhaustive MRD check (run when q^(mK) <=
/// 2^16) falls back to the evaluation form.
GabidulinCode gabidulin(FieldPtr ext, std::size_t k, GabidulinForm form = GabidulinForm::evaluation);

/// Where a Ferrers code sits inside a Gabidulin code, for algebraic decoding.
struct GabidulinEmbedding {
  std::shared_ptr<const GabidulinCode> code;
  std::size_t prefix = 0;   // leading zero symbols removed by truncation
  bool conjugated = false;  // codewords are antitransposes of the working grid
};

/// Linear space of rows x cols matrices over GF(q), given by a basis.
class RankCode {
 public:
  RankCode(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Matrix> basis,
           std::size_t declared_distance, std::optional<FerrersDiagram> diagram = std::nullopt);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t declared_distance() const { return declared_distance_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  const std::optional<FerrersDiagram>& diagram() const { return diagram_; }
  /// q^dimension; throws when it does not fit in 64 bits.
  std::uint64_t size() const;

  /// dimension x (rows*cols), row i = basis matrix i read row by row.
  const Matrix& flattened() const { return flat_; }

  Matrix encode(std::span<const Elem> message) const;
  /// Message of a codeword, or nothing when `a` is not in the code.
  std::optional<std::vector<Elem>> message_of(const Matrix& a) const;
  bool contains(const Matrix& a) const { return message_of(a).has_value(); }

  const std::optional<GabidulinEmbedding>& embedding() const { return embedding_; }
  void set_embedding(GabidulinEmbedding e) { embedding_ = std::move(e); }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Matrix> basis_;
  std::size_t declared_distance_;
  std::optional<FerrersDiagram> diagram_;
  Matrix flat_;
  std::optional<GabidulinEmbedding> embedding_;
};

std::size_t rank_distance(const Matrix& a, const Matrix& b);

/// Visit every codeword (zero included) as a row-major entry vector.
void for_each_codeword(const RankCode& code,
                       const std::function<void(std::span<const Elem>)>& visit);

enum class DistanceMethod {
  automatic,
  /// Rank of every nonzero codeword.
  enumerate,
  /// For each r, search every (cols-r)-dimensional subspace U for a nonzero
  /// codeword A with AU = 0; exact, and cheap when the columns are few.
  grassmannian,
};

/// Exact minimum rank of a nonzero codeword; nothing for the zero code.
std::optional<std::size_t> min_rank_distance(const RankCode& code,
                                             DistanceMethod method = DistanceMethod::automatic);
/// Some nonzero codeword has rank <= r.
bool has_codeword_of_rank_at_most(const RankCode& code, std::size_t r);

/// Suffixes of the codewords whose first length-eta symbols vanish.
RankCode truncate(const GabidulinCode& code, std::size_t eta);

struct FerrersCode {
  std::shared_ptr<const RankCode> code;
  std::size_t bound = 0;            // dim_bound(F, delta)
  /// The diagram, turned so it has at least as many rows as columns, has
  /// full rightmost delta-1 columns; the dimension is then the sum of the
  /// leftmost cols-delta+1 column counts.
  bool hypothesis = false;
  bool from_fixture = false;
  bool distance_unreachable = false;  // delta exceeds min(rows, cols)
  bool meets_bound() const { return code->dimension() == bound; }
};

/// Linear code with minimum rank distance >= delta whose codewords vanish
/// outside F, cut out of a truncated Gabidulin code by the zero pattern.
/// Results are cached per (field, diagram, delta).
FerrersCode ferrers_rank_code(const FieldPtr& field, const FerrersDiagram& f, std::size_t delta);
/// Same construction without the cache or fixture substitution.
FerrersCode build_ferrers_rank_code(const FieldPtr& field, const FerrersDiagram& f,
                                    std::size_t delta);

std::vector<std::string> fixture_code_names();
/// Shipped binary bases: "ferrers1_d3_dim3", "ferrers2_d3_dim4".
RankCode load_fixture_code(std::string_view name);

struct RankDecodeResult {
  bool success = false;
  std::optional<Matrix> codeword;
  std::size_t distance = 0;   // rank(R - codeword) when a codeword is given
  bool ambiguous = false;     // another codeword is equally near
};

/// Unique codeword within floor((d-1)/2) of `received`, d the declared
/// distance. Uses the Gabidulin embedding when present, else the reference
/// search.
RankDecodeResult decode_rank(const RankCode& code, const Matrix& received);
/// Exhaustive nearest codeword; ties go to the first in enumeration order.
RankDecodeResult decode_rank_reference(const RankCode& code, const Matrix& received);

/// [n k]_q, the number of k-dimensional subspaces of GF(q)^n, as a double.
double gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

}  // namespace projcodes
