#include "projcodes/rank_metric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fixture_data.hpp"

namespace projcodes {

namespace {

std::string field_key(const Field& f) {
  std::ostringstream os;
  os << f.describe() << '[';
  for (Elem c : f.modulus()) os << c << ',';
  os << ']';
  if (f.base()) os << '/' << field_key(*f.base());
  return os.str();
}

Elem unit_code(const Field& f, std::size_t j) {
  Elem code = 1;
  for (std::size_t i = 0; i < j; ++i) code *= static_cast<Elem>(f.base_size());
  return code;
}

// Basis matrices as flattened rows.
Matrix flatten(const FieldPtr& field, std::size_t rows, std::size_t cols,
               const std::vector<Matrix>& basis) {
  Matrix flat(field, 0, rows * cols);
  for (const Matrix& b : basis) flat.append_row(b.data());
  return flat;
}

std::vector<Matrix> unflatten(const Matrix& flat, std::size_t rows, std::size_t cols) {
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < flat.rows(); ++r) {
    const auto row = flat.row(r);
    out.emplace_back(flat.field(), rows, cols, std::vector<Elem>(row.begin(), row.end()));
  }
  return out;
}

// Subcode of span(basis) (square or rectangular, rows x cols) vanishing at
// every position where `forced_zero` holds, returned as canonical
// (row-reduced) basis matrices restricted to the columns [col_offset, cols).
template <typename Pred>
std::vector<Matrix> zero_pattern_subcode(const FieldPtr& field, std::size_t rows, std::size_t cols,
                                         const std::vector<Matrix>& basis, std::size_t col_offset,
                                         Pred forced_zero) {
  std::vector<std::size_t> positions;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (forced_zero(r, c)) positions.push_back(r * cols + c);
    }
  }
  const std::size_t dim = basis.size();
  Matrix combos(field, 0, dim);
  if (positions.empty()) {
    combos = Matrix::identity(field, dim);
  } else if (dim > 0) {
    Matrix system(field, positions.size(), dim);
    for (std::size_t p = 0; p < positions.size(); ++p) {
      for (std::size_t i = 0; i < dim; ++i) system(p, i) = basis[i].data()[positions[p]];
    }
    combos = null_space(system);
  }
  const std::size_t out_cols = cols - col_offset;
  const Matrix flat = flatten(field, rows, cols, basis);
  Matrix reduced(field, 0, rows * out_cols);
  for (std::size_t k = 0; k < combos.rows(); ++k) {
    const auto full = flat.left_multiply(combos.row(k));
    std::vector<Elem> cut;
    cut.reserve(rows * out_cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = col_offset; c < cols; ++c) cut.push_back(full[r * cols + c]);
    }
    reduced.append_row(cut);
  }
  if (reduced.rows() == 0) return {};
  auto red = rref(std::move(reduced));
  return unflatten(red.matrix.top_rows(red.rank), rows, out_cols);
}

std::vector<Matrix> canonical_basis(const FieldPtr& field, std::size_t rows, std::size_t cols,
                                    const std::vector<Matrix>& basis) {
  if (basis.empty()) return {};
  auto red = rref(flatten(field, rows, cols, basis));
  return unflatten(red.matrix.top_rows(red.rank), rows, cols);
}

std::uint64_t checked_power(std::uint64_t q, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / q) {
      throw std::overflow_error("code size does not fit in 64 bits");
    }
    out *= q;
  }
  return out;
}

double power_estimate(std::uint64_t q, std::size_t e) {
  return std::pow(static_cast<double>(q), static_cast<double>(e));
}

// Basis over the prime field: every basis matrix times each power of the
// generator x of GF(p^e).
std::vector<std::vector<Elem>> prime_field_basis(const RankCode& code) {
  const Field& f = *code.field();
  std::vector<std::vector<Elem>> out;
  std::size_t e = 1;
  for (std::uint64_t s = f.characteristic(); s < f.size(); s *= f.characteristic()) ++e;
  for (const Matrix& b : code.basis()) {
    Elem scalar = 1;
    for (std::size_t j = 0; j < e; ++j) {
      out.push_back(b.scaled(scalar).data());
      scalar *= f.characteristic();
    }
  }
  return out;
}

std::optional<std::size_t> min_rank_enumerate(const RankCode& code) {
  if (code.dimension() == 0) return std::nullopt;
  const std::size_t rows = code.rows();
  const std::size_t cols = code.cols();
  std::size_t best = std::min(rows, cols);
  const Field& f = *code.field();
  if (f.size() == 2 && cols <= 64) {
    // Gray-code walk with row masks.
    std::vector<std::vector<std::uint64_t>> masks;
    for (const Matrix& b : code.basis()) {
      std::vector<std::uint64_t> m(rows, 0);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          if (b(r, c)) m[r] |= 1ULL << c;
        }
      }
      masks.push_back(std::move(m));
    }
    std::vector<std::uint64_t> word(rows, 0);
    const std::uint64_t total = 1ULL << code.dimension();
    for (std::uint64_t i = 1; i < total; ++i) {
      const auto& b = masks[static_cast<std::size_t>(std::countr_zero(i))];
      for (std::size_t r = 0; r < rows; ++r) word[r] ^= b[r];
      best = std::min(best, gf2_rank(word));
      if (best == 1) break;
    }
    return best;
  }
  bool first = true;
  for_each_codeword(code, [&](std::span<const Elem> w) {
    if (first) {  // the zero word comes first
      first = false;
      return;
    }
    Matrix m(code.field(), rows, cols, std::vector<Elem>(w.begin(), w.end()));
    best = std::min(best, rank(m));
  });
  return best;
}

// Every s-dimensional subspace of GF(q)^n, as RREF generator rows.
template <typename Visit>
bool for_each_subspace(const FieldPtr& field, std::size_t n, std::size_t s, Visit visit) {
  const Field& f = *field;
  for (const BinaryWord& v : enumerate_identifying_vectors(n, s)) {
    Matrix gen(field, s, n);
    std::vector<GridPosition> dots;
    if (s > 0) {
      const auto ef = EchelonFerrersForm::of(v);
      for (std::size_t r = 0; r < s; ++r) gen(r, ef.pivots()[r]) = 1;
      dots = ef.dot_positions();
    }
    std::vector<Elem> digits(dots.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < dots.size(); ++i) gen(dots[i].row, dots[i].col) = digits[i];
      if (visit(gen)) return true;
      std::size_t i = 0;
      while (i < digits.size()) {
        if (digits[i] + 1 < f.size()) {
          ++digits[i];
          break;
        }
        digits[i] = 0;
        ++i;
      }
      if (i == digits.size()) break;
    }
  }
  return false;
}

}  // namespace

FieldPtr extension_field(const FieldPtr& base, unsigned m) {
  static std::mutex mutex;
  static std::map<std::string, FieldPtr> cache;
  const std::string key = field_key(*base) + "^" + std::to_string(m);
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ext = Field::make_extension(base, m);
  cache.emplace(key, ext);
  return ext;
}

// ---------------------------------------------------------------------------

LinearizedPoly::LinearizedPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (!field_->contains(c)) throw FieldError("coefficient outside the field");
  }
}

int LinearizedPoly::q_degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Elem LinearizedPoly::operator()(Elem x) const {
  const Field& f = *field_;
  Elem acc = 0;
  Elem power = x;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = f.frobenius(power, 1);
    if (coeffs_[i] != 0) acc = f.add(acc, f.mul(coeffs_[i], power));
  }
  return acc;
}

LinearizedPoly compose(const LinearizedPoly& a, const LinearizedPoly& b) {
  if (!a.field_->same_as(*b.field_)) throw FieldError("linearized polynomials over different fields");
  const Field& f = *a.field_;
  if (a.coeffs_.empty() || b.coeffs_.empty()) return LinearizedPoly(a.field_, {});
  std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], f.frobenius(b.coeffs_[j], static_cast<unsigned>(i))));
    }
  }
  return LinearizedPoly(a.field_, std::move(out));
}

std::optional<LinearizedPoly> right_divide(const LinearizedPoly& n, const LinearizedPoly& v) {
  const Field& f = *n.field();
  const int dv = v.q_degree();
  if (dv < 0) throw std::invalid_argument("division by the zero polynomial");
  const int dn = n.q_degree();
  if (dn < 0) return LinearizedPoly(n.field(), {});
  if (dn < dv) return std::nullopt;
  const auto& nc = n.coeffs();
  const auto& vc = v.coeffs();
  const std::size_t df = static_cast<std::size_t>(dn - dv);
  std::vector<Elem> fc(df + 1, 0);
  const Elem lead_inv = f.inv(vc[dv]);
  const unsigned m = f.degree();
  const unsigned back = static_cast<unsigned>((m - static_cast<unsigned>(dv) % m) % m);
  for (std::size_t j = df + 1; j-- > 0;) {
    // Coefficient of x^(q^(dv+j)) in v o f is sum_i v_i f_(dv+j-i)^(q^i).
    Elem rhs = nc[dv + j];
    for (int i = 0; i < dv; ++i) {
      const std::size_t idx = static_cast<std::size_t>(dv) + j - static_cast<std::size_t>(i);
      if (idx > df || vc[i] == 0) continue;
      rhs = f.sub(rhs, f.mul(vc[i], f.frobenius(fc[idx], static_cast<unsigned>(i))));
    }
    fc[j] = f.frobenius(f.mul(rhs, lead_inv), back);
  }
  LinearizedPoly quotient(n.field(), std::move(fc));
  auto check = compose(v, quotient).coeffs();
  auto target = nc;
  check.resize(std::max(check.size(), target.size()), 0);
  target.resize(check.size(), 0);
  if (check != target) return std::nullopt;
  return quotient;
}

// ---------------------------------------------------------------------------

GabidulinCode GabidulinCode::evaluation(FieldPtr ext, std::size_t k) {
  if (!ext->base()) throw std::invalid_argument("Gabidulin codes need an extension field");
  const std::size_t m = ext->degree();
  if (k < 1 || k > m) throw std::invalid_argument("Gabidulin dimension must satisfy 1 <= K <= m");
  Matrix g(ext, k, m);
  for (std::size_t j = 0; j < m; ++j) {
    const Elem point = unit_code(*ext, j);
    for (std::size_t i = 0; i < k; ++i) g(i, j) = ext->frobenius(point, static_cast<unsigned>(i));
  }
  return GabidulinCode(std::move(ext), std::move(g), GabidulinForm::evaluation);
}

GabidulinCode GabidulinCode::q_cyclic(FieldPtr ext, std::size_t k,
                                      std::optional<LinearizedPoly> generator_poly) {
  if (!ext->base()) throw std::invalid_argument("Gabidulin codes need an extension field");
  const std::size_t m = ext->degree();
  if (k < 1 || k > m) throw std::invalid_argument("Gabidulin dimension must satisfy 1 <= K <= m");
  const std::size_t deg = m - k;
  if (!generator_poly) {
    std::vector<Elem> c(deg + 1, 0);
    c[deg] = 1;
    if (deg > 0) c[0] = ext->primitive_element();
    generator_poly = LinearizedPoly(ext, std::move(c));
  }
  if (!generator_poly->is_monic() || generator_poly->q_degree() != static_cast<int>(deg)) {
    throw std::invalid_argument("generator polynomial must be monic of q-degree m-K");
  }
  Matrix g(ext, k, m);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i <= deg; ++i) {
      g(r, r + i) = ext->frobenius(generator_poly->coeffs()[i], static_cast<unsigned>(r));
    }
  }
  GabidulinCode code(ext, std::move(g), GabidulinForm::q_cyclic);
  code.generator_poly_ = std::move(generator_poly);
  return code;
}

std::vector<Elem> GabidulinCode::encode(std::span<const Elem> message) const {
  if (message.size() != message_dim()) throw std::invalid_argument("message length mismatch");
  return generator_.left_multiply(message);
}

Matrix GabidulinCode::expand(std::span<const Elem> word) const {
  const std::size_t m = ext_->degree();
  Matrix out(base(), m, word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    const auto coords = ext_->to_coords(word[j]);
    for (std::size_t i = 0; i < m; ++i) out(i, j) = coords[i];
  }
  return out;
}

std::vector<Elem> GabidulinCode::contract(const Matrix& a) const {
  if (a.rows() != ext_->degree()) throw std::invalid_argument("matrix height must equal m");
  std::vector<Elem> out(a.cols());
  std::vector<Elem> coords(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) coords[i] = a(i, j);
    out[j] = ext_->from_coords(coords);
  }
  return out;
}

RankCode GabidulinCode::to_rank_code() const {
  const std::size_t m = ext_->degree();
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < message_dim(); ++i) {
    for (std::size_t b = 0; b < m; ++b) {
      const Elem beta = unit_code(*ext_, b);
      std::vector<Elem> word(length());
      for (std::size_t j = 0; j < length(); ++j) word[j] = ext_->mul(beta, generator_(i, j));
      basis.push_back(expand(word));
    }
  }
  RankCode code(base(), m, length(), canonical_basis(base(), m, length(), basis), design_distance());
  if (form_ == GabidulinForm::evaluation) {
    code.set_embedding({std::make_shared<const GabidulinCode>(*this), 0, false});
  }
  return code;
}

std::optional<std::vector<Elem>> GabidulinCode::decode(std::span<const Elem> received) const {
  if (form_ != GabidulinForm::evaluation) {
    throw std::logic_error("algebraic decoding needs the evaluation form");
  }
  const Field& e = *ext_;
  const std::size_t m = length();
  if (received.size() != m) throw std::invalid_argument("received word length mismatch");
  const std::size_t k = message_dim();
  const std::size_t t = (m - k) / 2;
  // V(y_i) = N(g_i) with deg_q V <= t and deg_q N <= K + t - 1.
  const std::size_t nv = t + 1;
  const std::size_t nn = k + t;
  Matrix system(ext_, m, nv + nn);
  for (std::size_t i = 0; i < m; ++i) {
    const Elem point = generator_(0, i);
    for (std::size_t a = 0; a < nv; ++a) system(i, a) = e.frobenius(received[i], static_cast<unsigned>(a));
    for (std::size_t b = 0; b < nn; ++b) system(i, nv + b) = e.neg(e.frobenius(point, static_cast<unsigned>(b)));
  }
  const Matrix sol = null_space(system);
  if (sol.rows() == 0) return std::nullopt;
  const auto z = sol.row(0);
  LinearizedPoly v(ext_, std::vector<Elem>(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(nv)));
  LinearizedPoly n(ext_, std::vector<Elem>(z.begin() + static_cast<std::ptrdiff_t>(nv), z.end()));
  if (v.q_degree() < 0) return std::nullopt;
  auto f = right_divide(n, v);
  if (!f || f->q_degree() >= static_cast<int>(k)) return std::nullopt;
  std::vector<Elem> message(k, 0);
  for (std::size_t i = 0; i < f->coeffs().size() && i < k; ++i) message[i] = f->coeffs()[i];
  auto word = encode(message);
  std::vector<Elem> diff(m);
  for (std::size_t i = 0; i < m; ++i) diff[i] = e.sub(received[i], word[i]);
  if (rank(expand(diff)) > t) return std::nullopt;
  return word;
}

GabidulinCode gabidulin(FieldPtr ext, std::size_t k, GabidulinForm form) {
  if (form == GabidulinForm::evaluation) return GabidulinCode::evaluation(std::move(ext), k);
  auto cyclic = GabidulinCode::q_cyclic(ext, k);
  const std::size_t m = ext->degree();
  if (power_estimate(ext->base_size(), m * k) <= 65536.0) {
    const auto d = min_rank_distance(cyclic.to_rank_code(), DistanceMethod::enumerate);
    if (!d || *d != m - k + 1) return GabidulinCode::evaluation(std::move(ext), k);
  }
  return cyclic;
}

// ---------------------------------------------------------------------------

RankCode::RankCode(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Matrix> basis,
                   std::size_t declared_distance, std::optional<FerrersDiagram> diagram)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      basis_(std::move(basis)),
      declared_distance_(declared_distance),
      diagram_(std::move(diagram)) {
  for (const Matrix& b : basis_) {
    if (b.rows() != rows_ || b.cols() != cols_) throw std::invalid_argument("basis matrix has wrong shape");
    if (!b.field()->same_as(*field_)) throw FieldError("basis matrix over a different field");
  }
  flat_ = flatten(field_, rows_, cols_, basis_);
  if (rank(flat_) != basis_.size()) throw std::invalid_argument("basis matrices are linearly dependent");
  if (diagram_) {
    if (diagram_->rows() != rows_ || diagram_->cols() != cols_) {
      throw std::invalid_argument("diagram shape does not match the code");
    }
    for (const Matrix& b : basis_) {
      for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
          if (b(r, c) != 0 && !diagram_->contains(r, c)) {
            throw std::invalid_argument("basis matrix is nonzero outside the Ferrers diagram");
          }
        }
      }
    }
  }
}

std::uint64_t RankCode::size() const { return checked_power(field_->size(), dimension()); }

Matrix RankCode::encode(std::span<const Elem> message) const {
  if (message.size() != dimension()) throw std::invalid_argument("message length mismatch");
  if (dimension() == 0) return Matrix(field_, rows_, cols_);
  return Matrix(field_, rows_, cols_, flat_.left_multiply(message));
}

std::optional<std::vector<Elem>> RankCode::message_of(const Matrix& a) const {
  if (a.rows() != rows_ || a.cols() != cols_) throw std::invalid_argument("matrix shape mismatch");
  if (dimension() == 0) {
    if (a.is_zero()) return std::vector<Elem>{};
    return std::nullopt;
  }
  return solve_in_row_space(flat_, a.data());
}

std::size_t rank_distance(const Matrix& a, const Matrix& b) { return rank(a - b); }

void for_each_codeword(const RankCode& code,
                       const std::function<void(std::span<const Elem>)>& visit) {
  const Field& f = *code.field();
  const auto basis = prime_field_basis(code);
  std::vector<Elem> word(code.rows() * code.cols(), 0);
  std::vector<std::uint32_t> digits(basis.size(), 0);
  const std::uint32_t p = f.characteristic();
  while (true) {
    visit(word);
    // Odometer over GF(p); every digit change adds one basis vector.
    std::size_t i = 0;
    while (i < digits.size()) {
      for (std::size_t c = 0; c < word.size(); ++c) word[c] = f.add(word[c], basis[i][c]);
      if (++digits[i] < p) break;
      digits[i] = 0;
      ++i;
    }
    if (i == digits.size()) break;
  }
}

bool has_codeword_of_rank_at_most(const RankCode& code, std::size_t r) {
  if (code.dimension() == 0) return false;
  const bool flip = code.cols() > code.rows();
  const std::size_t rows = flip ? code.cols() : code.rows();
  const std::size_t cols = flip ? code.rows() : code.cols();
  if (r >= cols) return true;
  std::vector<Matrix> basis;
  for (const Matrix& b : code.basis()) basis.push_back(flip ? b.transpose() : b);
  const Field& f = *code.field();
  const std::size_t s = cols - r;
  const std::size_t dim = basis.size();
  return for_each_subspace(code.field(), cols, s, [&](const Matrix& u) {
    // Column i holds B_i u_j^T for every generator u_j of U.
    Matrix system(code.field(), rows * s, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const Matrix& b = basis[i];
      for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t row = 0; row < rows; ++row) {
          Elem acc = 0;
          for (std::size_t c = 0; c < cols; ++c) {
            if (u(j, c) != 0 && b(row, c) != 0) acc = f.add(acc, f.mul(b(row, c), u(j, c)));
          }
          system(j * rows + row, i) = acc;
        }
      }
    }
    return rank(system) < dim;
  });
}

std::optional<std::size_t> min_rank_distance(const RankCode& code, DistanceMethod method) {
  if (code.dimension() == 0) return std::nullopt;
  const std::size_t small = std::min(code.rows(), code.cols());
  if (method == DistanceMethod::automatic) {
    const double enum_cost = power_estimate(code.field()->size(), code.dimension());
    double grass_cost = 0;
    for (std::size_t r = 1; r <= small; ++r) {
      grass_cost += gaussian_binomial(small, small - r, code.field()->size()) *
                    static_cast<double>(code.dimension());
    }
    method = (enum_cost <= 65536.0 || enum_cost <= grass_cost) ? DistanceMethod::enumerate
                                                               : DistanceMethod::grassmannian;
  }
  if (method == DistanceMethod::enumerate) return min_rank_enumerate(code);
  for (std::size_t r = 1; r < small; ++r) {
    if (has_codeword_of_rank_at_most(code, r)) return r;
  }
  return small;
}

RankCode truncate(const GabidulinCode& code, std::size_t eta) {
  const std::size_t m = code.length();
  if (eta > m) throw std::invalid_argument("truncation length exceeds the code length");
  const std::size_t eps = m - eta;
  const RankCode full = code.to_rank_code();
  auto basis = zero_pattern_subcode(full.field(), m, m, full.basis(), eps,
                                    [&](std::size_t, std::size_t c) { return c < eps; });
  RankCode out(full.field(), m, eta, std::move(basis), code.design_distance());
  if (code.form() == GabidulinForm::evaluation) {
    out.set_embedding({std::make_shared<const GabidulinCode>(code), eps, false});
  }
  return out;
}

FerrersCode build_ferrers_rank_code(const FieldPtr& field, const FerrersDiagram& f,
                                    std::size_t delta) {
  if (delta == 0) throw std::invalid_argument("rank distance must be at least 1");
  FerrersCode out;
  out.bound = dim_bound(f, delta);
  const bool conj = f.rows() < f.cols();
  const FerrersDiagram w = conj ? conjugate(f) : f;
  out.hypothesis = !f.empty() && rightmost_columns_full(w, delta);
  const std::size_t m = w.rows();
  const std::size_t eta = w.cols();
  if (f.empty() || delta > eta) {
    out.distance_unreachable = !f.empty() && delta > eta;
    out.code = std::make_shared<const RankCode>(field, f.rows(), f.cols(), std::vector<Matrix>{}, delta, f);
    return out;
  }
  const FieldPtr ext = extension_field(field, static_cast<unsigned>(m));
  auto gab = std::make_shared<const GabidulinCode>(GabidulinCode::evaluation(ext, m - delta + 1));
  const RankCode full = gab->to_rank_code();
  const std::size_t eps = m - eta;
  auto basis = zero_pattern_subcode(field, m, m, full.basis(), eps, [&](std::size_t r, std::size_t c) {
    return c < eps || !w.contains(r, c - eps);
  });
  if (conj) {
    for (Matrix& b : basis) b = b.antitranspose();
    basis = canonical_basis(field, f.rows(), f.cols(), basis);
  }
  auto code = std::make_shared<RankCode>(field, f.rows(), f.cols(), std::move(basis), delta, f);
  code->set_embedding({gab, eps, conj});
  out.code = std::move(code);
  return out;
}

FerrersCode ferrers_rank_code(const FieldPtr& field, const FerrersDiagram& f, std::size_t delta) {
  static std::mutex mutex;
  static std::map<std::string, FerrersCode> cache;
  std::ostringstream key;
  key << field_key(*field) << '|' << delta << '|';
  for (std::size_t len : f.row_lengths()) key << len << ',';
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key.str());
    if (it != cache.end()) return it->second;
  }
  FerrersCode built = build_ferrers_rank_code(field, f, delta);
  if (field->size() == 2 && !built.meets_bound()) {
    for (const auto& name : fixture_code_names()) {
      RankCode fixture = load_fixture_code(name);
      if (fixture.diagram() == f && fixture.declared_distance() == delta &&
          fixture.dimension() > built.code->dimension()) {
        built.code = std::make_shared<const RankCode>(std::move(fixture));
        built.from_fixture = true;
      }
    }
  }
  std::lock_guard lock(mutex);
  cache.emplace(key.str(), built);
  return built;
}

std::vector<std::string> fixture_code_names() { return {"ferrers1_d3_dim3", "ferrers2_d3_dim4"}; }

RankCode load_fixture_code(std::string_view name) {
  const auto names = fixture_code_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw std::invalid_argument("unknown fixture code: " + std::string(name));
  }
  std::istringstream in{std::string(detail::fixture_text(name))};
  const FieldPtr gf2 = Field::gf(2);
  std::vector<std::size_t> rows;
  std::size_t delta = 0;
  std::vector<Matrix> basis;
  std::vector<std::string> pending;
  auto flush = [&] {
    if (!pending.empty()) basis.push_back(Matrix::parse(gf2, pending));
    pending.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head == "diagram") {
      std::size_t len;
      while (words >> len) rows.push_back(len);
    } else if (head == "delta") {
      words >> delta;
    } else {
      pending.push_back(line);
    }
  }
  flush();
  FerrersDiagram f(rows);
  return RankCode(gf2, f.rows(), f.cols(), std::move(basis), delta, f);
}

RankDecodeResult decode_rank_reference(const RankCode& code, const Matrix& received) {
  if (received.rows() != code.rows() || received.cols() != code.cols()) {
    throw std::invalid_argument("received matrix shape mismatch");
  }
  RankDecodeResult out;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::size_t ties = 0;
  std::vector<Elem> best_word;
  Matrix diff(code.field(), code.rows(), code.cols());
  const Field& f = *code.field();
  for_each_codeword(code, [&](std::span<const Elem> w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      diff(i / code.cols(), i % code.cols()) = f.sub(received.data()[i], w[i]);
    }
    const std::size_t d = rank(diff);
    if (d < best) {
      best = d;
      ties = 1;
      best_word.assign(w.begin(), w.end());
    } else if (d == best) {
      ++ties;
    }
  });
  out.codeword = Matrix(code.field(), code.rows(), code.cols(), std::move(best_word));
  out.distance = best;
  out.ambiguous = ties > 1;
  const std::size_t t = code.declared_distance() == 0 ? 0 : (code.declared_distance() - 1) / 2;
  out.success = best <= t;
  return out;
}

RankDecodeResult decode_rank(const RankCode& code, const Matrix& received) {
  if (received.rows() != code.rows() || received.cols() != code.cols()) {
    throw std::invalid_argument("received matrix shape mismatch");
  }
  const std::size_t t = code.declared_distance() == 0 ? 0 : (code.declared_distance() - 1) / 2;
  RankDecodeResult out;
  if (code.dimension() == 0) {
    out.distance = rank(received);
    out.success = out.distance <= t;
    if (out.success) out.codeword = Matrix(code.field(), code.rows(), code.cols());
    return out;
  }
  const auto& emb = code.embedding();
  if (!emb) return decode_rank_reference(code, received);
  const GabidulinCode& gab = *emb->code;
  const Matrix work = emb->conjugated ? received.antitranspose() : received;
  std::vector<Elem> y(emb->prefix, 0);
  const auto tail = gab.contract(work);
  y.insert(y.end(), tail.begin(), tail.end());
  const auto word = gab.decode(y);
  if (!word) return out;
  for (std::size_t i = 0; i < emb->prefix; ++i) {
    if ((*word)[i] != 0) return out;
  }
  Matrix a = gab.expand(std::span<const Elem>(*word).subspan(emb->prefix));
  if (emb->conjugated) a = a.antitranspose();
  if (!code.contains(a)) return out;
  const std::size_t d = rank_distance(received, a);
  if (d > t) return out;
  out.success = true;
  out.distance = d;
  out.codeword = std::move(a);
  return out;
}

double gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  const double qd = static_cast<double>(q);
  double out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= (std::pow(qd, static_cast<double>(n - i)) - 1) / (std::pow(qd, static_cast<double>(i + 1)) - 1);
  }
  return out;
}

}  // namespace projcodes
