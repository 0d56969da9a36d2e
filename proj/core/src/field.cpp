#include "projcodes/field.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace projcodes {

namespace {

constexpr std::uint64_t kTableLimit = 1ULL << 16;
constexpr std::uint64_t kAddTableLimit = 1ULL << 10;

// Conway polynomials, low to high.
const std::map<std::uint64_t, std::vector<Elem>>& default_moduli() {
  static const std::map<std::uint64_t, std::vector<Elem>> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {9, {2, 2, 1}},
      {16, {1, 1, 0, 0, 1}},
  };
  return table;
}

bool has_full_order(const Field& f, Elem a) {
  if (a == 0) return false;
  const std::uint64_t order = f.size() - 1;
  if (order == 0) return false;
  if (order == 1) return a == 1;
  for (std::uint64_t r : prime_factors(order)) {
    if (f.pow(a, order / r) == 1) return false;
  }
  return true;
}

void validate_modulus(const Field& over, const std::vector<Elem>& modulus, unsigned degree) {
  if (modulus.size() != degree + 1) {
    throw FieldError("modulus must have degree " + std::to_string(degree));
  }
  if (modulus.back() != 1) throw FieldError("modulus must be monic");
  for (Elem c : modulus) {
    if (!over.contains(c)) throw FieldError("modulus coefficient outside the base field");
  }
  if (!poly::is_irreducible(over, modulus)) throw FieldError("modulus is reducible");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field::Field(Token, std::uint32_t p, FieldPtr base, unsigned degree, std::vector<Elem> modulus)
    : p_(p), base_(std::move(base)), degree_(degree), modulus_(std::move(modulus)) {
  base_size_ = base_ ? base_->size() : p_;
  size_ = base_ ? 1 : p_;
  if (base_) {
    for (unsigned i = 0; i < degree_; ++i) {
      size_ *= base_size_;
      if (size_ > (1ULL << 32)) throw FieldError("field larger than 2^32 elements");
    }
  }
  prime_digits_ = (base_ ? base_->prime_digits() * degree_ : 1);
  build_tables();
}

FieldPtr Field::make(std::uint32_t p, unsigned e, std::optional<std::vector<Elem>> modulus) {
  if (!projcodes::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw FieldError("extension degree must be at least 1");
  if (e > 32) throw FieldError("extension degree above 32 is not supported");
  auto prime = std::make_shared<const Field>(Token{}, p, nullptr, 1, std::vector<Elem>{0, 1});
  if (e == 1) {
    if (modulus) validate_modulus(*prime, *modulus, 1);
    return prime;
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > (1ULL << 32)) throw FieldError("field larger than 2^32 elements");
  }
  if (!modulus) {
    auto it = default_moduli().find(q);
    if (it == default_moduli().end()) {
      throw FieldError("no default modulus for GF(" + std::to_string(q) + ")");
    }
    modulus = it->second;
  }
  validate_modulus(*prime, *modulus, e);
  return std::make_shared<const Field>(Token{}, p, prime, e, *modulus);
}

FieldPtr Field::make_extension(FieldPtr base, unsigned m,
                               std::optional<std::vector<Elem>> modulus) {
  if (!base) throw FieldError("extension needs a base field");
  if (m < 1) throw FieldError("extension degree must be at least 1");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < m; ++i) {
    size *= base->size();
    if (size > (1ULL << 32)) throw FieldError("field larger than 2^32 elements");
  }
  if (modulus) {
    validate_modulus(*base, *modulus, m);
    return std::make_shared<const Field>(Token{}, base->characteristic(), base, m, *modulus);
  }
  // First monic primitive polynomial in increasing code order of the
  // non-leading coefficients.
  const std::uint64_t count = size;
  for (std::uint64_t code = 1; code < count; ++code) {
    std::vector<Elem> cand(m + 1);
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      cand[i] = static_cast<Elem>(c % base->size());
      c /= base->size();
    }
    cand[m] = 1;
    if (cand[0] == 0) continue;
    if (!poly::is_irreducible(*base, cand)) continue;
    auto field = std::make_shared<const Field>(Token{}, base->characteristic(), base, m, cand);
    const Elem x = m == 1 ? base->primitive_element() : static_cast<Elem>(base->size());
    if (m == 1) {
      // x + c0 has root -c0; primitive iff that root generates.
      if (!has_full_order(*field, base->neg(cand[0]))) continue;
    } else if (!has_full_order(*field, x)) {
      continue;
    }
    return field;
  }
  throw FieldError("no primitive polynomial found");
}

FieldPtr Field::gf(std::uint64_t q) {
  if (q < 2) throw FieldError("field size must be at least 2");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) throw FieldError(std::to_string(q) + " is not a prime power");
  const std::uint64_t p = factors.front();
  unsigned e = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++e;
  return make(static_cast<std::uint32_t>(p), e);
}

void Field::build_tables() {
  if (p_ != 2 && size_ <= kAddTableLimit) {
    add_table_.assign(size_ * size_, 0);
    neg_table_.assign(size_, 0);
    for (Elem a = 0; a < size_; ++a) {
      for (Elem b = 0; b < size_; ++b) {
        std::uint64_t x = a, y = b, r = 0, mult = 1;
        for (unsigned d = 0; d < prime_digits_; ++d) {
          r += ((x % p_ + y % p_) % p_) * mult;
          x /= p_;
          y /= p_;
          mult *= p_;
        }
        add_table_[a * size_ + b] = static_cast<Elem>(r);
        if (r == 0) neg_table_[a] = b;
      }
    }
  }

  // Primitive element: smallest code of full multiplicative order.
  for (std::uint64_t g = 1; g < size_; ++g) {
    if (has_full_order(*this, static_cast<Elem>(g))) {
      primitive_ = static_cast<Elem>(g);
      break;
    }
  }

  if (size_ <= kTableLimit && size_ > 2) {
    const std::uint64_t order = size_ - 1;
    exp_.assign(2 * order, 0);
    log_.assign(size_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = x;
      exp_[i + order] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, primitive_);
    }
  }
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
  if (is_prime()) return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % p_);
  std::uint64_t r = 0, mult = 1;
  std::uint64_t x = a, y = b;
  for (unsigned d = 0; d < prime_digits_; ++d) {
    r += ((x % p_ + y % p_) % p_) * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return static_cast<Elem>(r);
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (!neg_table_.empty()) return neg_table_[a];
  if (is_prime()) return a == 0 ? 0 : p_ - a;
  std::uint64_t r = 0, mult = 1;
  std::uint64_t x = a;
  for (unsigned d = 0; d < prime_digits_; ++d) {
    r += ((p_ - x % p_) % p_) * mult;
    x /= p_;
    mult *= p_;
  }
  return static_cast<Elem>(r);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!base_) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  const Field& B = *base_;
  const auto x = to_coords(a);
  const auto y = to_coords(b);
  std::vector<Elem> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      if (y[j] == 0) continue;
      prod[i + j] = B.add(prod[i + j], B.mul(x[i], y[j]));
    }
  }
  for (std::size_t i = prod.size(); i-- > degree_;) {
    const Elem c = prod[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      prod[i - degree_ + j] = B.sub(prod[i - degree_ + j], B.mul(c, modulus_[j]));
    }
    prod[i] = 0;
  }
  return from_coords(std::span<const Elem>(prod.data(), degree_));
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw FieldError("inverse of zero");
  if (!exp_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  if (order == 1) return 1;
  e %= order;
  if (!exp_.empty()) return exp_[(static_cast<std::uint64_t>(log_[a]) * e) % order];
  Elem result = 1;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul_slow(result, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::frobenius(Elem a, unsigned i) const {
  if (a == 0 || size_ == base_size_) return a;
  const std::uint64_t order = size_ - 1;
  std::uint64_t e = 1;
  for (unsigned k = 0; k < i % degree_; ++k) e = (e * base_size_) % order;
  return pow(a, e == 0 ? order : e);
}

std::vector<Elem> Field::to_coords(Elem a) const {
  std::vector<Elem> out(degree_);
  std::uint64_t x = a;
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = static_cast<Elem>(x % base_size_);
    x /= base_size_;
  }
  return out;
}

Elem Field::from_coords(std::span<const Elem> coords) const {
  if (coords.size() != degree_) {
    throw FieldError("coordinate vector must have length " + std::to_string(degree_));
  }
  std::uint64_t r = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= base_size_) throw FieldError("coordinate outside the base field");
    r = r * base_size_ + coords[i];
  }
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::prime_digit_vector(Elem a) const {
  std::vector<std::uint32_t> out(prime_digits_);
  std::uint64_t x = a;
  for (unsigned i = 0; i < prime_digits_; ++i) {
    out[i] = static_cast<std::uint32_t>(x % p_);
    x /= p_;
  }
  return out;
}

Elem Field::from_prime_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != prime_digits_) throw FieldError("wrong number of digits");
  std::uint64_t r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw FieldError("digit out of range");
    r = r * p_ + digits[i];
  }
  return static_cast<Elem>(r);
}

bool Field::same_as(const Field& other) const {
  if (this == &other) return true;
  if (p_ != other.p_ || degree_ != other.degree_ || size_ != other.size_) return false;
  if (modulus_ != other.modulus_) return false;
  if (!base_ || !other.base_) return !base_ && !other.base_;
  return base_->same_as(*other.base_);
}

std::string Field::describe() const {
  std::ostringstream os;
  if (!base_) {
    os << "GF(" << p_ << ")";
  } else if (base_->is_prime()) {
    os << "GF(" << p_ << "^" << degree_ << ")";
  } else {
    os << "GF(" << base_size_ << "^" << degree_ << ") over " << base_->describe();
  }
  return os.str();
}

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly rem(const Field& f, Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Elem lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    const Elem c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = f.sub(a[shift + j], f.mul(c, m[j]));
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
  }
  return rem(f, std::move(prod), m);
}

Poly powmod(const Field& f, Poly a, std::uint64_t e, const Poly& m) {
  Poly result = rem(f, Poly{1}, m);
  a = rem(f, std::move(a), m);
  while (e) {
    if (e & 1) result = mulmod(f, result, a, m);
    e >>= 1;
    if (e) a = mulmod(f, a, a, m);
  }
  return result;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem lead_inv = f.inv(a.back());
    for (Elem& c : a) c = f.mul(c, lead_inv);
  }
  return a;
}

bool is_irreducible(const Field& f, const Poly& m) {
  Poly mod = m;
  trim(mod);
  if (mod.size() < 2) return false;
  const std::size_t deg = mod.size() - 1;
  if (deg == 1) return true;
  const std::uint64_t q = f.size();
  // powers[j] = x^(q^j) mod m
  std::vector<Poly> powers{rem(f, Poly{0, 1}, mod)};
  for (std::size_t j = 1; j <= deg; ++j) powers.push_back(powmod(f, powers.back(), q, mod));
  auto minus_x = [&](Poly p) {
    p.resize(std::max<std::size_t>(p.size(), 2), 0);
    p[1] = f.sub(p[1], 1);
    trim(p);
    return p;
  };
  if (!minus_x(powers[deg]).empty()) return false;
  for (std::uint64_t r : prime_factors(deg)) {
    Poly g = gcd(f, minus_x(powers[deg / r]), mod);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw FieldError("element without a field");
  if (!field_->contains(value_)) throw FieldError("value outside the field");
}

namespace {
const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same_as(*b.field())) throw FieldError("operands belong to different fields");
  return a.field();
}
}  // namespace

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::frobenius(unsigned i) const {
  return {field_, field_->frobenius(value_, i)};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return {f, f->div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

}  // namespace projcodes
