#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace projcodes {

/// Field element code. An element of GF(p^e) is stored as the integer whose
/// base-p digits are its coefficients in the polynomial basis (least
/// significant digit = constant term). Extension elements nest the same way:
/// the digits base |B| of an element of GF(|B|^m) are its coordinates over B.
using Elem = std::uint32_t;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field, either GF(p^e) built over the prime field or an extension
/// GF(Q^m) built over another Field of size Q. Immutable after construction.
class Field {
  struct Token {};

 public:
  /// GF(p^e). Without a modulus, a shipped default is used for
  /// q in {4, 8, 9, 16}; prime fields need none.
  static FieldPtr make(std::uint32_t p, unsigned e,
                       std::optional<std::vector<Elem>> modulus = std::nullopt);

  /// GF(Q^m) over `base`. Without a modulus, the first monic primitive
  /// polynomial of degree m over `base` (in increasing code order) is used.
  static FieldPtr make_extension(FieldPtr base, unsigned m,
                                 std::optional<std::vector<Elem>> modulus = std::nullopt);

  /// GF(q) with the default modulus; q must be a prime power.
  static FieldPtr gf(std::uint64_t q);

  Field(Token, std::uint32_t p, FieldPtr base, unsigned degree, std::vector<Elem> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t size() const { return size_; }
  /// Degree over base(); 1 for a prime field.
  unsigned degree() const { return degree_; }
  /// Size of the field this one is built over (p for GF(p^e) and GF(p)).
  std::uint64_t base_size() const { return base_size_; }
  /// The field this one is built over; the prime field for GF(p^e), null
  /// for prime fields.
  const FieldPtr& base() const { return base_; }
  bool is_prime() const { return size_ == p_; }
  /// Monic modulus over the base, coefficients low to high (length degree+1).
  const std::vector<Elem>& modulus() const { return modulus_; }
  Elem primitive_element() const { return primitive_; }
  /// Number of base-p digits in an element code.
  unsigned prime_digits() const { return prime_digits_; }

  bool contains(Elem a) const { return a < size_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// a^(base_size^i), the i-fold Frobenius over the base field.
  Elem frobenius(Elem a, unsigned i = 1) const;

  /// Coordinates over the base field in the polynomial basis.
  std::vector<Elem> to_coords(Elem a) const;
  Elem from_coords(std::span<const Elem> coords) const;

  /// The embedded copy of a base-field element.
  Elem from_base(Elem b) const { return b; }
  bool in_base(Elem a) const { return a < base_size_; }

  /// Base-p digits, least significant first, padded to prime_digits().
  std::vector<std::uint32_t> prime_digit_vector(Elem a) const;
  Elem from_prime_digits(std::span<const std::uint32_t> digits) const;

  bool same_as(const Field& other) const;
  std::string describe() const;

 private:
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_;
  FieldPtr base_;
  unsigned degree_;
  std::vector<Elem> modulus_;
  std::uint64_t base_size_;
  std::uint64_t size_;
  unsigned prime_digits_;
  Elem primitive_ = 0;

  std::vector<Elem> exp_;            // doubled length, empty when no tables
  std::vector<std::uint32_t> log_;
  std::vector<Elem> add_table_;      // odd characteristic, small fields only
  std::vector<Elem> neg_table_;
};

/// Polynomial-over-a-field helpers shared by field construction and tests.
namespace poly {
using Poly = std::vector<Elem>;  // low to high

void trim(Poly& a);
Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Field& f, Poly a, std::uint64_t e, const Poly& m);
Poly rem(const Field& f, Poly a, const Poly& m);
Poly gcd(const Field& f, Poly a, Poly b);
/// Rabin's test; `m` monic of degree >= 1 over `f`.
bool is_irreducible(const Field& f, const Poly& m);
}  // namespace poly

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Element bundled with its field, for checked scalar arithmetic.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius(unsigned i = 1) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Elem value_;
};

}  // namespace projcodes
