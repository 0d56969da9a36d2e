#include "doctest.h"
#include "oracles.hpp"
#include "projcodes/field.hpp"

using namespace projcodes;

TEST_CASE("prime and small extension fields") {
  auto gf2 = Field::make(2, 1);
  CHECK(gf2->size() == 2);
  CHECK(gf2->add(1, 1) == 0);

  auto gf4 = Field::make(2, 2, std::vector<Elem>{1, 1, 1});
  CHECK(gf4->size() == 4);
  // x = code 2, x + 1 = code 3.
  CHECK(gf4->mul(2, 2) == 3);
  CHECK(gf4->mul(2, 3) == 1);

  auto gf3 = Field::make(3, 1);
  CHECK(gf3->inv(2) == 2);

  CHECK_THROWS_AS(Field::make(2, 2, std::vector<Elem>{1, 0, 1}), FieldError);
  CHECK_THROWS_AS(Field::make(4, 1), FieldError);
  CHECK_THROWS_AS(Field::make(2, 5), FieldError);  // no shipped default for 32
  CHECK_THROWS(gf3->inv(0));
}

TEST_CASE("default moduli are irreducible and exist for the desk sizes") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    auto f = Field::gf(q);
    CHECK(f->size() == q);
    if (!f->is_prime()) {
      oracle::Vec m(f->modulus().begin(), f->modulus().end());
      CHECK(oracle::irreducible(m, static_cast<int>(f->characteristic())));
    }
  }
}

TEST_CASE("multiplication matches naive polynomial arithmetic") {
  for (std::uint64_t q : {4, 8, 9, 16}) {
    auto f = Field::gf(q);
    const int p = static_cast<int>(f->characteristic());
    const int e = static_cast<int>(f->prime_digits());
    oracle::Vec m(f->modulus().begin(), f->modulus().end());
    for (Elem a = 0; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) {
        const auto expect = oracle::polymulmod(oracle::digits(a, p, e), oracle::digits(b, p, e), m, p);
        CHECK(f->mul(a, b) == oracle::undigits(expect, p));
        oracle::Vec sum(e);
        const auto da = oracle::digits(a, p, e);
        const auto db = oracle::digits(b, p, e);
        for (int i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
        CHECK(f->add(a, b) == oracle::undigits(sum, p));
      }
    }
  }
}

TEST_CASE("field axioms on every field up to 256 elements") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    auto f = Field::gf(q);
    for (Elem a = 0; a < q; ++a) {
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->add(a, f->neg(a)) == 0);
      for (Elem b = 0; b < q; ++b) {
        for (Elem c = 0; c < q; ++c) {
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        }
      }
    }
  }
  auto big = Field::make_extension(Field::gf(2), 8);
  for (Elem a = 1; a < 256; a += 7) {
    for (Elem b = 0; b < 256; b += 3) {
      CHECK(big->mul(big->div(b, a), a) == b);
    }
  }
}

TEST_CASE("Frobenius over the base field") {
  auto gf2 = Field::gf(2);
  auto gf4 = Field::make_extension(gf2, 2, std::vector<Elem>{1, 1, 1});
  CHECK(gf4->frobenius(2, 1) == 3);

  auto gf4b = Field::gf(4);
  auto ext = Field::make_extension(gf4b, 3);
  CHECK(ext->size() == 64);
  for (Elem a = 0; a < 4; ++a) CHECK(ext->frobenius(a) == a);
  for (Elem a = 0; a < 64; ++a) {
    CHECK(ext->frobenius(a, 3) == a);
    CHECK(ext->frobenius(a) == ext->pow(a, 4));
    for (Elem b = 0; b < 64; b += 5) {
      CHECK(ext->frobenius(ext->add(a, b)) == ext->add(ext->frobenius(a), ext->frobenius(b)));
    }
  }
}

TEST_CASE("coordinates round trip") {
  auto gf16 = Field::make_extension(Field::gf(2), 4);
  CHECK(gf16->to_coords(0) == std::vector<Elem>(4, 0));
  CHECK(gf16->to_coords(1) == std::vector<Elem>{1, 0, 0, 0});
  for (Elem a = 0; a < 16; ++a) CHECK(gf16->from_coords(gf16->to_coords(a)) == a);

  auto gf4096 = Field::make_extension(Field::gf(2), 12);
  for (Elem a = 0; a < 4096; ++a) CHECK(gf4096->from_coords(gf4096->to_coords(a)) == a);
  std::vector<Elem> coords(12, 0);
  coords[5] = 1;
  CHECK(gf4096->to_coords(gf4096->from_coords(coords)) == coords);
  CHECK_THROWS(gf16->from_coords(std::vector<Elem>{1, 0}));

  auto gf27 = Field::make_extension(Field::gf(3), 3);
  for (Elem a = 0; a < 27; ++a) {
    for (Elem b = 0; b < 27; ++b) {
      // Coordinates are additive.
      auto ca = gf27->to_coords(a);
      auto cb = gf27->to_coords(b);
      auto cs = gf27->to_coords(gf27->add(a, b));
      for (int i = 0; i < 3; ++i) CHECK(cs[i] == (ca[i] + cb[i]) % 3);
    }
  }
}

TEST_CASE("FieldElement checks its field") {
  auto gf4 = Field::gf(4);
  auto gf2 = Field::gf(2);
  FieldElement x(gf4, 2);
  CHECK((x * x).value() == 3);
  CHECK((x * x.inverse()).value() == 1);
  CHECK(x.frobenius().value() == 3);
  CHECK_THROWS_AS(x + FieldElement(gf2, 1), FieldError);
  CHECK_THROWS(FieldElement(gf4, 0).inverse());
  CHECK_THROWS(FieldElement(gf4, 4));
}
