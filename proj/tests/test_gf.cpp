#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "coverlrc/gf.hpp"

using namespace coverlrc;

namespace {

// Independent GF(2^8) multiply: carry-less product reduced by the full
// modulus bitmask (x^8 term included). Cross-checks the table-driven path.
uint32_t gf256_mul_oracle(uint32_t a, uint32_t b, uint32_t modulus_bits) {
  uint32_t prod = 0;
  for (int i = 0; i < 8; ++i)
    if (b & (1u << i)) prod ^= a << i;
  for (int bit = 15; bit >= 8; --bit)
    if (prod & (1u << bit)) prod ^= modulus_bits << (bit - 8);
  return prod;
}

const std::vector<uint32_t> kAesModulus = {1, 1, 0, 1, 1, 0, 0, 0, 1};  // x^8+x^4+x^3+x+1

}  // namespace

TEST_CASE("field construction") {
  SECTION("GF(256) has 256 elements") {
    Field f(2, 8);
    CHECK(f.order() == 256);
    CHECK(f.characteristic() == 2);
    CHECK(f.extension_degree() == 8);
  }
  SECTION("GF(13) is a prime field") {
    Field f(13, 1);
    CHECK(f.order() == 13);
    CHECK(f.label() == "GF(13)");
  }
  SECTION("non-prime characteristic rejected") {
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(1, 1), std::invalid_argument);
  }
  SECTION("size cap enforced") {
    CHECK_THROWS_AS(Field(2, 21), std::invalid_argument);
    CHECK_NOTHROW(Field(2, 20));
  }
  SECTION("default modulus is deterministic") {
    Field a(2, 8), b(2, 8);
    CHECK(a.modulus() == b.modulus());
    CHECK(a == b);
  }
  SECTION("supplied modulus overrides the default") {
    Field f(2, 8, kAesModulus);
    CHECK(f.modulus() == kAesModulus);
  }
  SECTION("reducible modulus rejected") {
    // x^8 + 1 = (x+1)^8 over GF(2)
    CHECK_THROWS_AS(Field(2, 8, {1, 0, 0, 0, 0, 0, 0, 0, 1}), std::invalid_argument);
  }
  SECTION("degenerate modulus shape rejected") {
    CHECK_THROWS_AS(Field(2, 8, {1, 1, 1}), std::invalid_argument);         // wrong degree
    CHECK_THROWS_AS(Field(2, 2, {1, 1, 0}), std::invalid_argument);         // not monic
  }
}

TEST_CASE("field arithmetic examples") {
  SECTION("3 * 9 = 1 in GF(13)") {
    Field f(13, 1);
    CHECK(f.element(3) * f.element(9) == f.one());
  }
  SECTION("additive identity") {
    Field f(13, 1);
    for (uint32_t i = 0; i < f.order(); ++i) CHECK(f.element(i) + f.zero() == f.element(i));
  }
  SECTION("x^7 * x reduces by the AES modulus") {
    Field f(2, 8, kAesModulus);
    // x^7 is index 128, x is index 2; x^8 = x^4 + x^3 + x + 1 = index 27
    CHECK(f.mul(128, 2) == 27);
  }
  SECTION("division by zero rejected") {
    Field f(13, 1);
    CHECK_THROWS_AS(f.element(5) / f.zero(), std::invalid_argument);
  }
  SECTION("mixed fields rejected") {
    Field a(13, 1), b(11, 1);
    CHECK_THROWS_AS(a.element(1) + b.element(1), std::invalid_argument);
  }
}

TEST_CASE("primitive elements") {
  SECTION("GF(13) generator is 2 with order 12") {
    Field f(13, 1);
    const FieldElement g = f.primitive_element();
    CHECK(g.index() == 2);
    std::set<uint32_t> seen;
    FieldElement acc = f.one();
    for (int i = 0; i < 12; ++i) {
      acc = acc * g;
      seen.insert(acc.index());
    }
    CHECK(seen.size() == 12);
    CHECK(acc == f.one());
  }
  SECTION("GF(2) has no generator") {
    Field f(2, 1);
    CHECK_THROWS_AS(f.primitive_element(), std::invalid_argument);
  }
  SECTION("GF(256) generator has full order") {
    Field f(2, 8);
    const FieldElement g = f.primitive_element();
    CHECK(g.pow(255) == f.one());
    CHECK(g.pow(85) != f.one());   // 255 / 3
    CHECK(g.pow(51) != f.one());   // 255 / 5
    CHECK(g.pow(15) != f.one());   // 255 / 17
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(0x5eed);
  for (const Field& f : {Field(13, 1), Field(2, 8), Field(3, 2), Field(5, 2), Field(2, 1)}) {
    const uint32_t q = f.order();
    for (int iter = 0; iter < 200; ++iter) {
      const uint32_t a = static_cast<uint32_t>(rng() % q);
      const uint32_t b = static_cast<uint32_t>(rng() % q);
      const uint32_t c = static_cast<uint32_t>(rng() % q);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.sub(f.add(a, b), b) == a);
    }
    for (uint32_t a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, q - 1) == 1);  // Fermat
    }
  }
}

TEST_CASE("enumeration yields q distinct canonical elements") {
  for (const Field& f : {Field(13, 1), Field(3, 2), Field(2, 4)}) {
    std::set<uint32_t> seen;
    for (uint32_t i = 0; i < f.order(); ++i) {
      const FieldElement e = f.element(i);
      CHECK(e.index() == i);
      seen.insert(e.index());
    }
    CHECK(seen.size() == f.order());
    CHECK_THROWS_AS(f.element(f.order()), std::invalid_argument);
  }
}

TEST_CASE("table-driven GF(256) multiply matches a bit-level oracle") {
  Field f(2, 8, kAesModulus);
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 2000; ++iter) {
    const uint32_t a = static_cast<uint32_t>(rng() % 256);
    const uint32_t b = static_cast<uint32_t>(rng() % 256);
    CHECK(f.mul(a, b) == gf256_mul_oracle(a, b, 0x11b));
  }
}

TEST_CASE("coefficient round trip") {
  Field f(3, 3);
  for (uint32_t i = 0; i < f.order(); ++i) {
    CHECK(f.from_coefficients(f.coefficients(i)) == i);
  }
}

TEST_CASE("large binary fields on both arithmetic paths") {
  std::mt19937_64 rng(0xfeed);
  // GF(2^16) uses tables, GF(2^17) the generic path
  for (const Field& f : {Field(2, 16), Field(2, 17)}) {
    const uint32_t q = f.order();
    for (int iter = 0; iter < 50; ++iter) {
      const uint32_t a = 1 + static_cast<uint32_t>(rng() % (q - 1));
      const uint32_t b = 1 + static_cast<uint32_t>(rng() % (q - 1));
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.div(f.mul(a, b), b) == a);
      CHECK(f.pow(a, q - 1) == 1);
      CHECK(f.mul(a, f.add(b, 1)) == f.add(f.mul(a, b), a));
    }
  }
}
