#include <gtest/gtest.h>

#include <set>

#include "wps/finite_field.hpp"

using wps::FieldCtx;
using wps::FieldElement;

namespace {

// Digit-wise addition of base-p indices.
std::uint32_t digit_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t out = 0, scale = 1;
  while (a || b) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

}  // namespace

TEST(FiniteField, PrimeFieldMatchesModularArithmetic) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 19u}) {
    const auto f = wps::parse_field(std::to_string(p));
    EXPECT_EQ(f.order(), p);
    EXPECT_EQ(f.degree(), 1u);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        EXPECT_EQ(f.add(f.element(a), f.element(b)).index(), (a + b) % p);
        EXPECT_EQ(f.mul(f.element(a), f.element(b)).index(), (a * b) % p);
        EXPECT_EQ(f.sub(f.element(a), f.element(b)).index(), (a + p - b) % p);
      }
  }
}

TEST(FiniteField, ExtensionFieldAxioms) {
  for (const char* spec : {"4", "8", "9", "16", "25", "27", "2^5", "3^3"}) {
    const auto f = wps::parse_field(spec);
    const std::uint32_t q = f.order(), p = f.characteristic();
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto x = f.element(a);
      if (a) {
        EXPECT_EQ(f.mul(x, f.inv(x)), f.one()) << spec << " a=" << a;
      }
      EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
      EXPECT_EQ(f.pow(x, q), x) << spec;
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto y = f.element(b);
        EXPECT_EQ(f.add(x, y).index(), digit_add(a, b, p));
        EXPECT_EQ(f.mul(x, y), f.mul(y, x));
      }
    }
    // Distributivity and associativity on a sparse grid.
    for (std::uint32_t a = 1; a < q; a += 3)
      for (std::uint32_t b = 0; b < q; b += 2)
        for (std::uint32_t c = 0; c < q; c += 5) {
          const auto x = f.element(a), y = f.element(b), z = f.element(c);
          EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
          EXPECT_EQ(f.mul(x, f.mul(y, z)), f.mul(f.mul(x, y), z));
        }
  }
}

TEST(FiniteField, GeneratorHasFullOrder) {
  for (const char* spec : {"2", "4", "7", "9", "16", "19", "49", "256", "65536"}) {
    const auto f = wps::parse_field(spec);
    const std::uint32_t n = f.order() - 1;
    std::set<std::uint32_t> seen;
    for (std::uint64_t k = 0; k < n; ++k) {
      const auto g = f.generator_power(k);
      seen.insert(g.index());
      EXPECT_EQ(f.log(g), k % n);
    }
    EXPECT_EQ(seen.size(), n) << spec;
  }
}

TEST(FiniteField, LargestFieldInverses) {
  const auto f = wps::parse_field("2^16");
  EXPECT_EQ(f.order(), 65536u);
  for (std::uint32_t a = 1; a < f.order(); a += 97) {
    const auto x = f.element(a);
    EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    EXPECT_EQ(f.div(f.mul(x, x), x), x);
  }
}

TEST(FiniteField, RejectsInvalidOrders) {
  for (const char* bad : {"0", "1", "6", "12", "100", "2^17", "65537", "abc", "3^", "", "-5"})
    EXPECT_THROW(wps::parse_field(bad), std::invalid_argument) << bad;
  EXPECT_THROW(wps::make_field(4, 1), std::invalid_argument);
}

TEST(FiniteField, ElementIndexOutOfRange) {
  const auto f = wps::parse_field("5");
  EXPECT_THROW(f.element(5), std::out_of_range);
}

TEST(FiniteField, FrobeniusIsAdditive) {
  const auto f = wps::parse_field("27");
  for (std::uint32_t a = 0; a < 27; ++a)
    for (std::uint32_t b = 0; b < 27; ++b) {
      const auto x = f.element(a), y = f.element(b);
      EXPECT_EQ(f.pow(f.add(x, y), 3), f.add(f.pow(x, 3), f.pow(y, 3)));
    }
}
