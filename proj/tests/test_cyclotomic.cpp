#include <gtest/gtest.h>

#include <random>

#include "hopf32/cyclotomic.hpp"
#include "oracles.hpp"

using hopf32::Cyc;

TEST(Cyclotomic, ZetaFourSquaredIsMinusOne) { EXPECT_EQ(Cyc::zeta(4) * Cyc::zeta(4), Cyc(-1)); }

TEST(Cyclotomic, XiSquaredIsI) { EXPECT_EQ(Cyc::xi() * Cyc::xi(), Cyc::i()); }

TEST(Cyclotomic, InverseOfI) { EXPECT_EQ(Cyc::i().inv(), -Cyc::i()); }

TEST(Cyclotomic, InverseOfZeroThrows) { EXPECT_THROW(Cyc().inv(), std::domain_error); }

TEST(Cyclotomic, RootOrder) {
  EXPECT_EQ(hopf32::root_order(Cyc(-1)), 2);
  EXPECT_EQ(hopf32::root_order(Cyc::zeta(1)), 16);
  EXPECT_EQ(hopf32::root_order(Cyc(1)), 1);
  EXPECT_FALSE(hopf32::root_order(Cyc(2)).has_value());
  EXPECT_FALSE(hopf32::root_order(Cyc(1) + Cyc::i()).has_value());
}

TEST(Cyclotomic, OrderN) {
  EXPECT_EQ(hopf32::nq(Cyc(-1)), 2);
  EXPECT_FALSE(hopf32::nq(Cyc(1)).has_value());
  EXPECT_EQ(hopf32::nq(Cyc::i()), 4);
  EXPECT_EQ(hopf32::nq(Cyc::xi()), 8);
}

TEST(Cyclotomic, QFactorialVanishesAtOrder) {
  for (int k : {2, 4, 8, 16}) {
    Cyc q = Cyc::zeta(16 / k);
    for (int n = 1; n <= 16; ++n) {
      EXPECT_EQ(hopf32::q_factorial(n, q).is_zero(), n >= k) << "order " << k << " n " << n;
    }
  }
}

TEST(Cyclotomic, QBinomialAtOne) {
  EXPECT_EQ(hopf32::q_binomial(5, 2, Cyc(1)), Cyc(10));
  EXPECT_EQ(hopf32::q_binomial(4, 2, Cyc(-1)), Cyc(2));
}

TEST(Cyclotomic, ParseShortForms) {
  EXPECT_EQ(hopf32::parse_scalar("-1"), Cyc(-1));
  EXPECT_EQ(hopf32::parse_scalar("i"), Cyc::i());
  EXPECT_EQ(hopf32::parse_scalar("-i"), -Cyc::i());
  EXPECT_EQ(hopf32::parse_scalar("x^3"), Cyc::zeta(6));
  EXPECT_EQ(hopf32::parse_scalar("i*z"), Cyc::zeta(5));
  EXPECT_EQ(hopf32::parse_scalar("1/2 + 3*z^7"), Cyc(mpq_class(1, 2)) + Cyc::zeta(7).scaled(3));
}

TEST(Cyclotomic, ShortStr) {
  EXPECT_EQ(hopf32::short_str(Cyc(-1)), "-1");
  EXPECT_EQ(hopf32::short_str(Cyc::zeta(12)), "-i");
  EXPECT_EQ(hopf32::short_str(Cyc::zeta(2)), "x");
  EXPECT_EQ(hopf32::short_str(Cyc::zeta(6)), "x^3");
  EXPECT_EQ(hopf32::short_str(Cyc::zeta(3)), "z^3");
}

class CyclotomicRandom : public ::testing::Test {
 protected:
  std::mt19937 rng{20240611};
};

TEST_F(CyclotomicRandom, AgreesWithComplexEvaluation) {
  for (int t = 0; t < 200; ++t) {
    Cyc a = oracle::random_cyc(rng), b = oracle::random_cyc(rng);
    auto ca = oracle::to_complex(a), cb = oracle::to_complex(b);
    EXPECT_TRUE(oracle::near(oracle::to_complex(a + b), ca + cb));
    EXPECT_TRUE(oracle::near(oracle::to_complex(a - b), ca - cb));
    EXPECT_TRUE(oracle::near(oracle::to_complex(a * b), ca * cb));
    if (!b.is_zero()) {
      EXPECT_TRUE(oracle::near(oracle::to_complex(a / b), ca / cb)) << a.str() << " / " << b.str();
    }
    int k = static_cast<int>(rng() % 37) - 18;
    EXPECT_TRUE(oracle::near(oracle::to_complex(a.times_zeta(k)), ca * oracle::to_complex(Cyc::zeta(k))));
  }
}

TEST_F(CyclotomicRandom, FieldAxioms) {
  for (int t = 0; t < 100; ++t) {
    Cyc a = oracle::random_cyc(rng), b = oracle::random_cyc(rng), c = oracle::random_cyc(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), Cyc());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), Cyc(1));
    }
  }
}

TEST_F(CyclotomicRandom, StrParseRoundTrip) {
  for (int t = 0; t < 100; ++t) {
    Cyc a = oracle::random_cyc(rng).scaled(mpq_class(static_cast<int>(rng() % 7) + 1, 3));
    EXPECT_EQ(Cyc::parse(a.str()), a) << a.str();
    EXPECT_EQ(hopf32::parse_scalar(hopf32::short_str(a)), a);
  }
}

TEST_F(CyclotomicRandom, GaloisIsMultiplicative) {
  for (int t = 0; t < 50; ++t) {
    Cyc a = oracle::random_cyc(rng), b = oracle::random_cyc(rng);
    for (int k : {3, 5, 7, 15}) EXPECT_EQ((a * b).galois(k), a.galois(k) * b.galois(k));
  }
}
