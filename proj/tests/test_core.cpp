#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hgdec/bitset.hpp"
#include "hgdec/rational.hpp"

using namespace hgdec;

TEST_CASE("bitset basics") {
  Bitset b(130);
  CHECK(b.empty());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  CHECK_FALSE(b.test(63));
  CHECK(b.find_first() == 0);
  CHECK(b.find_next(0) == 64);
  CHECK(b.find_next(64) == 129);
  CHECK(b.find_next(129) == Bitset::npos);

  Bitset c(130);
  c.set(64);
  CHECK(c.is_subset_of(b));
  CHECK_FALSE(b.is_subset_of(c));
  CHECK(b.intersects(c));
  CHECK((b - c).count() == 2);
  CHECK((b & c) == c);
  CHECK((b | c) == b);
}

TEST_CASE("bitset full and iteration") {
  auto f = Bitset::full(70);
  CHECK(f.count() == 70);
  std::size_t n = 0;
  for (auto i : f) {
    CHECK(i == n);
    ++n;
  }
  CHECK(n == 70);
}

TEST_CASE("bitset lex order follows ascending index sequences") {
  Bitset a(10), b(10);
  a.set(0);
  a.set(5);
  b.set(1);
  b.set(2);
  CHECK(a.lex_less(b));
  CHECK_FALSE(b.lex_less(a));
  Bitset c = a;
  CHECK_FALSE(a.lex_less(c));
  c.set(7);
  CHECK(a.lex_less(c));  // proper prefix first
}

TEST_CASE("rational arithmetic is exact") {
  Rational half(1, 2);
  Rational third(1, 3);
  CHECK((half + third) == Rational(5, 6));
  CHECK((half * third) == Rational(1, 6));
  CHECK(half > third);
  CHECK(Rational(2, 4) == half);
  CHECK(Rational(-1, -2) == half);
  CHECK(Rational(1, -2) < Rational(0));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(2).to_string() == "2");
}

TEST_CASE("rational decimal rendering") {
  CHECK(Rational(3, 2).to_decimal() == "1.5");
  CHECK(Rational(1, 3).to_decimal() == "0.333333");
  CHECK(Rational(2, 3).to_decimal() == "0.666667");
  CHECK(Rational(1).to_decimal() == "1");
  CHECK(Rational(-3, 2).to_decimal() == "-1.5");
}

TEST_CASE("from_double snaps to small rationals") {
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(1.0 / 3.0) == Rational(1, 3));
  CHECK(Rational::from_double(0.25) == Rational(1, 4));
  CHECK(Rational::from_double(2.0) == Rational(2));
  CHECK(Rational::from_double(1.0 / 7.0) == Rational(1, 7));
  // noisy input near a simple fraction recovers it
  CHECK(Rational::from_double(0.3333333314) == Rational(1, 3));
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::int64_t den = 1 + rng() % 999;
    std::int64_t num = rng() % (den + 1);
    double x = static_cast<double>(num) / static_cast<double>(den);
    auto r = Rational::from_double(x);
    CHECK(std::abs(r.to_double() - x) < 1e-9);
    CHECK(r.den() <= 1'000'000);
  }
}
