#include <catch2/catch_amalgamated.hpp>

#include "subsetbase/exact.hpp"

using namespace subsetbase;

TEST_CASE("binomial small values and the b > a convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(9, 2) == 36);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(7, 7) == 1);
}

TEST_CASE("binomial satisfies the Pascal identity") {
  for (int a = 1; a <= 40; ++a)
    for (int b = 0; b <= a; ++b)
      CHECK(binomial(a, b) == binomial(a - 1, b) + (b > 0 ? binomial(a - 1, b - 1) : 0));
}

TEST_CASE("binomial row sums are powers of two") {
  for (int a = 0; a <= 64; ++a) {
    BigInt sum = 0;
    for (int b = 0; b <= a; ++b) sum += binomial(a, b);
    CHECK(sum == BigInt(1) << a);
  }
}

TEST_CASE("rational floor and ceiling, including negatives") {
  CHECK(floor_rational(Rational(10, 3)) == 3);
  CHECK(ceil_rational(Rational(10, 3)) == 4);
  CHECK(floor_rational(Rational(-7, 2)) == -4);
  CHECK(ceil_rational(Rational(-7, 2)) == -3);
  CHECK(floor_rational(Rational(6, 3)) == 2);
  CHECK(ceil_rational(Rational(6, 3)) == 2);
}

TEST_CASE("ceil_div") {
  CHECK(ceil_div(34, 8) == 5);
  CHECK(ceil_div(6, 3) == 2);
  CHECK(ceil_div(-3, 2) == -1);
  CHECK(ceil_div(0, 5) == 0);
  CHECK_THROWS_AS(ceil_div(1, 0), std::domain_error);
}

TEST_CASE("ceil_log2 by bit length") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(8) == 3);
  CHECK(ceil_log2(9) == 4);
  CHECK(ceil_log2(18) == 5);
  CHECK(ceil_log2(1'000'000) == 20);
  CHECK_THROWS_AS(ceil_log2(0), std::domain_error);
}

TEST_CASE("isqrt") {
  CHECK(isqrt(BigInt(0)) == 0);
  CHECK(isqrt(BigInt(4836)) == 69);
  CHECK(isqrt(BigInt(4900)) == 70);
  for (std::int64_t v = 0; v <= 2000; ++v) {
    const BigInt root = isqrt(BigInt(v));
    CHECK(root * root <= v);
    CHECK((root + 1) * (root + 1) > v);
  }
}

TEST_CASE("ceil_shifted_sqrt matches a direct rational bound") {
  // ceil((sqrt(R) - c) / d) == smallest z with (d z + c)^2 >= R, d z + c >= 0.
  for (std::int64_t radicand : {0, 1, 2, 196, 197, 4836, 5508, 5892}) {
    for (std::int64_t c : {-10, -2, 0, 2, 42}) {
      for (std::int64_t d : {1, 3, 4}) {
        const BigInt z = ceil_shifted_sqrt(radicand, c, d);
        const BigInt v = d * z + c;
        CHECK(v >= 0);
        CHECK(v * v >= radicand);
        const BigInt below = d * (z - 1) + c;
        CHECK((below < 0 || below * below < radicand));
      }
    }
  }
  // Perfect-square boundary: sqrt(196) = 14 exactly.
  CHECK(ceil_shifted_sqrt(BigInt(196), BigInt(2), BigInt(4)) == 3);
  CHECK(ceil_shifted_sqrt(BigInt(197), BigInt(2), BigInt(4)) == 4);
}
