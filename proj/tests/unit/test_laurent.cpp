#include "severi/errors.hpp"
#include "severi/laurent.hpp"

#include "../support.hpp"

#include <doctest.h>

#include <random>

using namespace severi;

namespace {

LaurentPoly1 random_poly1(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), exp(-4, 4), len(0, 4);
  LaurentPoly1::Map m;
  for (int i = len(rng); i > 0; --i)
    m[exp(rng)] += coeff(rng);
  return LaurentPoly1(m);
}

LaurentPoly2 random_poly2(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), exp(-3, 3), len(0, 4);
  LaurentPoly2::Map m;
  for (int i = len(rng); i > 0; --i)
    m[{exp(rng), exp(rng)}] += coeff(rng);
  return LaurentPoly2(m);
}

TruncatedSeries random_series(std::mt19937_64& rng, unsigned order) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<BigInt> c(order + 1);
  for (auto& x : c)
    x = coeff(rng);
  return TruncatedSeries(c);
}

}  // namespace

TEST_CASE("printable form sorts exponents ascending") {
  CHECK(LaurentPoly1{{1, 1}, {-1, 2}}.to_string() == "2*z^-1 + z");
  CHECK(LaurentPoly1{}.to_string() == "0");
  CHECK(LaurentPoly1{{0, -3}, {2, 1}}.to_string() == "-3 + z^2");
  CHECK(LaurentPoly2::monomial(2, 0).to_string() == "a^2*z^0");
  CHECK(LaurentPoly2{{{4, 0}, -1}, {{2, 0}, 2}}.to_string() == "2*a^2*z^0 - a^4*z^0");
}

TEST_CASE("zero coefficients are dropped") {
  const LaurentPoly1 p{{1, 1}};
  CHECK((p - p).is_zero());
  CHECK((p - p) == LaurentPoly1{});
  CHECK(LaurentPoly1{{3, 0}}.terms().empty());
}

TEST_CASE("ring axioms hold on random Laurent polynomials in one variable") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly1(rng), b = random_poly1(rng), c = random_poly1(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly1{});
    CHECK(a * LaurentPoly1::constant(1) == a);
    CHECK(a.shifted(3) == a * LaurentPoly1::monomial(3));
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("ring axioms hold on random Laurent polynomials in two variables") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly2(rng), b = random_poly2(rng), c = random_poly2(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.shifted(1, -2) == a * LaurentPoly2::monomial(1, -2));
  }
}

TEST_CASE("exact division by the unknot polynomial") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly2(rng);
    const auto prod = a * LaurentPoly2::unknot();
    const auto back = prod.divide_by_unknot();
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  CHECK_FALSE(LaurentPoly2::monomial(0, 0).divide_by_unknot().has_value());
}

TEST_CASE("lowest a-degree part") {
  const LaurentPoly2 p{{{1, -1}, 2}, {{1, 1}, 1}, {{3, -1}, -3}};
  const auto low = lowest_a_part(p);
  CHECK(low.a_exponent == 1);
  CHECK(low.part == LaurentPoly1{{-1, 2}, {1, 1}});
  CHECK_THROWS_AS(lowest_a_part(LaurentPoly2{}), InvalidArgument);
}

TEST_CASE("truncated series arithmetic truncates to the smaller order") {
  const TruncatedSeries a{1, 2, 3, 4};
  const TruncatedSeries b{1, 1};
  CHECK((a + b).order() == 1);
  CHECK((a * b).order() == 1);
  CHECK(a * b == TruncatedSeries{1, 3});
  CHECK(a.truncated(2) == TruncatedSeries{1, 2, 3});
  CHECK_THROWS_AS(a.truncated(5), InsufficientOrder);
  CHECK_THROWS_AS(TruncatedSeries(std::vector<BigInt>{}), InvalidArgument);
}

TEST_CASE("series multiplication agrees with polynomial multiplication, truncated") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_series(rng, 6), b = random_series(rng, 6);
    const auto full = a.to_poly() * b.to_poly();
    CHECK(a * b == TruncatedSeries::from_poly(full, 6));
    CHECK(test_support::to_i64(a * b) ==
          oracle::mul(test_support::to_i64(a), test_support::to_i64(b), 6));
  }
}

TEST_CASE("(1-q)^m matches repeated long division") {
  for (int m = -6; m <= 6; ++m)
    CHECK(test_support::to_i64(one_minus_q_pow(m, 12)) == oracle::one_minus_q(m, 12));
}

TEST_CASE("rational expansion matches independent long division") {
  const std::vector<LaurentPoly1> den{LaurentPoly1{{0, 1}, {1, -1}}, LaurentPoly1{{0, 1}, {2, -1}},
                                      LaurentPoly1{{0, 1}, {3, -1}}};
  CHECK(test_support::to_i64(expand_rational(LaurentPoly1::constant(1), den, 30)) ==
        oracle::e_inf(30));

  const std::vector<LaurentPoly1> dden{LaurentPoly1{{0, 1}, {1, -1}}, LaurentPoly1{{0, 1}, {1, -1}},
                                       LaurentPoly1{{0, 1}, {2, -1}}};
  const auto d = expand_rational(LaurentPoly1{{0, 1}, {1, -1}, {3, 1}}, dden, 30);
  CHECK(test_support::to_i64(d) == oracle::d_inf(30));
  CHECK(test_support::to_i64(d.truncated(6)) == oracle::Poly{1, 1, 2, 3, 5, 7, 10});
}

TEST_CASE("rational expansion rejects a denominator without constant term") {
  const std::vector<LaurentPoly1> den{LaurentPoly1{{1, 1}}};
  CHECK_THROWS_AS(expand_rational(LaurentPoly1::constant(1), den, 4), DomainError);
}

TEST_CASE("binomial coefficients") {
  for (int n = 0; n <= 20; ++n)
    for (int k = -1; k <= n + 1; ++k)
      CHECK(binomial(n, k) == oracle::choose(n, k));
}

TEST_CASE("big integers do not overflow") {
  const LaurentPoly1 two = LaurentPoly1::constant(2);
  CHECK(two.pow(100).coeff(0) == BigInt(1) << 100);
}
