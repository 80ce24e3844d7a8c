#pragma once

// Exact integer Laurent polynomials in one variable (q or z) and two
// variables (a, z), plus truncated power series in q.
//
// Every value is stored canonically: a sorted sparse map with no zero
// coefficients. Values are immutable once built.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace severi {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly1 {
public:
  using Map = std::map<int, BigInt>;

  LaurentPoly1() = default;
  explicit LaurentPoly1(Map terms);
  LaurentPoly1(std::initializer_list<std::pair<const int, BigInt>> terms);

  static LaurentPoly1 monomial(int exponent, BigInt coeff = 1);
  static LaurentPoly1 constant(BigInt c) { return monomial(0, std::move(c)); }

  const Map& terms() const noexcept { return terms_; }
  BigInt coeff(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  LaurentPoly1 operator-() const;
  friend LaurentPoly1 operator+(const LaurentPoly1& p, const LaurentPoly1& q);
  friend LaurentPoly1 operator-(const LaurentPoly1& p, const LaurentPoly1& q);
  friend LaurentPoly1 operator*(const LaurentPoly1& p, const LaurentPoly1& q);
  friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

  LaurentPoly1 pow(unsigned k) const;
  // Multiply by var^k.
  LaurentPoly1 shifted(int k) const;

  // `2*z^-1 + z`, ascending exponents; "0" for the zero polynomial.
  std::string to_string(std::string_view var = "z") const;

private:
  Map terms_;
};

class LaurentPoly2 {
public:
  // key = (a-exponent, z-exponent)
  using Key = std::pair<int, int>;
  using Map = std::map<Key, BigInt>;

  LaurentPoly2() = default;
  explicit LaurentPoly2(Map terms);
  LaurentPoly2(std::initializer_list<std::pair<const Key, BigInt>> terms);

  static LaurentPoly2 monomial(int a_exp, int z_exp, BigInt coeff = 1);
  // P(unknot) = (a^-1 - a) / z
  static LaurentPoly2 unknot();

  const Map& terms() const noexcept { return terms_; }
  BigInt coeff(int a_exp, int z_exp) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPoly2 operator-() const;
  friend LaurentPoly2 operator+(const LaurentPoly2& p, const LaurentPoly2& q);
  friend LaurentPoly2 operator-(const LaurentPoly2& p, const LaurentPoly2& q);
  friend LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  LaurentPoly2 pow(unsigned k) const;
  LaurentPoly2 shifted(int a_shift, int z_shift) const;

  // Exact quotient by (a^-1 - a)/z, or nullopt when it does not divide.
  std::optional<LaurentPoly2> divide_by_unknot() const;

  // `a^2*z^0 - a^4*z^0`, ascending (a, z); "0" for zero.
  std::string to_string() const;

private:
  Map terms_;
};

struct LowestAPart {
  int a_exponent;
  LaurentPoly1 part;  // in z
  friend bool operator==(const LowestAPart&, const LowestAPart&) = default;
};

// Coefficient of the lowest power of a. Throws InvalidArgument on zero.
LowestAPart lowest_a_part(const LaurentPoly2& p);

// Power series c_0 + c_1 q + ... + c_N q^N, known modulo q^{N+1}.
class TruncatedSeries {
public:
  // order = coeffs.size() - 1; coeffs must be nonempty.
  explicit TruncatedSeries(std::vector<BigInt> coeffs);
  TruncatedSeries(std::initializer_list<BigInt> coeffs);

  static TruncatedSeries zero(unsigned order);
  // Requires nonnegative exponents.
  static TruncatedSeries from_poly(const LaurentPoly1& p, unsigned order);

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const BigInt& operator[](std::size_t d) const { return coeffs_.at(d); }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  TruncatedSeries truncated(unsigned order) const;
  LaurentPoly1 to_poly() const;

  // Binary arithmetic truncates to the smaller order.
  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& p, const TruncatedSeries& q);
  friend TruncatedSeries operator-(const TruncatedSeries& p, const TruncatedSeries& q);
  friend TruncatedSeries operator*(const TruncatedSeries& p, const TruncatedSeries& q);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const;

private:
  std::vector<BigInt> coeffs_;
};

// (1 - q)^m for any integer m, to the given order.
TruncatedSeries one_minus_q_pow(int m, unsigned order);

// numerator / prod(denominators) expanded to q^order. Each factor needs a
// nonzero constant term; the expansion must stay integral.
TruncatedSeries expand_rational(const LaurentPoly1& numerator,
                                std::span<const LaurentPoly1> denominators,
                                unsigned order);

BigInt binomial(long long n, long long k);

} // namespace severi
