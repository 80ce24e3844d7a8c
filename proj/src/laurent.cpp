#include "severi/laurent.hpp"

#include "severi/errors.hpp"

#include <algorithm>
#include <sstream>

namespace severi {

namespace {

template <class Map>
void drop_zeros(Map& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

template <class Map>
Map add_maps(const Map& p, const Map& q, bool negate_q) {
  Map out = p;
  for (const auto& [k, c] : q) {
    if (negate_q)
      out[k] -= c;
    else
      out[k] += c;
  }
  drop_zeros(out);
  return out;
}

// Writes one signed term into the stream, handling the " + " / " - " joiner.
void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& body) {
  const bool negative = c < 0;
  const BigInt mag = negative ? BigInt(-c) : c;
  if (first)
    os << (negative ? "-" : "");
  else
    os << (negative ? " - " : " + ");
  if (body.empty()) {
    os << mag;
  } else {
    if (mag != 1)
      os << mag << '*';
    os << body;
  }
}

} // namespace

// ---------------------------------------------------------------- one variable

LaurentPoly1::LaurentPoly1(Map terms) : terms_(std::move(terms)) { drop_zeros(terms_); }

LaurentPoly1::LaurentPoly1(std::initializer_list<std::pair<const int, BigInt>> terms)
    : LaurentPoly1(Map(terms)) {}

LaurentPoly1 LaurentPoly1::monomial(int exponent, BigInt coeff) {
  Map m;
  m.emplace(exponent, std::move(coeff));
  return LaurentPoly1(std::move(m));
}

BigInt LaurentPoly1::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<int> LaurentPoly1::min_exponent() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly1::max_exponent() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.rbegin()->first;
}

LaurentPoly1 LaurentPoly1::operator-() const {
  Map m = terms_;
  for (auto& [e, c] : m)
    c = -c;
  return LaurentPoly1(std::move(m));
}

LaurentPoly1 operator+(const LaurentPoly1& p, const LaurentPoly1& q) {
  return LaurentPoly1(add_maps(p.terms_, q.terms_, false));
}

LaurentPoly1 operator-(const LaurentPoly1& p, const LaurentPoly1& q) {
  return LaurentPoly1(add_maps(p.terms_, q.terms_, true));
}

LaurentPoly1 operator*(const LaurentPoly1& p, const LaurentPoly1& q) {
  LaurentPoly1::Map out;
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : q.terms_)
      out[e1 + e2] += c1 * c2;
  return LaurentPoly1(std::move(out));
}

LaurentPoly1 LaurentPoly1::pow(unsigned k) const {
  LaurentPoly1 result = constant(1);
  LaurentPoly1 base = *this;
  while (k != 0) {
    if (k & 1u)
      result = result * base;
    k >>= 1;
    if (k != 0)
      base = base * base;
  }
  return result;
}

LaurentPoly1 LaurentPoly1::shifted(int k) const {
  Map m;
  for (const auto& [e, c] : terms_)
    m.emplace(e + k, c);
  return LaurentPoly1(std::move(m));
}

std::string LaurentPoly1::to_string(std::string_view var) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string body;
    if (e != 0) {
      body = std::string(var);
      if (e != 1)
        body += "^" + std::to_string(e);
    }
    append_term(os, first, c, body);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- two variables

LaurentPoly2::LaurentPoly2(Map terms) : terms_(std::move(terms)) { drop_zeros(terms_); }

LaurentPoly2::LaurentPoly2(std::initializer_list<std::pair<const Key, BigInt>> terms)
    : LaurentPoly2(Map(terms)) {}

LaurentPoly2 LaurentPoly2::monomial(int a_exp, int z_exp, BigInt coeff) {
  Map m;
  m.emplace(Key{a_exp, z_exp}, std::move(coeff));
  return LaurentPoly2(std::move(m));
}

LaurentPoly2 LaurentPoly2::unknot() {
  return LaurentPoly2{{{-1, -1}, 1}, {{1, -1}, -1}};
}

BigInt LaurentPoly2::coeff(int a_exp, int z_exp) const {
  auto it = terms_.find(Key{a_exp, z_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  Map m = terms_;
  for (auto& [k, c] : m)
    c = -c;
  return LaurentPoly2(std::move(m));
}

LaurentPoly2 operator+(const LaurentPoly2& p, const LaurentPoly2& q) {
  return LaurentPoly2(add_maps(p.terms_, q.terms_, false));
}

LaurentPoly2 operator-(const LaurentPoly2& p, const LaurentPoly2& q) {
  return LaurentPoly2(add_maps(p.terms_, q.terms_, true));
}

LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q) {
  LaurentPoly2::Map out;
  for (const auto& [k1, c1] : p.terms_)
    for (const auto& [k2, c2] : q.terms_)
      out[{k1.first + k2.first, k1.second + k2.second}] += c1 * c2;
  return LaurentPoly2(std::move(out));
}

LaurentPoly2 LaurentPoly2::pow(unsigned k) const {
  LaurentPoly2 result = monomial(0, 0);
  LaurentPoly2 base = *this;
  while (k != 0) {
    if (k & 1u)
      result = result * base;
    k >>= 1;
    if (k != 0)
      base = base * base;
  }
  return result;
}

LaurentPoly2 LaurentPoly2::shifted(int a_shift, int z_shift) const {
  Map m;
  for (const auto& [k, c] : terms_)
    m.emplace(Key{k.first + a_shift, k.second + z_shift}, c);
  return LaurentPoly2(std::move(m));
}

std::optional<LaurentPoly2> LaurentPoly2::divide_by_unknot() const {
  // p / ((a^-1 - a)/z) = (p * a * z) / (1 - a^2). Divide column by column
  // (fixed z-exponent) as a polynomial in a.
  if (terms_.empty())
    return LaurentPoly2{};
  const LaurentPoly2 shiftedp = shifted(1, 1);
  std::map<int, std::map<int, BigInt>> columns;  // z -> (a -> c)
  for (const auto& [k, c] : shiftedp.terms_)
    columns[k.second][k.first] = c;

  Map quotient;
  for (const auto& [z, col] : columns) {
    const int lo = col.begin()->first;
    const int hi = col.rbegin()->first;
    if (hi - lo < 2)
      return std::nullopt;
    // (1 - a^2) * d = c  =>  d_k = c_k + d_{k-2}, for k = lo .. hi-2.
    std::map<int, BigInt> d;
    auto get = [](const std::map<int, BigInt>& m, int k) {
      auto it = m.find(k);
      return it == m.end() ? BigInt(0) : it->second;
    };
    for (int k = lo; k <= hi - 2; ++k)
      d[k] = get(col, k) + get(d, k - 2);
    // Remainder must vanish: c_k = d_k - d_{k-2} for k = hi-1, hi.
    for (int k = hi - 1; k <= hi; ++k)
      if (get(col, k) != -get(d, k - 2))
        return std::nullopt;
    for (auto& [a, c] : d)
      if (c != 0)
        quotient.emplace(Key{a, z}, std::move(c));
  }
  return LaurentPoly2(std::move(quotient));
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    append_term(os, first, c,
                "a^" + std::to_string(k.first) + "*z^" + std::to_string(k.second));
    first = false;
  }
  return os.str();
}

LowestAPart lowest_a_part(const LaurentPoly2& p) {
  if (p.is_zero())
    throw InvalidArgument("lowest_a_part: zero polynomial");
  const int lowest = p.terms().begin()->first.first;
  LaurentPoly1::Map part;
  for (const auto& [k, c] : p.terms()) {
    if (k.first != lowest)
      break;
    part.emplace(k.second, c);
  }
  return {lowest, LaurentPoly1(std::move(part))};
}

// ---------------------------------------------------------------- series

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw InvalidArgument("TruncatedSeries needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<BigInt> coeffs)
    : TruncatedSeries(std::vector<BigInt>(coeffs)) {}

TruncatedSeries TruncatedSeries::zero(unsigned order) {
  return TruncatedSeries(std::vector<BigInt>(order + 1));
}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly1& p, unsigned order) {
  if (auto lo = p.min_exponent(); lo && *lo < 0)
    throw InvalidArgument("from_poly: negative exponent " + std::to_string(*lo));
  std::vector<BigInt> c(order + 1);
  for (const auto& [e, v] : p.terms())
    if (static_cast<unsigned>(e) <= order)
      c[e] = v;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
  if (order > this->order())
    throw InsufficientOrder("cannot extend a series of order " + std::to_string(this->order()) +
                            " to order " + std::to_string(order));
  return TruncatedSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

LaurentPoly1 TruncatedSeries::to_poly() const {
  LaurentPoly1::Map m;
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    if (coeffs_[d] != 0)
      m.emplace(static_cast<int>(d), coeffs_[d]);
  return LaurentPoly1(std::move(m));
}

TruncatedSeries TruncatedSeries::operator-() const {
  std::vector<BigInt> c = coeffs_;
  for (auto& v : c)
    v = -v;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& p, const TruncatedSeries& q) {
  const unsigned n = std::min(p.order(), q.order());
  std::vector<BigInt> c(n + 1);
  for (unsigned d = 0; d <= n; ++d)
    c[d] = p.coeffs_[d] + q.coeffs_[d];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& p, const TruncatedSeries& q) { return p + (-q); }

TruncatedSeries operator*(const TruncatedSeries& p, const TruncatedSeries& q) {
  const unsigned n = std::min(p.order(), q.order());
  std::vector<BigInt> c(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    if (p.coeffs_[i] == 0)
      continue;
    for (unsigned j = 0; i + j <= n; ++j)
      c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return TruncatedSeries(std::move(c));
}

std::string TruncatedSeries::to_string() const {
  std::string s = to_poly().to_string("q");
  return s + " + O(q^" + std::to_string(order() + 1) + ")";
}

BigInt binomial(long long n, long long k) {
  if (k < 0)
    return 0;
  if (n >= 0 && k > n)
    return 0;
  // Generalized: n (n-1) ... (n-k+1) / k!, exact at every step.
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= BigInt(n - i);
    r /= BigInt(i + 1);
  }
  return r;
}

TruncatedSeries one_minus_q_pow(int m, unsigned order) {
  std::vector<BigInt> c(order + 1);
  for (unsigned k = 0; k <= order; ++k) {
    BigInt b = binomial(m, k);
    c[k] = (k % 2 == 0) ? b : BigInt(-b);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries expand_rational(const LaurentPoly1& numerator,
                                std::span<const LaurentPoly1> denominators,
                                unsigned order) {
  TruncatedSeries result = TruncatedSeries::from_poly(numerator, order);
  for (const auto& factor : denominators) {
    if (auto lo = factor.min_exponent(); lo && *lo < 0)
      throw DomainError("expand_rational: denominator factor " + factor.to_string("q") +
                        " has negative exponents");
    const BigInt c0 = factor.coeff(0);
    if (c0 == 0)
      throw DomainError("expand_rational: denominator factor " + factor.to_string("q") +
                        " has zero constant term");
    const TruncatedSeries f = TruncatedSeries::from_poly(factor, order);
    // Long division: out_d = (r_d - sum_{k>=1} f_k out_{d-k}) / f_0.
    std::vector<BigInt> out(order + 1);
    for (unsigned d = 0; d <= order; ++d) {
      BigInt acc = result[d];
      for (unsigned k = 1; k <= d; ++k)
        if (f[k] != 0)
          acc -= f[k] * out[d - k];
      if (acc % c0 != 0)
        throw DomainError("expand_rational: expansion is not integral");
      out[d] = acc / c0;
    }
    result = TruncatedSeries(std::move(out));
  }
  return result;
}

} // namespace severi
