#include "severi/genus_transform.hpp"

#include "severi/errors.hpp"

#include <algorithm>

namespace severi {

NhVector::NhVector(NhKind kind, int low, std::vector<BigInt> values)
    : kind_(kind), low_(low), values_(std::move(values)) {
  if (values_.empty())
    throw InvalidArgument("NhVector needs at least one entry");
}

BigInt NhVector::at(int h) const {
  if (h < low_ || h > high())
    return 0;
  return values_[static_cast<std::size_t>(h - low_)];
}

bool operator==(const NhVector& x, const NhVector& y) {
  if (x.kind_ != y.kind_)
    return false;
  const int lo = std::min(x.low(), y.low());
  const int hi = std::max(x.high(), y.high());
  for (int h = lo; h <= hi; ++h)
    if (x.at(h) != y.at(h))
      return false;
  return true;
}

NhVector nh_from_series_global(const GlobalCurveData& d) {
  const int g = d.genus;
  if (g < 0)
    throw InvalidArgument("arithmetic genus must be nonnegative");
  const unsigned order = d.hilb.order();
  if (order < static_cast<unsigned>(g))
    throw InsufficientOrder("global transform needs order >= g = " + std::to_string(g) +
                            ", got " + std::to_string(order));

  // Term h starts at q^{g-h} with coefficient 1, so the coefficient of q^k
  // (k = g - h) determines n_h once all n_{h'}, h' > h, are known.
  const int lowest_h = g - static_cast<int>(order);
  std::vector<BigInt> n(order + 1);  // n[k] = n_{g-k}
  std::vector<TruncatedSeries> factors;  // factors[k] = (1-q)^{2(g-k)-2}
  factors.reserve(order + 1);
  for (unsigned k = 0; k <= order; ++k) {
    const int h = g - static_cast<int>(k);
    factors.push_back(one_minus_q_pow(2 * h - 2, order - k));
  }
  for (unsigned k = 0; k <= order; ++k) {
    BigInt acc = d.hilb[k];
    for (unsigned j = 0; j < k; ++j)
      if (n[j] != 0)
        acc -= n[j] * factors[j][k - j];
    n[k] = std::move(acc);
  }

  // Reverse into ascending h and drop zero entries at negative h.
  std::vector<BigInt> values(n.rbegin(), n.rend());
  int low = lowest_h;
  std::size_t skip = 0;
  while (low < 0 && skip + 1 < values.size() && values[skip] == 0) {
    ++skip;
    ++low;
  }
  values.erase(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(skip));
  return NhVector(NhKind::Global, low, std::move(values));
}

TruncatedSeries series_from_nh(const NhVector& v, unsigned order) {
  if (v.kind() != NhKind::Global)
    throw InvalidArgument("series_from_nh expects a global vector; use local_series_from_nh");
  const int g = v.high();
  TruncatedSeries sum = TruncatedSeries::zero(order);
  for (int h = v.low(); h <= g; ++h) {
    const BigInt c = v.at(h);
    if (c == 0)
      continue;
    const int shift = g - h;
    if (shift > static_cast<int>(order))
      continue;
    TruncatedSeries term = one_minus_q_pow(2 * h - 2, order);
    std::vector<BigInt> shifted(order + 1);
    for (unsigned k = 0; k + static_cast<unsigned>(shift) <= order; ++k)
      shifted[k + shift] = c * term[k];
    sum = sum + TruncatedSeries(std::move(shifted));
  }
  return sum;
}

NhVector nh_from_series_local(const LocalGermData& d) {
  if (d.delta < 0)
    throw InvalidArgument("delta must be nonnegative");
  if (d.branches < 1)
    throw InvalidArgument("a germ has at least one branch");
  const auto delta = static_cast<unsigned>(d.delta);
  if (d.hilb.order() < delta)
    throw InsufficientOrder("local transform needs order >= delta = " + std::to_string(delta) +
                            ", got " + std::to_string(d.hilb.order()));

  const TruncatedSeries lhs = one_minus_q_pow(d.branches, delta) * d.hilb.truncated(delta);
  // n[k] = n_{delta-k}; term h begins at q^{delta-h} with (1-q)^{2h}.
  std::vector<BigInt> n(delta + 1);
  std::vector<TruncatedSeries> factors;
  factors.reserve(delta + 1);
  for (unsigned k = 0; k <= delta; ++k)
    factors.push_back(one_minus_q_pow(2 * (d.delta - static_cast<int>(k)), delta - k));
  for (unsigned k = 0; k <= delta; ++k) {
    BigInt acc = lhs[k];
    for (unsigned j = 0; j < k; ++j)
      if (n[j] != 0)
        acc -= n[j] * factors[j][k - j];
    n[k] = std::move(acc);
  }
  return NhVector(NhKind::Local, 0, std::vector<BigInt>(n.rbegin(), n.rend()));
}

TruncatedSeries local_series_from_nh(const NhVector& v, int branches, unsigned order) {
  if (v.kind() != NhKind::Local)
    throw InvalidArgument("local_series_from_nh expects a local vector");
  const int delta = v.high();
  TruncatedSeries sum = TruncatedSeries::zero(order);
  for (int h = v.low(); h <= delta; ++h) {
    const BigInt c = v.at(h);
    if (c == 0)
      continue;
    const int shift = delta - h;
    if (shift > static_cast<int>(order))
      continue;
    TruncatedSeries term = one_minus_q_pow(2 * h - branches, order);
    std::vector<BigInt> shifted(order + 1);
    for (unsigned k = 0; k + static_cast<unsigned>(shift) <= order; ++k)
      shifted[k + shift] = c * term[k];
    sum = sum + TruncatedSeries(std::move(shifted));
  }
  return sum;
}

NhVector combine_local(int geometric_genus, std::span<const NhVector> locals) {
  // Convolution of the local vectors, as polynomials in h.
  int low = 0;
  std::vector<BigInt> acc{1};
  for (const auto& v : locals) {
    if (v.kind() != NhKind::Local)
      throw InvalidArgument("combine_local expects local vectors");
    std::vector<BigInt> next(acc.size() + v.values().size() - 1);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < v.values().size(); ++j)
        next[i + j] += acc[i] * v.values()[j];
    acc = std::move(next);
    low += v.low();
  }
  return NhVector(NhKind::Global, low + geometric_genus, std::move(acc));
}

bool vanishes_below(const NhVector& v, int h) {
  for (int k = v.low(); k < h && k <= v.high(); ++k)
    if (v.at(k) != 0)
      return false;
  return true;
}

LowVanishing check_low_vanishing(const TruncatedSeries& f, int genus) {
  const int order = static_cast<int>(f.order());
  if (order < 2 * genus - 2)
    return {};
  auto coeff = [&](int d) { return d < 0 ? BigInt(0) : f[static_cast<std::size_t>(d)]; };

  std::optional<BigInt> c;
  for (int d = 0; d <= order; ++d) {
    const int weight = d + 1 - genus;
    if (weight == 0)
      continue;
    const BigInt diff = coeff(d) - coeff(2 * genus - 2 - d);
    if (diff % weight != 0)
      return {};
    c = diff / weight;
    break;
  }
  if (!c)
    return {};
  for (int d = 0; d <= order; ++d) {
    if (2 * genus - 2 - d > order)
      continue;
    if (coeff(d) - coeff(2 * genus - 2 - d) != *c * (d + 1 - genus))
      return {};
  }
  return {true, *c};
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

IdentityReport identity_checks(const GlobalCurveData& d, const BigInt& topological_euler) {
  const NhVector n = nh_from_series_global(d);
  const int g = d.genus;
  IdentityReport report;
  const BigInt top = n.at(g);
  report.checks.push_back({"n_g = 1", top == 1, 1, top});
  if (d.hilb.order() >= static_cast<unsigned>(g) + 1) {
    const BigInt expected = topological_euler + 2 * g - 2;
    const BigInt next = n.at(g - 1);
    report.checks.push_back({"n_{g-1} = chi + 2g - 2", next == expected, expected, next});
  } else {
    report.checks.push_back({"n_{g-1} = chi + 2g - 2 (series too short)", false,
                             topological_euler + 2 * g - 2, 0});
  }
  return report;
}

} // namespace severi
