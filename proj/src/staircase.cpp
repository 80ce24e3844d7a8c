#include "severi/staircase.hpp"

#include "severi/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

namespace severi {

unsigned Staircase::size() const {
  return std::accumulate(row_lengths.begin(), row_lengths.end(), 0u);
}

BoxConstraint model_constraint(InfinityModel m) {
  switch (m) {
  case InfinityModel::A:
    return {{{0, 2}}};
  case InfinityModel::D:
    return {{{1, 2}}};
  case InfinityModel::E:
    return {{{0, 3}}};
  }
  throw InvalidArgument("unknown model");
}

InfinityModel model_for(AdeFamily f) {
  switch (f) {
  case AdeFamily::A:
    return InfinityModel::A;
  case AdeFamily::D:
    return InfinityModel::D;
  case AdeFamily::E:
    return InfinityModel::E;
  }
  throw InvalidArgument("unknown family");
}

const char* model_name(InfinityModel m) {
  switch (m) {
  case InfinityModel::A:
    return "A_inf";
  case InfinityModel::D:
    return "D_inf";
  case InfinityModel::E:
    return "E_inf";
  }
  return "?";
}

namespace {

class StaircaseWalker {
public:
  StaircaseWalker(const BoxConstraint& c) {
    for (auto [a, b] : c.forbidden) {
      if (b >= caps_.size())
        caps_.resize(b + 1, std::numeric_limits<unsigned>::max());
      caps_[b] = std::min(caps_[b], a);
    }
  }

  // Calls visit(rows) for every staircase with the given number of boxes.
  template <class Visit>
  void walk(unsigned remaining, unsigned prev, std::vector<unsigned>& rows, Visit&& visit) const {
    if (remaining == 0) {
      visit(rows);
      return;
    }
    unsigned cap = std::min(prev, remaining);
    if (rows.size() < caps_.size())
      cap = std::min(cap, caps_[rows.size()]);
    for (unsigned len = cap; len >= 1; --len) {
      rows.push_back(len);
      walk(remaining - len, len, rows, visit);
      rows.pop_back();
    }
  }

private:
  // caps_[b] = largest allowed length of row b from the constraint alone;
  // weakly decreasing rows carry the cap to later rows automatically.
  std::vector<unsigned> caps_;
};

} // namespace

std::uint64_t count_staircases(unsigned colength, const BoxConstraint& c) {
  StaircaseWalker walker(c);
  std::uint64_t count = 0;
  std::vector<unsigned> rows;
  walker.walk(colength, colength, rows, [&](const std::vector<unsigned>&) { ++count; });
  return count;
}

std::vector<Staircase> enumerate_staircases(unsigned colength, const BoxConstraint& c) {
  StaircaseWalker walker(c);
  std::vector<Staircase> out;
  std::vector<unsigned> rows;
  walker.walk(colength, colength, rows,
              [&](const std::vector<unsigned>& r) { out.push_back(Staircase{r}); });
  return out;
}

TruncatedSeries enumerated_series(InfinityModel m, unsigned order) {
  const BoxConstraint c = model_constraint(m);
  std::vector<BigInt> coeffs(order + 1);
  for (unsigned n = 0; n <= order; ++n)
    coeffs[n] = count_staircases(n, c);
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries model_series(InfinityModel m, unsigned order) {
  const LaurentPoly1 one_minus_q{{0, 1}, {1, -1}};
  const LaurentPoly1 one_minus_q2{{0, 1}, {2, -1}};
  const LaurentPoly1 one_minus_q3{{0, 1}, {3, -1}};
  switch (m) {
  case InfinityModel::A: {
    const std::array factors{one_minus_q, one_minus_q2};
    return expand_rational(LaurentPoly1::constant(1), factors, order);
  }
  case InfinityModel::D: {
    const std::array factors{one_minus_q, one_minus_q, one_minus_q2};
    return expand_rational(LaurentPoly1{{0, 1}, {1, -1}, {3, 1}}, factors, order);
  }
  case InfinityModel::E: {
    const std::array factors{one_minus_q, one_minus_q2, one_minus_q3};
    return expand_rational(LaurentPoly1::constant(1), factors, order);
  }
  }
  throw InvalidArgument("unknown model");
}

NhVector ade_nh(const AdeType& t) {
  const auto delta = static_cast<unsigned>(t.delta());
  LocalGermData germ;
  germ.delta = t.delta();
  germ.branches = t.branches();
  // chi(c^[n]) for n = 0..delta only; n = 0 is always 1.
  germ.hilb = model_series(model_for(t.family()), delta);
  return nh_from_series_local(germ);
}

BigInt ade_closed_formula(const AdeType& t, int h) {
  const long long d = t.delta();
  if (h < 0 || h > d)
    throw InvalidArgument("h = " + std::to_string(h) + " outside 0.." + std::to_string(d) +
                          " for " + t.name());
  switch (t.family()) {
  case AdeFamily::A:
    if (t.index() % 2 == 1)  // A_{2 delta - 1}
      return binomial(d + h, d - h);
    return binomial(d + h + 1, d - h);  // A_{2 delta}
  case AdeFamily::D:
    if (t.index() % 2 == 0)  // D_{2 delta - 2}
      return binomial(d + h - 3, d - h) + 2 * binomial(d + h - 3, d - h - 1) +
             binomial(d + h - 2, d - h - 2);
    return binomial(d + h - 2, d - h) + 2 * binomial(d + h - 2, d - h - 1) +  // D_{2 delta - 1}
           binomial(d + h - 1, d - h - 2);
  case AdeFamily::E: {
    static constexpr std::array<int, 4> e6{5, 10, 6, 1};
    static constexpr std::array<int, 5> e7{2, 11, 15, 7, 1};
    static constexpr std::array<int, 5> e8{7, 21, 21, 8, 1};
    if (t.index() == 6)
      return e6[static_cast<std::size_t>(h)];
    if (t.index() == 7)
      return e7[static_cast<std::size_t>(h)];
    return e8[static_cast<std::size_t>(h)];
  }
  }
  throw InvalidArgument("unknown family");
}

NhVector ade_closed_nh(const AdeType& t) {
  std::vector<BigInt> v;
  for (int h = 0; h <= t.delta(); ++h)
    v.push_back(ade_closed_formula(t, h));
  return NhVector(NhKind::Local, 0, std::move(v));
}

TruncatedSeries ade_local_series(const AdeType& t, unsigned order) {
  return local_series_from_nh(ade_nh(t), t.branches(), order);
}

} // namespace severi
