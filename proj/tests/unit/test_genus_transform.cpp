#include "severi/errors.hpp"
#include "severi/genus_transform.hpp"

#include "../support.hpp"

#include <doctest.h>

#include <random>

using namespace severi;
using test_support::local_nh;
using test_support::to_i64;
using test_support::to_series;

namespace {

NhVector global_nh(int low, std::vector<oracle::i64> v) {
  return NhVector(NhKind::Global, low, std::vector<BigInt>(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("smooth curve of genus g has n_g = 1 and nothing else") {
  for (int g = 0; g <= 6; ++g) {
    const auto hilb = to_series(oracle::one_minus_q(2 * g - 2, 2 * g + 2));
    const NhVector v = nh_from_series_global({g, g, hilb});
    CHECK(v.at(g) == 1);
    for (int h = -3; h < g; ++h)
      CHECK(v.at(h) == 0);
    CHECK(vanishes_below(v, g));
  }
}

TEST_CASE("global transform inverts the independent forward map") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int g = trial % 9;
    std::vector<oracle::i64> n(g + 1);
    for (auto& x : n)
      x = coeff(rng);
    n[g] = 1;
    const auto hilb = oracle::global_series(g, 0, n, g + 3);
    const NhVector v = nh_from_series_global({g, 0, to_series(hilb)});
    CHECK(v == global_nh(0, n));
  }
}

TEST_CASE("global round trip on random series") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const int g = trial % 9;
    const unsigned order = g + trial % 4;
    std::vector<BigInt> c(order + 1);
    for (auto& x : c)
      x = coeff(rng);
    const TruncatedSeries f(c);
    const NhVector v = nh_from_series_global({g, 0, f});
    CHECK(series_from_nh(v, order) == f);
    CHECK(v.high() == g);
  }
}

TEST_CASE("triangularity: n_g = f_0 and n_{g-1} = f_1 + (2g-2) f_0") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int g = 1; g <= 8; ++g) {
    std::vector<BigInt> c(g + 1);
    for (auto& x : c)
      x = coeff(rng);
    const NhVector v = nh_from_series_global({g, 0, TruncatedSeries(c)});
    CHECK(v.at(g) == c[0]);
    CHECK(v.at(g - 1) == c[1] + (2 * g - 2) * c[0]);
  }
}

TEST_CASE("global transform needs order at least g") {
  CHECK_THROWS_AS(nh_from_series_global({3, 0, TruncatedSeries{1, 0}}), InsufficientOrder);
  CHECK_THROWS_AS(nh_from_series_global({-1, 0, TruncatedSeries{1}}), InvalidArgument);
}

TEST_CASE("local transform inverts the independent forward map") {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> coeff(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int delta = trial % 7;
    const int b = 1 + trial % 3;
    std::vector<oracle::i64> n(delta + 1);
    for (auto& x : n)
      x = coeff(rng);
    n[delta] = 1;
    const auto hilb = oracle::local_series(delta, b, n, delta + 2);
    const NhVector v = nh_from_series_local({delta, b, to_series(hilb)});
    CHECK(v == local_nh(n));
    CHECK(to_i64(local_series_from_nh(v, b, delta + 2)) == hilb);
  }
}

TEST_CASE("node and cusp germs") {
  CHECK(nh_from_series_local({1, 2, TruncatedSeries{1, 1}}) == local_nh({1, 1}));
  CHECK(nh_from_series_local({1, 1, TruncatedSeries{1, 1}}) == local_nh({2, 1}));
  CHECK(nh_from_series_local({0, 1, TruncatedSeries{1}}) == local_nh({1}));
  CHECK_THROWS_AS(nh_from_series_local({2, 1, TruncatedSeries{1, 1}}), InsufficientOrder);
}

TEST_CASE("combining nodes on a curve of geometric genus g~ gives C(g - g~, g - h)") {
  for (int gt = 0; gt <= 3; ++gt)
    for (int k = 0; k <= 7; ++k) {
      const std::vector<NhVector> nodes(k, local_nh({1, 1}));
      const NhVector v = combine_local(gt, nodes);
      const int g = gt + k;
      CHECK(v.low() == gt);
      for (int h = 0; h <= g + 1; ++h)
        CHECK(v.at(h) == oracle::choose(g - gt, g - h));
    }
}

TEST_CASE("combined locals reproduce the transform of the product series") {
  // A curve of geometric genus g~ with the given germs has Hilbert series
  // (1-q)^{2g~-2} prod_i (1-q)^{b_i} Z_i(q).
  struct Germ {
    int delta, b;
    std::vector<oracle::i64> n;
  };
  const std::vector<std::vector<Germ>> curves{
      {{1, 2, {1, 1}}, {1, 1, {2, 1}}},
      {{3, 1, {5, 10, 6, 1}}, {1, 2, {1, 1}}},
      {{2, 2, {1, 3, 1}}, {2, 1, {3, 4, 1}}, {1, 1, {2, 1}}},
  };
  for (int gt = 0; gt <= 2; ++gt)
    for (const auto& curve : curves) {
      int g = gt;
      for (const auto& c : curve)
        g += c.delta;
      const std::size_t order = g + 2;
      oracle::Poly f = oracle::one_minus_q(2 * gt - 2, order);
      std::vector<NhVector> locals;
      for (const auto& c : curve) {
        f = oracle::mul(f, oracle::one_minus_q(c.b, order), order);
        f = oracle::mul(f, oracle::local_series(c.delta, c.b, c.n, order), order);
        locals.push_back(local_nh(c.n));
      }
      CHECK(nh_from_series_global({g, gt, to_series(f)}) == combine_local(gt, locals));
    }
}

TEST_CASE("combine is commutative") {
  const std::vector<NhVector> ab{local_nh({5, 10, 6, 1}), local_nh({2, 1})};
  const std::vector<NhVector> ba{local_nh({2, 1}), local_nh({5, 10, 6, 1})};
  CHECK(combine_local(1, ab) == combine_local(1, ba));
}

TEST_CASE("low vanishing criterion on curves built from germs") {
  // Cuspidal cubic: rational, one cusp.
  const auto f = oracle::mul(oracle::one_minus_q(-1, 8), oracle::local_series(1, 1, {2, 1}, 8), 8);
  const auto r = check_low_vanishing(to_series(f), 1);
  CHECK(r.ok);
  CHECK(r.c == 2);

  // Genus-3 curve with geometric genus 0 and an E6 point: c = n_0 = 5.
  const auto e6 = oracle::mul(oracle::one_minus_q(-1, 10), oracle::local_series(3, 1, {5, 10, 6, 1}, 10), 10);
  const auto r6 = check_low_vanishing(to_series(e6), 3);
  CHECK(r6.ok);
  CHECK(r6.c == 5);

  // Positive geometric genus: n_0 = 0 and the criterion holds with c = 0.
  const auto smooth = oracle::one_minus_q(2, 6);
  const auto rs = check_low_vanishing(to_series(smooth), 2);
  CHECK(rs.ok);
  CHECK(rs.c == 0);
}

TEST_CASE("low vanishing criterion rejects a series with negative-h terms") {
  // n_{-1} = 1 breaks the functional equation.
  const auto f = oracle::global_series(2, -1, {1, 0, 0, 1}, 8);
  CHECK_FALSE(check_low_vanishing(to_series(f), 2).ok);
}

TEST_CASE("identity checks use the topological Euler number") {
  const auto nodal = oracle::mul(oracle::one_minus_q(0, 6), oracle::local_series(1, 2, {1, 1}, 6), 6);
  CHECK(identity_checks({1, 0, to_series(nodal)}, 1).all_passed());
  CHECK_FALSE(identity_checks({1, 0, to_series(nodal)}, 2).all_passed());
}

TEST_CASE("NhVector equality compares values as functions of h") {
  CHECK(global_nh(0, {0, 0, 1}) == global_nh(2, {1}));
  CHECK_FALSE(global_nh(0, {1}) == local_nh({1}));
  CHECK(global_nh(-2, {3}).at(5) == 0);
}

TEST_CASE("small transform examples") {
  // Rational smooth curve: f = (1-q)^{-2}.
  CHECK(nh_from_series_global({0, 0, to_series(oracle::one_minus_q(-2, 4))}) == global_nh(0, {1}));
  // Nodal cubic series from (n_0, n_1) = (1, 1).
  CHECK(to_i64(series_from_nh(global_nh(0, {1, 1}), 4)) == oracle::Poly{1, 1, 2, 3, 4});
  // A single term at h = g gives (1-q)^{2g-2}.
  CHECK(to_i64(series_from_nh(global_nh(3, {1}), 6)) == oracle::one_minus_q(4, 6));
  CHECK(nh_from_series_local({0, 1, TruncatedSeries{1}}) == local_nh({1}));
  const std::vector<NhVector> none;
  CHECK(combine_local(3, none) == global_nh(3, {1}));
  const auto nodal = oracle::local_series(1, 2, {1, 1}, 6);
  const auto r = check_low_vanishing(to_series(nodal), 1);
  CHECK(r.ok);
  CHECK(r.c == 1);
  CHECK(check_low_vanishing(TruncatedSeries{1, 0, 0}, 1).ok);
  for (int g = 1; g <= 5; ++g)
    CHECK(identity_checks({g, g, to_series(oracle::one_minus_q(2 * g - 2, g + 1))}, 2 - 2 * g)
              .all_passed());
}
