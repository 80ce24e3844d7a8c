#include "severi/ade.hpp"
#include "severi/errors.hpp"
#include "severi/staircase.hpp"

#include "../support.hpp"

#include <doctest.h>

using namespace severi;
using test_support::local_nh;
using test_support::to_i64;

namespace {

std::vector<std::pair<int, int>> forbidden_of(InfinityModel m) {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : model_constraint(m).forbidden)
    out.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return out;
}

std::vector<AdeType> all_ade_up_to_12() {
  std::vector<AdeType> out;
  for (int n = 1; n <= 12; ++n)
    out.emplace_back(AdeFamily::A, n);
  for (int n = 4; n <= 12; ++n)
    out.emplace_back(AdeFamily::D, n);
  for (int n = 6; n <= 8; ++n)
    out.emplace_back(AdeFamily::E, n);
  return out;
}

}  // namespace

TEST_CASE("model constraints") {
  using P = std::vector<std::pair<unsigned, unsigned>>;
  CHECK(model_constraint(InfinityModel::A).forbidden == P{{0, 2}});
  CHECK(model_constraint(InfinityModel::D).forbidden == P{{1, 2}});
  CHECK(model_constraint(InfinityModel::E).forbidden == P{{0, 3}});
}

TEST_CASE("enumerated staircases are weakly decreasing, of the right size, and avoid the boxes") {
  for (auto m : {InfinityModel::A, InfinityModel::D, InfinityModel::E}) {
    const auto c = model_constraint(m);
    for (unsigned n = 0; n <= 12; ++n) {
      const auto all = enumerate_staircases(n, c);
      CHECK(all.size() == count_staircases(n, c));
      for (const auto& s : all) {
        CHECK(s.size() == n);
        for (std::size_t i = 0; i < s.row_lengths.size(); ++i) {
          CHECK(s.row_lengths[i] > 0);
          if (i > 0)
            CHECK(s.row_lengths[i] <= s.row_lengths[i - 1]);
        }
        for (auto [a, b] : c.forbidden)
          CHECK((s.row_lengths.size() <= b || s.row_lengths[b] <= a));
      }
    }
  }
}

TEST_CASE("staircase counts match brute-force partition filtering") {
  for (auto m : {InfinityModel::A, InfinityModel::D, InfinityModel::E})
    for (unsigned n = 0; n <= 22; ++n)
      CHECK(static_cast<oracle::i64>(count_staircases(n, model_constraint(m))) ==
            oracle::count_avoiding(static_cast<int>(n), forbidden_of(m)));
}

TEST_CASE("model series: enumeration equals the closed form to order 30") {
  CHECK(to_i64(model_series(InfinityModel::A, 30)) == oracle::a_inf(30));
  CHECK(to_i64(model_series(InfinityModel::D, 30)) == oracle::d_inf(30));
  CHECK(to_i64(model_series(InfinityModel::E, 30)) == oracle::e_inf(30));
  for (auto m : {InfinityModel::A, InfinityModel::D, InfinityModel::E})
    CHECK(enumerated_series(m, 30) == model_series(m, 30));
}

TEST_CASE("first terms of the model series") {
  CHECK(to_i64(model_series(InfinityModel::A, 6)) == oracle::Poly{1, 1, 2, 2, 3, 3, 4});
  CHECK(to_i64(model_series(InfinityModel::D, 6)) == oracle::Poly{1, 1, 2, 3, 5, 7, 10});
  CHECK(to_i64(model_series(InfinityModel::E, 6)) == oracle::Poly{1, 1, 2, 3, 4, 5, 7});
}

TEST_CASE("ADE delta and branch table") {
  struct Row {
    const char* label;
    int delta, b;
  };
  for (const Row& r : {Row{"A1", 1, 2}, Row{"A2", 1, 1}, Row{"A7", 4, 2}, Row{"A8", 4, 1},
                       Row{"D4", 3, 3}, Row{"D5", 3, 2}, Row{"D6", 4, 3}, Row{"E6", 3, 1},
                       Row{"E7", 4, 2}, Row{"E8", 4, 1}}) {
    const auto t = AdeType::parse(r.label);
    CHECK(t.delta() == r.delta);
    CHECK(t.branches() == r.b);
    CHECK(t.milnor() == 2 * t.delta() + 1 - t.branches());
  }
  CHECK_THROWS_AS(AdeType::parse("D3"), InvalidArgument);
  CHECK_THROWS_AS(AdeType::parse("E9"), InvalidArgument);
  CHECK_THROWS_AS(AdeType::parse("A0"), InvalidArgument);
  CHECK_THROWS_AS(AdeType::parse("X4"), InvalidArgument);
  CHECK(AdeType::parse("E_6") == AdeType::parse("e6"));
}

TEST_CASE("E tables by truncation") {
  CHECK(ade_nh(AdeType::parse("E6")) == local_nh({5, 10, 6, 1}));
  CHECK(ade_nh(AdeType::parse("E7")) == local_nh({2, 11, 15, 7, 1}));
  CHECK(ade_nh(AdeType::parse("E8")) == local_nh({7, 21, 21, 8, 1}));
}

TEST_CASE("truncation and closed formulas agree with the oracle formulas for index <= 12") {
  for (const auto& t : all_ade_up_to_12()) {
    const char fam = t.name()[0];
    const auto expected = local_nh(oracle::ade_formula(fam, t.index()));
    INFO(t.name());
    CHECK(ade_nh(t) == expected);
    CHECK(ade_closed_nh(t) == expected);
  }
}

TEST_CASE("closed formula rejects h outside 0..delta") {
  CHECK_THROWS_AS(ade_closed_formula(AdeType::parse("E6"), 4), InvalidArgument);
  CHECK_THROWS_AS(ade_closed_formula(AdeType::parse("E6"), -1), InvalidArgument);
}

TEST_CASE("catalog entries have nonnegative n_h with n_delta = 1") {
  for (const auto& t : all_ade_up_to_12()) {
    const auto v = ade_nh(t);
    CHECK(v.at(t.delta()) == 1);
    for (const auto& c : v.values())
      CHECK(c >= 0);
  }
}

TEST_CASE("(1-q)^b times the local series is a polynomial of degree <= 2 delta") {
  for (const auto& t : all_ade_up_to_12()) {
    const unsigned order = 2 * t.delta() + 5;
    const auto num = one_minus_q_pow(t.branches(), order) * ade_local_series(t, order);
    for (unsigned d = 2 * t.delta() + 1; d <= order; ++d)
      CHECK(num[d] == 0);
  }
}

TEST_CASE("small staircase counts") {
  CHECK(count_staircases(3, model_constraint(InfinityModel::A)) == 2);
  CHECK(count_staircases(3, model_constraint(InfinityModel::D)) == 3);
  for (auto m : {InfinityModel::A, InfinityModel::D, InfinityModel::E})
    CHECK(count_staircases(0, model_constraint(m)) == 1);
  CHECK(to_i64(model_series(InfinityModel::A, 5)) == oracle::Poly{1, 1, 2, 2, 3, 3});
  CHECK(to_i64(model_series(InfinityModel::E, 5)) == oracle::Poly{1, 1, 2, 3, 4, 5});
}
