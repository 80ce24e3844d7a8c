#include "severi/selftest.hpp"

#include "severi/braid.hpp"
#include "severi/dynkin.hpp"
#include "severi/genus_transform.hpp"
#include "severi/models.hpp"
#include "severi/staircase.hpp"

#include <functional>
#include <sstream>

namespace severi {

namespace {

std::string show(const NhVector& v) {
  std::ostringstream os;
  os << "low=" << v.low() << " [";
  for (std::size_t i = 0; i < v.values().size(); ++i)
    os << (i ? "," : "") << v.values()[i];
  os << ']';
  return os.str();
}

NhVector local(std::initializer_list<int> values) {
  return NhVector(NhKind::Local, 0, std::vector<BigInt>(values.begin(), values.end()));
}

NhVector global(int low, std::initializer_list<int> values) {
  return NhVector(NhKind::Global, low, std::vector<BigInt>(values.begin(), values.end()));
}

TruncatedSeries series(std::initializer_list<int> c) {
  return TruncatedSeries(std::vector<BigInt>(c.begin(), c.end()));
}

// Global series of a rational curve with one singularity:
// (1-q)^{b-2} times the local series.
TruncatedSeries rational_with(const NhVector& loc, int branches, unsigned order) {
  return one_minus_q_pow(branches - 2, order) * local_series_from_nh(loc, branches, order);
}

class Suite {
public:
  void nh(const std::string& name, const std::function<NhVector()>& f, const NhVector& expected) {
    run(name, [&] {
      const NhVector got = f();
      return std::pair{got == expected, show(got)};
    });
  }

  void poly(const std::string& name, const std::function<LaurentPoly1()>& f,
            const LaurentPoly1& expected) {
    run(name, [&] {
      const LaurentPoly1 got = f();
      return std::pair{got == expected, got.to_string()};
    });
  }

  void truth(const std::string& name, const std::function<bool()>& f) {
    run(name, [&] { return std::pair{f(), std::string("false")}; });
  }

  std::vector<AnchorResult> take() { return std::move(results_); }

private:
  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
    try {
      auto [ok, detail] = f();
      results_.push_back({name, ok, ok ? "" : detail});
    } catch (const std::exception& e) {
      results_.push_back({name, false, std::string("threw: ") + e.what()});
    }
  }

  std::vector<AnchorResult> results_;
};

} // namespace

std::vector<AnchorResult> run_selftest() {
  Suite s;
  const auto opts = default_enumeration_options();

  // Hilbert series / n_h transforms.
  s.nh("smooth genus-2 curve: n_2 = 1, others 0",
       [] { return nh_from_series_global({2, 2, one_minus_q_pow(2, 2)}); }, global(0, {0, 0, 1}));
  s.nh("rational nodal curve: (n_0, n_1) = (1, 1)",
       [] { return nh_from_series_global({1, 0, rational_with(local({1, 1}), 2, 6)}); },
       global(0, {1, 1}));
  s.nh("rational cuspidal curve: (n_0, n_1) = (2, 1)",
       [] { return nh_from_series_global({1, 0, rational_with(local({2, 1}), 1, 6)}); },
       global(0, {2, 1}));
  s.nh("node germ: (n_0, n_1) = (1, 1)",
       [] { return nh_from_series_local({1, 2, series({1, 1})}); }, local({1, 1}));
  s.nh("cusp germ: (n_0, n_1) = (2, 1)",
       [] { return nh_from_series_local({1, 1, series({1, 1})}); }, local({2, 1}));
  s.truth("E6 local vector rebuilds the E_inf series to order delta", [] {
    return local_series_from_nh(local({5, 10, 6, 1}), 1, 3) ==
           model_series(InfinityModel::E, 3);
  });
  s.nh("nodal curve, 4 nodes: n_h = C(4, 4 - h)", [] {
    const std::vector<NhVector> nodes(4, local({1, 1}));
    return combine_local(0, nodes);
  }, global(0, {1, 4, 6, 4, 1}));
  s.nh("single singularity on a rational curve: n_h(C) = n_h(c)", [] {
    const std::vector<NhVector> one{local({5, 10, 6, 1})};
    return combine_local(0, one);
  }, global(0, {5, 10, 6, 1}));
  s.truth("cuspidal cubic: low vanishing criterion holds with c = n_0 = 2", [] {
    const auto r = check_low_vanishing(rational_with(local({2, 1}), 1, 8), 1);
    return r.ok && r.c == 2;
  });
  s.truth("cuspidal cubic: n_{g-1} = chi + 2g - 2 with chi = 2", [] {
    return identity_checks({1, 0, rational_with(local({2, 1}), 1, 6)}, 2).all_passed();
  });
  s.truth("nodal cubic: n_{g-1} = chi + 2g - 2 with chi = 1", [] {
    return identity_checks({1, 0, rational_with(local({1, 1}), 2, 6)}, 1).all_passed();
  });

  // ADE tables.
  s.nh("E6 by truncation: (5, 10, 6, 1)", [] { return ade_nh(AdeType::parse("E6")); },
       local({5, 10, 6, 1}));
  s.nh("E7 by truncation: (2, 11, 15, 7, 1)", [] { return ade_nh(AdeType::parse("E7")); },
       local({2, 11, 15, 7, 1}));
  s.nh("E8 by truncation: (7, 21, 21, 8, 1)", [] { return ade_nh(AdeType::parse("E8")); },
       local({7, 21, 21, 8, 1}));
  s.nh("A1 by truncation: (1, 1)", [] { return ade_nh(AdeType::parse("A1")); }, local({1, 1}));
  s.nh("A2 by truncation: (2, 1)", [] { return ade_nh(AdeType::parse("A2")); }, local({2, 1}));
  s.truth("A3 closed formula: n_1 = C(3, 1) = 3",
          [] { return ade_closed_formula(AdeType::parse("A3"), 1) == 3; });
  s.truth("E8 closed table: n_4 = 1", [] { return ade_closed_formula(AdeType::parse("E8"), 4) == 1; });
  s.truth("A and D binomial formulas equal truncation, index <= 12", [] {
    for (int n = 1; n <= 12; ++n)
      if (!(ade_nh(AdeType(AdeFamily::A, n)) == ade_closed_nh(AdeType(AdeFamily::A, n))))
        return false;
    for (int n = 4; n <= 12; ++n)
      if (!(ade_nh(AdeType(AdeFamily::D, n)) == ade_closed_nh(AdeType(AdeFamily::D, n))))
        return false;
    return true;
  });

  // Dynkin diagram counts.
  s.nh("E6 diagram independent sets: (5, 10, 6, 1)",
       [] { return dynkin_nh(AdeType::parse("E6")); }, local({5, 10, 6, 1}));
  s.nh("E8 diagram independent sets: (7, 21, 21, 8, 1)",
       [] { return dynkin_nh(AdeType::parse("E8")); }, local({7, 21, 21, 8, 1}));

  // Braids and the state sum.
  s.truth("parse (1 2)^4 on 3 strands", [] {
    const BraidWord w = parse_braid("(1 2)^4", 3);
    std::vector<BraidLetter> expected;
    for (int k = 0; k < 4; ++k) {
      expected.push_back({1, 1});
      expected.push_back({2, 1});
    }
    return w == BraidWord(3, expected);
  });
  s.truth("trefoil closes to a knot", [] { return closure_components(parse_braid("1 1 1", 2)) == 1; });
  s.truth("T(3,4) closes to a knot",
          [] { return closure_components(parse_braid("(1 2)^4", 3)) == 1; });
  s.truth("trefoil: keep-keep-remove is admissible", [] {
    return is_admissible(CircuitPartition(parse_braid("1 1 1", 2), {true, true, false}));
  });
  s.truth("trefoil: exactly the 5 listed sequences are admissible", [&] {
    return jaeger_homfly(parse_braid("1 1 1", 2), opts).admissible == 5;
  });
  s.truth("trefoil HOMFLY = a^2 (2 - a^2 + z^2) P(unknot)", [&] {
    const auto v = jaeger_homfly(parse_braid("1 1 1", 2), opts);
    const LaurentPoly2 expected{{{2, 0}, 2}, {{4, 0}, -1}, {{2, 2}, 1}};
    return v.normalized && *v.normalized == expected;
  });
  s.poly("trefoil P_inf = 2 z^-1 + z",
         [&] { return pinf_positive(parse_braid("1 1 1", 2), opts).pinf; },
         LaurentPoly1{{-1, 2}, {1, 1}});
  s.truth("trefoil #A_{2,r} = (1, 2)", [&] {
    return pinf_positive(parse_braid("1 1 1", 2), opts).counts == std::vector<std::uint64_t>{1, 2};
  });
  s.truth("T(3,4) #A_{3,r} = (1, 6, 10, 5)", [&] {
    return pinf_positive(parse_braid("(1 2)^4", 3), opts).counts ==
           std::vector<std::uint64_t>{1, 6, 10, 5};
  });
  s.truth("trefoil: mu = 2 and delta = 1 for one branch", [] {
    const auto m = milnor_from_braid(parse_braid("1 1 1", 2));
    return m.mu == 2 && m.delta_for_branches(1) == 1;
  });
  s.truth("T(3,4): mu = 6 and delta = 3 for one branch", [] {
    const auto m = milnor_from_braid(parse_braid("(1 2)^4", 3));
    return m.mu == 6 && m.delta_for_branches(1) == 3;
  });

  // Catalog and the P_inf comparison.
  s.truth("A2 catalog entry: braid 1 1 1, delta 1, mu 2, b 1", [] {
    const auto m = find_model("A2");
    return m.braid() == parse_braid("1 1 1", 2) && m.delta == 1 && m.mu == 2 && m.branches == 1;
  });
  s.truth("E6 catalog entry: braid (1 2)^4, delta 3", [] {
    const auto m = find_model("E6");
    return m.braid() == parse_braid("(1 2)^4", 3) && m.delta == 3;
  });
  s.poly("A2: P_inf and sum n_h z^{2h-b} both equal 2 z^-1 + z", [&] {
    const auto r = conjecture_check(find_model("A2"), opts);
    return r.status == ConjectureStatus::Match ? r.pinf : LaurentPoly1{};
  }, LaurentPoly1{{-1, 2}, {1, 1}});
  s.poly("E6: both sides equal 5 z^-1 + 10 z + 6 z^3 + z^5", [&] {
    const auto r = conjecture_check(find_model("E6"), opts);
    return r.status == ConjectureStatus::Match ? r.pinf : LaurentPoly1{};
  }, LaurentPoly1{{-1, 5}, {1, 10}, {3, 6}, {5, 1}});
  s.poly("E8: P_inf of (1 2)^5 equals 7 z^-1 + 21 z + 21 z^3 + 8 z^5 + z^7", [&] {
    return conjecture_check(find_model("E8"), opts).pinf;
  }, LaurentPoly1{{-1, 7}, {1, 21}, {3, 21}, {5, 8}, {7, 1}});

  return s.take();
}

} // namespace severi
