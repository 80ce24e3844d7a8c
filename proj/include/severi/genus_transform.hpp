#pragma once

// Transform between generating series of Euler numbers of Hilbert schemes
// of points and the integers n_h. Global form (complete curve of arithmetic
// genus g):
//
//     sum_d f_d q^d = sum_{h <= g} n_h q^{g-h} (1-q)^{2h-2}
//
// Local form (germ with delta invariant delta and b branches):
//
//     (1-q)^b sum_n chi(c^[n]) q^n = sum_{h=0}^{delta} n_h q^{delta-h} (1-q)^{2h}
//
// Both systems are unitriangular in q, so everything is solved by
// back-substitution over the integers.

#include "severi/laurent.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace severi {

enum class NhKind { Local, Global };

// n_h for h = low .. low + values.size() - 1. Entries outside that range
// are zero; equality compares the underlying functions of h.
class NhVector {
public:
  NhVector(NhKind kind, int low, std::vector<BigInt> values);

  NhKind kind() const noexcept { return kind_; }
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(values_.size()) - 1; }
  std::span<const BigInt> values() const noexcept { return values_; }
  BigInt at(int h) const;

  friend bool operator==(const NhVector& x, const NhVector& y);

private:
  NhKind kind_;
  int low_;
  std::vector<BigInt> values_;
};

struct GlobalCurveData {
  int genus = 0;            // arithmetic genus g
  int geometric_genus = 0;  // g~, informational
  TruncatedSeries hilb{1};  // chi(C^[n]), n = 0..order
};

struct LocalGermData {
  int delta = 0;
  int branches = 1;
  TruncatedSeries hilb{1};  // chi(c^[n]), n = 0..order; only 0..delta used
  int milnor() const { return 2 * delta + 1 - branches; }
};

// Requires hilb.order >= g. Computes every n_h whose term reaches q^order,
// then trims zero entries at negative h (so low = 0 for geometric input).
NhVector nh_from_series_global(const GlobalCurveData& d);

// Inverse of the global transform, to the given order. For kind() == Global
// the arithmetic genus is v.high().
TruncatedSeries series_from_nh(const NhVector& v, unsigned order);

// Requires hilb.order >= delta. Returns n_0 .. n_delta.
NhVector nh_from_series_local(const LocalGermData& d);

// The germ's full local series sum chi(c^[n]) q^n rebuilt from n_0..n_delta.
TruncatedSeries local_series_from_nh(const NhVector& v, int branches, unsigned order);

// n_h(C) = sum over i_1 + ... + i_k + g~ = h of prod n_{i_j}(c_j).
NhVector combine_local(int geometric_genus, std::span<const NhVector> locals);

// True iff every entry strictly below `h` is zero.
bool vanishes_below(const NhVector& v, int h);

struct LowVanishing {
  bool ok = false;
  BigInt c = 0;  // n_0 when ok
};

// Checks f_d - f_{2g-2-d} = c (d+1-g) for every d in range (f_{<0} = 0).
LowVanishing check_low_vanishing(const TruncatedSeries& f, int genus);

struct IdentityCheck {
  std::string name;
  bool passed;
  BigInt expected;
  BigInt actual;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

// n_g = 1 and n_{g-1} = chi_top + 2g - 2. Mismatches are reported.
IdentityReport identity_checks(const GlobalCurveData& d, const BigInt& topological_euler);

} // namespace severi
