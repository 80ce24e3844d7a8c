#pragma once

// Monomial ideals in C[[x, y]] of finite colength, seen as staircases
// (Young diagrams). Convention: rows are indexed by the y-exponent b and
// row b has length equal to its x-extent, so box (a, b) is the monomial
// x^a y^b and lies in the staircase iff a < row_lengths[b].

#include "severi/ade.hpp"
#include "severi/genus_transform.hpp"
#include "severi/laurent.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace severi {

struct Staircase {
  std::vector<unsigned> row_lengths;  // weakly decreasing, all positive
  unsigned size() const;
  friend bool operator==(const Staircase&, const Staircase&) = default;
};

// Monomials that must lie in the ideal, i.e. boxes the staircase avoids.
struct BoxConstraint {
  std::vector<std::pair<unsigned, unsigned>> forbidden;  // (a, b) = x^a y^b
};

enum class InfinityModel { A, D, E };

// A_inf: y^2 = 0 -> {(0,2)};  D_inf: x y^2 = 0 -> {(1,2)};  E_inf: y^3 = 0 -> {(0,3)}
BoxConstraint model_constraint(InfinityModel m);
InfinityModel model_for(AdeFamily f);
const char* model_name(InfinityModel m);

// Depth-first over row lengths; rows never grow and a forbidden box (a, b)
// caps row b (and every later row) at a.
std::uint64_t count_staircases(unsigned colength, const BoxConstraint& c);
std::vector<Staircase> enumerate_staircases(unsigned colength, const BoxConstraint& c);

// Counts for colength 0..order, as a series.
TruncatedSeries enumerated_series(InfinityModel m, unsigned order);

// The closed forms
//   A_inf: 1 / ((1-q)(1-q^2))
//   D_inf: (1 - q + q^3) / ((1-q)^2 (1-q^2))
//   E_inf: 1 / ((1-q)(1-q^2)(1-q^3))
TruncatedSeries model_series(InfinityModel m, unsigned order);

// n_h of an ADE germ: chi(c^[n]) for n = 0..delta is read off the matching
// infinity model (the equations agree modulo (x, y)^delta) and fed to the
// local transform.
NhVector ade_nh(const AdeType& t);

// The binomial closed forms for A and D, and the tabulated E values.
// Requires 0 <= h <= delta.
BigInt ade_closed_formula(const AdeType& t, int h);
NhVector ade_closed_nh(const AdeType& t);

// The germ's full local Hilbert series to `order`: the first delta + 1
// coefficients from the infinity model, the rest forced by the local
// transform with n_h supported in 0..delta.
TruncatedSeries ade_local_series(const AdeType& t, unsigned order);

} // namespace severi
