#pragma once

// Catalog of singularity models, and the comparison
//     P_inf(link) == sum_h n_h z^{2h - b}.

#include "severi/ade.hpp"
#include "severi/braid.hpp"
#include "severi/genus_transform.hpp"
#include "severi/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace severi {

enum class NhSource { Staircase, None };

struct LinkBraid {
  int strands;
  std::string word;  // braid grammar text
};

struct SingularityModel {
  std::string name;
  int delta;
  int mu;
  int branches;
  NhSource nh_source;
  std::optional<AdeType> ade;
  std::optional<LinkBraid> link_braid;

  BraidWord braid() const;  // throws InvalidArgument without link_braid
};

SingularityModel ade_model(const AdeType& t);
// x^p - y^q with gcd(p, q) = 1; delta = (p-1)(q-1)/2 (gaps of <p, q>).
// Recognized ADE torus germs carry their ADE label and n_h source.
SingularityModel torus_model(int p, int q);

// A_1..A_12, D_4..D_12, E_6..E_8, then a few non-ADE torus knots.
std::vector<SingularityModel> catalog();

// Looks up "E6", "A_3", "T(4,5)", "torus 4 5", ... Throws InvalidArgument.
SingularityModel find_model(const std::string& name);

// Both mu relations: mu = 2 delta + 1 - b and, for positive braids,
// mu = w - n + 1 (with b equal to the closure's component count).
bool model_is_consistent(const SingularityModel& m);

enum class ConjectureStatus { Match, Mismatch, NhUnavailable };

struct ConjectureReport {
  std::string model;
  LaurentPoly1 pinf;
  std::vector<std::uint64_t> counts;
  std::optional<LaurentPoly1> nh_side;
  std::optional<NhVector> nh;
  ConjectureStatus status;
};

ConjectureReport conjecture_check(const SingularityModel& m,
                                  const EnumerationOptions& opts = default_enumeration_options());

// sum_h n_h z^{2h - b}
LaurentPoly1 nh_generating_polynomial(const NhVector& n, int branches);

const char* to_string(ConjectureStatus s);

} // namespace severi
