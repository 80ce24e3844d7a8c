#pragma once

#include <string>
#include <string_view>

namespace severi {

enum class AdeFamily { A, D, E };

// A simple plane curve singularity A_n (n >= 1), D_n (n >= 4), E_6/7/8.
//
// (delta, b) is derived from mu = n and mu = 2 delta + 1 - b:
//   A_{2d-1}: (d, 2)     A_{2d}: (d, 1)
//   D_n, n even: ((n+2)/2, 3)     D_n, n odd: ((n+1)/2, 2)
//   E_6: (3, 1)   E_7: (4, 2)   E_8: (4, 1)
class AdeType {
public:
  // Throws InvalidArgument on an invalid family/index pair.
  AdeType(AdeFamily family, int index);

  // Accepts "E6", "E_6", "a12", "D_5", ...
  static AdeType parse(std::string_view label);

  AdeFamily family() const noexcept { return family_; }
  int index() const noexcept { return index_; }
  std::string name() const;  // "E6"

  int delta() const noexcept { return delta_; }
  int branches() const noexcept { return branches_; }
  int milnor() const noexcept { return index_; }

  friend bool operator==(const AdeType&, const AdeType&) = default;

private:
  AdeFamily family_;
  int index_;
  int delta_;
  int branches_;
};

} // namespace severi
