#pragma once

#include "oracles.hpp"
#include "severi/genus_transform.hpp"
#include "severi/laurent.hpp"

#include <vector>

namespace test_support {

inline oracle::Poly to_i64(const severi::TruncatedSeries& s) {
  oracle::Poly out;
  for (const auto& c : s.coeffs())
    out.push_back(static_cast<oracle::i64>(c));
  return out;
}

inline std::vector<oracle::i64> to_i64(const severi::NhVector& v) {
  std::vector<oracle::i64> out;
  for (const auto& c : v.values())
    out.push_back(static_cast<oracle::i64>(c));
  return out;
}

inline severi::TruncatedSeries to_series(const oracle::Poly& p) {
  return severi::TruncatedSeries(std::vector<severi::BigInt>(p.begin(), p.end()));
}

inline severi::NhVector local_nh(const std::vector<oracle::i64>& v) {
  return severi::NhVector(severi::NhKind::Local, 0, std::vector<severi::BigInt>(v.begin(), v.end()));
}

}  // namespace test_support
