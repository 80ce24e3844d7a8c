#pragma once

#include <string>
#include <vector>

namespace severi {

struct AnchorResult {
  std::string name;
  bool passed;
  std::string detail;  // observed value on failure
};

// Known reference values (curves, germs, braids), checked end to end.
std::vector<AnchorResult> run_selftest();

} // namespace severi
