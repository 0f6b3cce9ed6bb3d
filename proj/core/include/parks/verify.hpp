#pragma once

#include <vector>

#include "parks/board.hpp"

namespace parks {

struct Verdict {
  bool valid = false;
  std::vector<Violation> violations;  // empty iff valid
};

// Checks cert against p: exactly c trees per column, r per row, r per park,
// and no two trees kings-adjacent. Reports the complete violation list.
Verdict verify(const Puzzle& p, const Certificate& cert);

}  // namespace parks
