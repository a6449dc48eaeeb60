#pragma once

// Self-check of every tabulated fact about the family: code census, lattice
// identities, theta kernel identity, coset relations, minimal vectors and
// pairs, and the leading coefficients of delta.

#include <cstdint>
#include <string>
#include <vector>

namespace tetra {

struct AnchorResult {
  std::string anchor;
  bool passed;
  std::string witness;  // empty on success
};

/// Runs all anchors at the given budget (>= 36, std::invalid_argument otherwise).
std::vector<AnchorResult> run_anchors(std::int64_t budget);

}  // namespace tetra
