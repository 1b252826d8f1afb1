#pragma once

#include <stdexcept>

#include "ppart/hamsandwich.hpp"

namespace ppart::testing {

struct OracleScopeExceeded : std::runtime_error {
  OracleScopeExceeded() : std::runtime_error("bisect_oracle: out of scope") {}
};

struct NoCutFound : std::runtime_error {
  NoCutFound() : std::runtime_error("bisect_oracle: exhausted all supports") {}
};

// Ground-truth checker by exhaustive enumeration: tries every hyperplane
// through one point per set (completed with canonical directions), then
// every such hyperplane through one extra point of the union. Scope:
// r <= 3 sets, all sizes odd and <= 9, lifted dimension <= 6. Independent
// of the engine's linear algebra on purpose.
Cut bisect_oracle(const BisectionProblem& problem);

}  // namespace ppart::testing
