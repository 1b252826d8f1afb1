#pragma once

#include <iosfwd>

namespace ppart {

// Runs the eight acceptance suites, printing one "PASS"/"FAIL" line per
// criterion plus detail lines for failures. Returns the number of failed
// criteria.
int run_acceptance(std::ostream& out);

}  // namespace ppart
