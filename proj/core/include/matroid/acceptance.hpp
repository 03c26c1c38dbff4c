#pragma once

#include <cstdint>
#include <iosfwd>

namespace matroid {

// Runs the full verification suite, one pass/fail line per criterion plus
// the non-mixed/Catalan ratio report.  Returns true when everything passed.
// The seed drives the randomized checks (relabelings, fuzzed systems).
bool run_acceptance(std::ostream& out, std::uint64_t seed = 0);

}  // namespace matroid
