#include "matroid/acceptance.hpp"

#include <ostream>

namespace matroid {

bool run_acceptance(std::ostream& out, std::uint64_t seed) {
  out << "acceptance suite not wired up yet (seed " << seed << ")\n";
  return false;
}

}  // namespace matroid
