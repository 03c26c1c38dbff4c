#pragma once

#include <string>

#include "matroid/constructions.hpp"
#include "matroid/enumeration.hpp"
#include "matroid/invariants.hpp"

namespace matroid {

// Toolkit-wide interchange formats; every emitter re-parses to an equal
// value.  Parse errors throw Error.

std::string to_json(const CyclicFlatMatroid& m);
CyclicFlatMatroid matroid_from_json(const std::string& text);

std::string to_json(const SetSystem& a);
SetSystem set_system_from_json(const std::string& text);

std::string to_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);

std::string to_json(const FiniteLattice& l);
FiniteLattice lattice_from_json(const std::string& text);

std::string to_json(const TuttePolynomial& t);
TuttePolynomial tutte_from_json(const std::string& text);

std::string to_json(const GInvariant& g);
GInvariant g_invariant_from_json(const std::string& text);

}  // namespace matroid
