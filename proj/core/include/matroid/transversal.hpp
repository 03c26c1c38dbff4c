#pragma once

#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

// An indexed family (A_1, ..., A_r) of subsets of [n]; duplicates allowed
// and the order is significant.
struct SetSystem {
  int n = 0;
  std::vector<Subset> sets;

  bool operator==(const SetSystem&) const = default;
};

void check_set_system(const SetSystem& a);

// Size of a maximum matching between the elements of X and the index set,
// with e matchable to i iff e is in A_i.  Augmenting paths, elements taken
// in ascending order.
int transversal_rank(const SetSystem& a, Subset x);

// {i : X n A_i nonempty}, as a subset of [r].
Subset support(const SetSystem& a, Subset x);

// The transversal matroid of the system, via the rank oracle.  Asserts
// r(X) = |support(X)| on every cyclic flat found.
CyclicFlatMatroid matroid_of(const SetSystem& a, int budget = kEnumerationBudget);

struct MasonIngletonResult {
  bool transversal = true;
  // On failure, the first violating antichain of cyclic flats (DFS order).
  std::vector<Subset> violating_antichain;
};

// Mason--Ingleton test: M is transversal iff for every antichain F of cyclic
// flats, r(meet of F) <= alternating sum of r(unions).  Antichains of size
// one and two hold in any matroid, so only |F| >= 3 is enumerated.
MasonIngletonResult mason_ingleton(const CyclicFlatMatroid& m);

}  // namespace matroid
