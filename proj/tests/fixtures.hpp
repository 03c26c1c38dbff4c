#pragma once

#include <vector>

#include "matroid/lpm.hpp"
#include "matroid/matroid.hpp"

// Shared fixture matroids and diagrams used across the suites.
namespace fixtures {

using matroid::CyclicFlatMatroid;
using matroid::Diagram;
using matroid::RankedSet;
using matroid::Subset;

// Two rank-3 matroids on [6] with the same configuration: M has lines
// {1,2,3} and {4,5,6}; M' has lines {1,2,3} and {1,5,6}.
inline CyclicFlatMatroid pair_m() {
  return CyclicFlatMatroid(6, {RankedSet(Subset{}, 0), RankedSet(Subset::of({1, 2, 3}), 2),
                               RankedSet(Subset::of({4, 5, 6}), 2), RankedSet(Subset::full(6), 3)});
}

inline CyclicFlatMatroid pair_m_prime() {
  return CyclicFlatMatroid(6, {RankedSet(Subset{}, 0), RankedSet(Subset::of({1, 2, 3}), 2),
                               RankedSet(Subset::of({1, 5, 6}), 2), RankedSet(Subset::full(6), 3)});
}

// The running 9-element, rank-5 lattice path matroid.
inline Diagram running_diagram() { return matroid::make_diagram("NNENNENEE", "EENENNENN"); }

inline std::vector<RankedSet> running_flats() {
  return {RankedSet(Subset{}, 0),
          RankedSet(Subset::interval(1, 3), 2),
          RankedSet(Subset::interval(7, 9), 2),
          RankedSet(Subset::interval(1, 6), 4),
          RankedSet(Subset::interval(1, 3) | Subset::interval(7, 9), 4),
          RankedSet(Subset::interval(4, 9), 4),
          RankedSet(Subset::interval(1, 9), 5)};
}

inline CyclicFlatMatroid running_matroid() { return CyclicFlatMatroid(9, running_flats()); }

// Cyclic flats of the rook matroid on the same diagram.
inline std::vector<RankedSet> running_rook_flats() {
  return {RankedSet(Subset{}, 0),
          RankedSet(Subset::of({1, 2, 6}), 2),
          RankedSet(Subset::of({4, 5, 9}), 2),
          RankedSet(Subset::of({1, 2, 3, 4, 6, 7}), 4),
          RankedSet(Subset::of({1, 2, 4, 5, 6, 9}), 4),
          RankedSet(Subset::of({2, 3, 4, 5, 8, 9}), 4),
          RankedSet(Subset::full(9), 5)};
}

inline CyclicFlatMatroid uniform(int r, int n) {
  std::vector<RankedSet> flats{RankedSet(Subset{}, 0)};
  if (r < n && r > 0) flats.emplace_back(Subset::full(n), r);
  return CyclicFlatMatroid(n, std::move(flats));
}

// Rank-3 transversal matroid on [8] with lines {1,2,3}, {1,4,5}, {6,7,8}
// (x=1, a=2, b=3, c=4, d=5, e=6, f=7, y=8); the two-filters image with
// x=1, y=8 has three concurrent lines and is not transversal.
inline CyclicFlatMatroid three_lines_m() {
  return CyclicFlatMatroid(8, {RankedSet(Subset{}, 0), RankedSet(Subset::of({1, 2, 3}), 2),
                               RankedSet(Subset::of({1, 4, 5}), 2), RankedSet(Subset::of({6, 7, 8}), 2),
                               RankedSet(Subset::full(8), 3)});
}

// The prism: transversal matroid of ([6], {1,2}, {3,4}, {5,6}).
inline matroid::SetSystem prism_presentation() {
  matroid::SetSystem a;
  a.n = 6;
  a.sets = {Subset::full(6), Subset::of({1, 2}), Subset::of({3, 4}), Subset::of({5, 6})};
  return a;
}

}  // namespace fixtures
