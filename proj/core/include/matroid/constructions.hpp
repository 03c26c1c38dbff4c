#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "matroid/lattice.hpp"
#include "matroid/lpm.hpp"
#include "matroid/transversal.hpp"

namespace matroid {

// M +_X e: the new element n+1 is added freely to X; r'(Y u e) = r(Y) when
// X is spanned by Y, else r(Y) + 1.
CyclicFlatMatroid principal_extension(const CyclicFlatMatroid& m, Subset x,
                                      int budget = kEnumerationBudget);

struct HypothesisFailure {
  int clause = 0;  // 1: a filter difference is empty; 2: a modular cross pair
  Subset witness_x, witness_y;
  std::string detail;
};

// The two-filters swap: when (i) both Z_x - Z_y and Z_y - Z_x are nonempty
// and (ii) every cross pair is non-modular, replaces each Y in Z_y - Z_x by
// (Y - y) u x keeping its rank.  The result has the same configuration as M
// and is not isomorphic to it.
std::variant<CyclicFlatMatroid, HypothesisFailure> twofilters(const CyclicFlatMatroid& m, int x, int y);

// The same-configuration non-isomorphic witness for a mixed connected
// diagram: picks the disjoint non-modular corner pair minimizing b - a and
// applies the swap; when only overlapping mixed pairs exist, works in the
// dual diagram and dualizes back.
CyclicFlatMatroid lpm_witness(const Diagram& d);

struct ConedMatroid {
  CyclicFlatMatroid matroid;
  int tip = 0;
  Subset base;
};

// Free m-cone of a loopless matroid: a tip coloop plus m points added freely
// on each tip-to-element line.  Ground set order: E(M), tip, then cone
// points grouped by base element ascending.  Built directly from the
// cyclic-flat description.
ConedMatroid free_m_cone(const CyclicFlatMatroid& m, int m_points);

// Independent route for cross-checks: coloop plus iterated principal
// extensions.  Isomorphic to free_m_cone's matroid.
CyclicFlatMatroid free_m_cone_by_extensions(const CyclicFlatMatroid& m, int m_points,
                                            int budget = kEnumerationBudget);

CyclicFlatMatroid tipless(const ConedMatroid& q, int budget = kEnumerationBudget);
CyclicFlatMatroid baseless(const ConedMatroid& q, int budget = kEnumerationBudget);
CyclicFlatMatroid tipless_baseless(const ConedMatroid& q, int budget = kEnumerationBudget);

// Adds k elements parallel to each element of M, copies grouped by base
// element ascending after the original ground set.
CyclicFlatMatroid parallel_blowup(const CyclicFlatMatroid& m, int k, int budget = kEnumerationBudget);

// The family of pairs with equal flag tables but different configurations:
// M is the lattice path matroid of the staircase P = E^{2b+k}(N^k E^b)^2 N^k,
// Q = (N^k E^b)^2 N^k E^{2b+k}; M' swaps the final interval chain onto W.
std::pair<CyclicFlatMatroid, CyclicFlatMatroid> diffconfig_pair(int b, int k);

// The tipless 2-cone of U_{3,4} and the hand-built matroid with the same
// configuration that is not isomorphic to it.
std::pair<CyclicFlatMatroid, CyclicFlatMatroid> tipless_counterexample();

struct LatticeRealization {
  SetSystem presentation;
  CyclicFlatMatroid matroid;
  std::vector<Subset> flat_of_node;  // F_z per lattice node index
};

// Realizes L as the lattice of cyclic flats of a transversal matroid:
// blocks S_z of |V_z| + 1 fresh elements with V_z = {y : y not >= z},
// cyclic flats F_z = union of S_y over y <= z of rank |V_z|, presented by
// A_y = union of S_z over z not <= y.  The S_bottom loop is kept unless
// drop_loop is set.
LatticeRealization lattice_to_transversal(const FiniteLattice& l, bool drop_loop = false);

// For a non-chain lattice: two non-isomorphic transversal matroids with the
// same configuration whose cyclic-flat lattices are both isomorphic to L.
// When the top covers only one node, the top chain is stripped, the pair is
// built on the ideal below, and each stripped level is re-added as one
// coloop plus one free element.
std::pair<CyclicFlatMatroid, CyclicFlatMatroid> theorem71_pair(const FiniteLattice& l);

}  // namespace matroid
