#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/transversal.hpp"

namespace matroid {

// A monotone lattice path from (0,0), written over the letters N and E.
struct LatticePath {
  std::string steps;

  bool operator==(const LatticePath&) const = default;
};

// The region between two bounding paths of equal endpoints, with lower (P)
// never rising above upper (Q).  Paths may touch internally; such diagrams
// are accepted here but give disconnected matroids.
struct Diagram {
  LatticePath lower;  // P
  LatticePath upper;  // Q

  bool operator==(const Diagram&) const = default;
};

// Validates and builds a diagram; throws Error on malformed paths.
Diagram make_diagram(const std::string& upper, const std::string& lower);
void check_diagram(const Diagram& d);

int diagram_size(const Diagram& d);  // path length minus one
int diagram_rank(const Diagram& d);  // number of north steps

// Paths meet only at their common endpoints.
bool is_connected(const Diagram& d);

// Splits a diagram at interior touch points into connected sub-diagrams.
std::vector<Diagram> split_components(const Diagram& d);

// Row view: rows[i] = [start column, end column] of row i+1, bottom-up.
struct DiagramRows {
  std::vector<std::pair<int, int>> rows;

  bool operator==(const DiagramRows&) const = default;
};

DiagramRows rows_of(const Diagram& d);
Diagram diagram_from_rows(const DiagramRows& rows);

// The path presentation (N_1, ..., N_r) with N_i = [l_i, u_i], where l_i and
// u_i are the positions of the i-th north steps of upper and lower path.
SetSystem path_presentation(const Diagram& d);

CyclicFlatMatroid lpm_matroid(const Diagram& d, int budget = kEnumerationBudget);

enum class CornerKind { Initial, Final };

// Initial connected flats [1,a] come from EN corners of the upper path;
// final connected flats [b,n] from NE corners of the lower path.  (x, y) is
// the integer corner point, so x + y = a for initial and x + y = b - 1 for
// final corners.
struct CornerFlat {
  CornerKind kind = CornerKind::Initial;
  Subset interval;
  int endpoint = 0;  // a for initial, b for final
  int x = 0, y = 0;

  bool operator==(const CornerFlat&) const = default;
};

std::vector<CornerFlat> corner_flats(const Diagram& d);  // requires connected

// (initial, final) pairs with a1 < b1 and a2 > b2.
std::vector<std::pair<CornerFlat, CornerFlat>> mixed_pairs(const Diagram& d);

// Counting criterion: the pair is modular iff the number of N_i meeting both
// flats is at most |A n B|.
bool is_modular_corner_pair(const Diagram& d, const CornerFlat& initial, const CornerFlat& final_flat);

// True iff no connected component's diagram has a mixed pair; equivalent to
// the lattice path matroid being a fundamental transversal matroid.
bool is_fundamental(const Diagram& d);

// Rows labeled 1..r bottom-up, columns r+1..n left to right; A_i holds i and
// the labels of the columns with a square in row i.
SetSystem rook_presentation(const Diagram& d);

// Rank of the interval [a,b]: min of its length and the number of N_i
// meeting it.
int interval_rank(const Diagram& d, int a, int b);

enum class DiagramTransform { DualFlip, Rotate180 };

// DualFlip reflects about y = x and presents the dual matroid exactly;
// Rotate180 reverses both paths and is an isomorphism via i -> n+1-i.
Diagram transform(const Diagram& d, DiagramTransform t);

// The sub-diagram presenting the restriction to [a,b], or nullopt when that
// restriction is a free matroid.  a and b must not be loops.
std::optional<Diagram> restrict_to_interval(const Diagram& d, int a, int b);

}  // namespace matroid
