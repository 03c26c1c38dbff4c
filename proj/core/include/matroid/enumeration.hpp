#pragma once

#include <functional>
#include <string>
#include <vector>

#include "matroid/lpm.hpp"

namespace matroid {

inline constexpr int kDiagramSizeCap = 12;
inline constexpr int kCensusCap = 11;

// Build word over {C, R, S, T}: duplicate rightmost column / topmost row,
// add a square to the right of the topmost row / above the rightmost column.
struct Word {
  std::string letters;

  bool operator==(const Word&) const = default;
};

// All connected diagrams of the given size (exactly Catalan(m) of them), in
// a fixed order: by rank, then upper path, then lower path.
std::vector<Diagram> diagrams_of_size(int m);
void for_each_diagram_of_size(int m, const std::function<void(const Diagram&)>& fn);

// Applies the letters to a single square; the result has size |w| + 1.
Diagram word_to_diagram(const Word& w);

// The unique word with S and T exactly at the corner positions and no RC
// subword.  Requires a connected non-mixed diagram.
Word canonical_word(const Diagram& d);

// Non-mixed, size >= 3, and every row at least two wide and every column at
// least two tall.
bool is_thick(const Diagram& d);

enum class Glue { North, East };

// Cutting along rows/columns that meet the next one in a single square
// decomposes a non-mixed diagram into thick pieces and single squares;
// glues[i] joins pieces[i] and pieces[i+1].
struct ThickDecomposition {
  std::vector<Diagram> pieces;
  std::vector<Glue> glues;
};

ThickDecomposition thick_decompose(const Diagram& d);

// North: b's first north step onto a's last north step of the lower path;
// East: b's first east step onto a's last east step of the upper path.
Diagram glue_diagrams(const Diagram& a, const Diagram& b, Glue glue);

enum class CountKind { Pell, Delannoy, NonMixedTotal, ThickTotal, OrderConsecutive, Catalan };

// Exact closed-form counts: Pell(p1); Delannoy(p1, p2); (3^(m-1)+1)/2
// non-mixed diagrams of size m; Pell(m-2) thick diagrams; order-consecutive
// partitions of [p1] with p2 parts (generating-function coefficients, exact
// integer arithmetic); Catalan(p1).
long long count_formula(CountKind kind, int p1, int p2 = 0);

struct CountRow {
  int m = 0;
  int r = -1;  // -1 when not split by rank
  std::string klass;
  long long brute = 0;
  long long closed = 0;
};

struct CountTable {
  std::vector<CountRow> rows;

  std::string to_tsv() const;
};

// Confronts brute-force classification of all diagrams of size <= m_max
// with the closed forms; throws when any row disagrees.  Also asserts that
// canonical words are unique and round-trip.
CountTable census(int m_max, bool by_rank);

}  // namespace matroid
