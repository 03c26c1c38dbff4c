#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

// A finite lattice over opaque node ids: the full comparability relation
// plus meet and join tables.  Construction verifies lattice-ness and throws
// Error otherwise.
class FiniteLattice {
 public:
  // From Hasse cover pairs (lower index, upper index).
  FiniteLattice(std::vector<std::string> ids, const std::vector<std::pair<int, int>>& covers);

  static FiniteLattice from_leq(std::vector<std::string> ids, std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  int index_of(const std::string& id) const;  // -1 when missing

  bool leq(int a, int b) const { return leq_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool is_chain() const;

  std::vector<int> upper_covers(int v) const;
  std::vector<int> lower_covers(int v) const;
  std::vector<std::pair<int, int>> cover_pairs() const;  // (lower, upper)

 private:
  FiniteLattice() = default;
  void build_tables();

  std::vector<std::string> ids_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> meet_, join_;
  int bottom_ = 0, top_ = 0;
};

// Canonical byte encoding of a labeled poset given by upper covers: equal
// bytes iff there is a label-preserving order isomorphism.  Canonicalization
// is iterative refinement on (label, cover-degree, neighbor colors) followed
// by individualization backtracking, keeping the least encoding.
std::vector<std::uint8_t> canonical_poset_bytes(int k,
                                                const std::vector<std::vector<int>>& upper_covers,
                                                const std::vector<std::array<int, 2>>& labels);

bool lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

// The lattice of cyclic flats: node i corresponds to nodes[i]; the join is
// cl(A u B) and the meet is (A n B) minus the coloops of the restriction.
struct ZLattice {
  FiniteLattice lattice;
  std::vector<RankedSet> nodes;
};

ZLattice zlattice(const CyclicFlatMatroid& m);

}  // namespace matroid
