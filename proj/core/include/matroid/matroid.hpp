#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matroid/subset.hpp"

namespace matroid {

// Cap for 2^n subset-enumeration work (from_rank_oracle, tutte, ...).
inline constexpr int kEnumerationBudget = 22;
// Absolute ceiling no budget override may exceed (rank tables are 2^n bytes).
inline constexpr int kEnumerationCeiling = 26;

struct RankedSet {
  Subset set;
  int rank = 0;

  RankedSet() = default;
  RankedSet(Subset s, int r) : set(s), rank(r) {
    if (r < 0 || r > s.size())
      throw Error("rank " + std::to_string(r) + " outside [0,|" + s.to_string() + "|]");
  }

  int nullity() const { return set.size() - rank; }
  bool operator==(const RankedSet&) const = default;
};

// A matroid encoded by its ground-set size and the ranked list of cyclic
// flats.  Construction checks structure only (bounds, duplicates); the
// (Z0)-(Z3) axioms are the job of validate_z_axioms.
class CyclicFlatMatroid {
 public:
  CyclicFlatMatroid() = default;
  CyclicFlatMatroid(int n, std::vector<RankedSet> flats);

  int ground_size() const { return n_; }
  const std::vector<RankedSet>& cyclic_flats() const { return flats_; }
  Subset full_set() const { return Subset::full(n_); }

  // Index into cyclic_flats() of the flat with this exact set, or -1.
  int find_flat(Subset s) const;

  bool operator==(const CyclicFlatMatroid&) const = default;

 private:
  int n_ = 0;
  std::vector<RankedSet> flats_;  // sorted by (size, lex); sets unique
};

enum class ZAxiom { Z0, Z1, Z2, Z3 };

std::string to_string(ZAxiom a);

struct ValidationReport {
  bool valid = true;
  ZAxiom axiom = ZAxiom::Z0;
  Subset witness_x, witness_y;
  std::string detail;

  static ValidationReport ok() { return ValidationReport{}; }
  static ValidationReport violation(ZAxiom a, Subset x, Subset y, std::string detail);
};

// Checks (Z0)-(Z3) and reports the first violation in that fixed order with
// the lexicographically least witness pair.  Throws on structural errors
// (duplicate sets, n out of range).
ValidationReport validate_z_axioms(int n, const std::vector<RankedSet>& flats);
ValidationReport validate_z_axioms(const CyclicFlatMatroid& m);

// Throws Error carrying the report text when m fails the axioms.
void ensure_valid(const CyclicFlatMatroid& m);

// r(X) = min { r(F) + |X - F| : F cyclic flat }.
int rank(const CyclicFlatMatroid& m, Subset x);
int rank(const CyclicFlatMatroid& m);  // r(M)

// The unique maximal superset of X with the same rank.
Subset closure(const CyclicFlatMatroid& m, Subset x);

bool is_modular_pair(const CyclicFlatMatroid& m, Subset x, Subset y);

CyclicFlatMatroid dual(const CyclicFlatMatroid& m);

// Finest partition {E_i} of [n] with r(M) = sum r(E_i); exhaustive separator
// search, exact for n <= budget.
std::vector<Subset> direct_components(const CyclicFlatMatroid& m, int budget = kEnumerationBudget);

// Ranks of all 2^n subsets, indexed by bit mask.
std::vector<std::uint8_t> rank_table(const CyclicFlatMatroid& m, int budget = kEnumerationBudget);

// All flats grouped by rank, as bit masks; generated by closures upward
// from cl(empty), so no 2^n scan.
std::vector<std::vector<std::uint64_t>> flats_by_rank(const CyclicFlatMatroid& m);

// Extracts the cyclic flats of the matroid given by a rank oracle: a set is
// kept when it is closed and its restriction has no coloops.  Validates the
// axioms and checks that the rebuilt rank agrees with the oracle on every
// subset, so a non-matroid oracle fails loudly.
CyclicFlatMatroid from_rank_oracle(int n, const std::function<int(Subset)>& oracle,
                                   int budget = kEnumerationBudget);

// Relabels by the bijection perm (1-based: element e becomes perm[e-1]).
CyclicFlatMatroid relabel(const CyclicFlatMatroid& m, const std::vector<int>& perm);

// Restriction to [n] - doomed, relabeled to [n - |doomed|] preserving order.
CyclicFlatMatroid delete_elements(const CyclicFlatMatroid& m, Subset doomed,
                                  int budget = kEnumerationBudget);

}  // namespace matroid
