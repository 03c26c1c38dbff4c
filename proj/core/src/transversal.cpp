#include "matroid/transversal.hpp"

#include <algorithm>

namespace matroid {

namespace {

constexpr int kMasonIngletonFlatCap = 24;

bool try_augment(const SetSystem& a, int e, std::vector<int>& set_to_elem, std::vector<bool>& visited) {
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    if (visited[i] || !a.sets[i].contains(e)) continue;
    visited[i] = true;
    if (set_to_elem[i] == 0 || try_augment(a, set_to_elem[i], set_to_elem, visited)) {
      set_to_elem[i] = e;
      return true;
    }
  }
  return false;
}

}  // namespace

void check_set_system(const SetSystem& a) {
  if (a.n < 0 || a.n > kMaxGroundSet)
    throw Error("set system: ground-set size " + std::to_string(a.n) + " outside [0," +
                std::to_string(kMaxGroundSet) + "]");
  for (const Subset& s : a.sets)
    if (!s.subset_of(Subset::full(a.n)))
      throw Error("set system: " + s.to_string() + " not a subset of [" + std::to_string(a.n) + "]");
}

int transversal_rank(const SetSystem& a, Subset x) {
  check_set_system(a);
  if (!x.subset_of(Subset::full(a.n))) throw Error("transversal_rank: X not a subset of [n]");
  std::vector<int> set_to_elem(a.sets.size(), 0);
  int matched = 0;
  for (int e : x.elements()) {
    std::vector<bool> visited(a.sets.size(), false);
    if (try_augment(a, e, set_to_elem, visited)) ++matched;
  }
  return matched;
}

Subset support(const SetSystem& a, Subset x) {
  check_set_system(a);
  Subset out;
  for (std::size_t i = 0; i < a.sets.size(); ++i)
    if (a.sets[i].intersects(x)) out.add(static_cast<int>(i) + 1);
  return out;
}

CyclicFlatMatroid matroid_of(const SetSystem& a, int budget) {
  check_set_system(a);
  CyclicFlatMatroid m =
      from_rank_oracle(a.n, [&](Subset x) { return transversal_rank(a, x); }, budget);
  for (const RankedSet& f : m.cyclic_flats()) {
    if (f.rank != support(a, f.set).size())
      throw std::logic_error("matroid_of: cyclic flat " + f.set.to_string() +
                             " violates r(X) = |support(X)|");
  }
  return m;
}

namespace {

struct AntichainSearch {
  const CyclicFlatMatroid& m;
  const std::vector<RankedSet>& fl;
  std::vector<int> chosen;
  std::vector<Subset> witness;

  bool violated_by_current() {
    const int k = static_cast<int>(chosen.size());
    Subset inter = fl[chosen[0]].set;
    for (int i = 1; i < k; ++i) inter = inter & fl[chosen[i]].set;
    long long rhs = 0;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Subset uni;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) uni = uni | fl[chosen[i]].set;
      const int sign = (std::popcount(mask) % 2 == 1) ? 1 : -1;
      rhs += sign * rank(m, uni);
    }
    return rank(m, inter) > rhs;
  }

  bool search(int from) {
    if (chosen.size() >= 3 && violated_by_current()) {
      for (int i : chosen) witness.push_back(fl[i].set);
      return true;
    }
    for (int j = from; j < static_cast<int>(fl.size()); ++j) {
      bool comparable = false;
      for (int i : chosen) {
        if (fl[i].set.subset_of(fl[j].set) || fl[j].set.subset_of(fl[i].set)) {
          comparable = true;
          break;
        }
      }
      if (comparable) continue;
      chosen.push_back(j);
      if (search(j + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

MasonIngletonResult mason_ingleton(const CyclicFlatMatroid& m) {
  ensure_valid(m);
  if (static_cast<int>(m.cyclic_flats().size()) > kMasonIngletonFlatCap)
    throw Error("mason_ingleton: too many cyclic flats (" +
                std::to_string(m.cyclic_flats().size()) + " > " +
                std::to_string(kMasonIngletonFlatCap) + ")");
  AntichainSearch s{m, m.cyclic_flats(), {}, {}};
  MasonIngletonResult out;
  if (s.search(0)) {
    out.transversal = false;
    out.violating_antichain = std::move(s.witness);
  }
  return out;
}

}  // namespace matroid
