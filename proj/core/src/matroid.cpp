#include "matroid/matroid.hpp"

#include <algorithm>
#include <bit>

namespace matroid {

namespace {

void check_ground_size(int n) {
  if (n < 0 || n > kMaxGroundSet)
    throw Error("ground-set size " + std::to_string(n) + " outside [0," +
                std::to_string(kMaxGroundSet) + "]");
}

void check_budget(int n, int budget, const char* what) {
  check_ground_size(n);
  if (budget > kEnumerationCeiling) budget = kEnumerationCeiling;
  if (n > budget)
    throw Error(std::string(what) + ": enumeration budget exceeded (n = " + std::to_string(n) +
                ", budget = " + std::to_string(budget) + ")");
}

// Flats sorted purely lexicographically, used for deterministic witnesses.
std::vector<RankedSet> lex_sorted(std::vector<RankedSet> flats) {
  std::sort(flats.begin(), flats.end(),
            [](const RankedSet& a, const RankedSet& b) { return Subset::lex_less(a.set, b.set); });
  return flats;
}

}  // namespace

std::string to_string(ZAxiom a) {
  switch (a) {
    case ZAxiom::Z0: return "Z0";
    case ZAxiom::Z1: return "Z1";
    case ZAxiom::Z2: return "Z2";
    case ZAxiom::Z3: return "Z3";
  }
  return "?";
}

ValidationReport ValidationReport::violation(ZAxiom a, Subset x, Subset y, std::string detail) {
  ValidationReport r;
  r.valid = false;
  r.axiom = a;
  r.witness_x = x;
  r.witness_y = y;
  r.detail = std::move(detail);
  return r;
}

CyclicFlatMatroid::CyclicFlatMatroid(int n, std::vector<RankedSet> flats) : n_(n), flats_(std::move(flats)) {
  check_ground_size(n);
  for (const RankedSet& f : flats_) {
    if (!f.set.subset_of(Subset::full(n_)))
      throw Error("cyclic flat " + f.set.to_string() + " not a subset of [" + std::to_string(n_) + "]");
  }
  std::sort(flats_.begin(), flats_.end(), [](const RankedSet& a, const RankedSet& b) {
    return Subset::canonical_less(a.set, b.set);
  });
  for (std::size_t i = 1; i < flats_.size(); ++i) {
    if (flats_[i].set == flats_[i - 1].set)
      throw Error("duplicate cyclic flat " + flats_[i].set.to_string());
  }
}

int CyclicFlatMatroid::find_flat(Subset s) const {
  for (std::size_t i = 0; i < flats_.size(); ++i)
    if (flats_[i].set == s) return static_cast<int>(i);
  return -1;
}

ValidationReport validate_z_axioms(int n, const std::vector<RankedSet>& flats) {
  return validate_z_axioms(CyclicFlatMatroid(n, flats));
}

ValidationReport validate_z_axioms(const CyclicFlatMatroid& m) {
  const std::vector<RankedSet> fl = lex_sorted(m.cyclic_flats());
  const int k = static_cast<int>(fl.size());

  // (Z0): the family is a lattice under inclusion.
  if (k == 0)
    return ValidationReport::violation(ZAxiom::Z0, Subset{}, Subset{}, "empty family is not a lattice");

  // join_of[i][j] / meet_of[i][j]: index of the poset join / meet, or -1.
  std::vector<std::vector<int>> join_of(k, std::vector<int>(k, -1));
  std::vector<std::vector<int>> meet_of(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int join = -1, meet = -1;
      for (int u = 0; u < k; ++u) {
        if (!fl[i].set.subset_of(fl[u].set) || !fl[j].set.subset_of(fl[u].set)) continue;
        if (join == -1 || fl[u].set.subset_of(fl[join].set)) join = u;
      }
      if (join >= 0) {
        for (int u = 0; u < k; ++u) {
          if (fl[i].set.subset_of(fl[u].set) && fl[j].set.subset_of(fl[u].set) &&
              !fl[join].set.subset_of(fl[u].set))
            join = -1;  // two incomparable minimal upper bounds
        }
      }
      for (int u = 0; u < k; ++u) {
        if (!fl[u].set.subset_of(fl[i].set) || !fl[u].set.subset_of(fl[j].set)) continue;
        if (meet == -1 || fl[meet].set.subset_of(fl[u].set)) meet = u;
      }
      if (meet >= 0) {
        for (int u = 0; u < k; ++u) {
          if (fl[u].set.subset_of(fl[i].set) && fl[u].set.subset_of(fl[j].set) &&
              !fl[u].set.subset_of(fl[meet].set))
            meet = -1;
        }
      }
      join_of[i][j] = join;
      meet_of[i][j] = meet;
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (join_of[i][j] < 0)
        return ValidationReport::violation(ZAxiom::Z0, fl[i].set, fl[j].set, "pair has no join");
      if (meet_of[i][j] < 0)
        return ValidationReport::violation(ZAxiom::Z0, fl[i].set, fl[j].set, "pair has no meet");
    }
  }

  // (Z1): the least set has rank 0.
  int bottom = 0;
  for (int i = 0; i < k; ++i) bottom = meet_of[bottom][i];
  if (fl[bottom].rank != 0)
    return ValidationReport::violation(ZAxiom::Z1, fl[bottom].set, Subset{},
                                       "least set has rank " + std::to_string(fl[bottom].rank));

  // (Z2): 0 < r(Y) - r(X) < |Y - X| for X properly contained in Y.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || !fl[i].set.proper_subset_of(fl[j].set)) continue;
      const int dr = fl[j].rank - fl[i].rank;
      const int ds = (fl[j].set - fl[i].set).size();
      if (dr <= 0 || dr >= ds)
        return ValidationReport::violation(ZAxiom::Z2, fl[i].set, fl[j].set,
                                           "rank gap " + std::to_string(dr) + " vs |Y-X| = " +
                                               std::to_string(ds));
    }
  }

  // (Z3) on incomparable pairs.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (fl[i].set.subset_of(fl[j].set) || fl[j].set.subset_of(fl[i].set)) continue;
      const RankedSet& join = fl[join_of[i][j]];
      const RankedSet& meet = fl[meet_of[i][j]];
      const int extra = ((fl[i].set & fl[j].set) - meet.set).size();
      if (join.rank + meet.rank + extra > fl[i].rank + fl[j].rank)
        return ValidationReport::violation(ZAxiom::Z3, fl[i].set, fl[j].set,
                                           "semimodular inequality fails");
    }
  }
  return ValidationReport::ok();
}

void ensure_valid(const CyclicFlatMatroid& m) {
  const ValidationReport r = validate_z_axioms(m);
  if (!r.valid)
    throw Error("axiom " + to_string(r.axiom) + " violated by (" + r.witness_x.to_string() + ", " +
                r.witness_y.to_string() + "): " + r.detail);
}

int rank(const CyclicFlatMatroid& m, Subset x) {
  if (!x.subset_of(m.full_set())) throw Error("rank: " + x.to_string() + " not a subset of the ground set");
  if (m.cyclic_flats().empty()) throw Error("rank: matroid has no cyclic flats");
  int best = kMaxGroundSet + 1;
  for (const RankedSet& f : m.cyclic_flats()) best = std::min(best, f.rank + (x - f.set).size());
  return best;
}

int rank(const CyclicFlatMatroid& m) { return rank(m, m.full_set()); }

Subset closure(const CyclicFlatMatroid& m, Subset x) {
  const int rx = rank(m, x);
  Subset cl = x;
  for (int e = 1; e <= m.ground_size(); ++e) {
    if (x.contains(e)) continue;
    Subset xe = x;
    xe.add(e);
    if (rank(m, xe) == rx) cl.add(e);
  }
  return cl;
}

bool is_modular_pair(const CyclicFlatMatroid& m, Subset x, Subset y) {
  return rank(m, x) + rank(m, y) == rank(m, x | y) + rank(m, x & y);
}

CyclicFlatMatroid dual(const CyclicFlatMatroid& m) {
  const int n = m.ground_size();
  const int rm = rank(m);
  std::vector<RankedSet> co;
  co.reserve(m.cyclic_flats().size());
  for (const RankedSet& f : m.cyclic_flats()) {
    const Subset c = f.set.complement_in(n);
    co.emplace_back(c, c.size() - rm + f.rank);
  }
  CyclicFlatMatroid d(n, std::move(co));
  ensure_valid(d);
  return d;
}

std::vector<Subset> direct_components(const CyclicFlatMatroid& m, int budget) {
  check_budget(m.ground_size(), budget, "direct_components");
  std::vector<Subset> out;
  std::vector<std::uint64_t> stack = {m.full_set().mask()};
  while (!stack.empty()) {
    const std::uint64_t s = stack.back();
    stack.pop_back();
    if (s == 0) continue;
    const int rs = rank(m, Subset{s});
    const std::uint64_t lo = s & (~s + 1);
    bool split = false;
    // Proper submasks containing the lowest element of s.
    for (std::uint64_t t = (s - 1) & s; t != 0 && !split; t = (t - 1) & s) {
      if (!(t & lo) || t == s) continue;
      if (rank(m, Subset{t}) + rank(m, Subset{s & ~t}) == rs) {
        stack.push_back(t);
        stack.push_back(s & ~t);
        split = true;
      }
    }
    if (!split) out.push_back(Subset{s});
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) { return Subset::lex_less(a, b); });
  return out;
}

std::vector<std::uint8_t> rank_table(const CyclicFlatMatroid& m, int budget) {
  const int n = m.ground_size();
  check_budget(n, budget, "rank_table");
  if (m.cyclic_flats().empty()) throw Error("rank_table: matroid has no cyclic flats");
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> table(count, std::uint8_t(kMaxGroundSet + 1));
  for (const RankedSet& f : m.cyclic_flats()) {
    const std::uint64_t fm = f.set.mask();
    for (std::size_t x = 0; x < count; ++x) {
      const int v = f.rank + std::popcount(x & ~fm);
      if (v < table[x]) table[x] = static_cast<std::uint8_t>(v);
    }
  }
  return table;
}

std::vector<std::vector<std::uint64_t>> flats_by_rank(const CyclicFlatMatroid& m) {
  const int rm = rank(m);
  std::vector<std::vector<std::uint64_t>> levels(rm + 1);
  levels[0] = {closure(m, Subset{}).mask()};
  for (int k = 0; k < rm; ++k) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t fm : levels[k]) {
      for (int e = 1; e <= m.ground_size(); ++e) {
        if (Subset{fm}.contains(e)) continue;
        Subset g{fm};
        g.add(e);
        next.push_back(closure(m, g).mask());
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels[k + 1] = std::move(next);
  }
  return levels;
}

CyclicFlatMatroid from_rank_oracle(int n, const std::function<int(Subset)>& oracle, int budget) {
  check_budget(n, budget, "from_rank_oracle");
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> table(count);
  for (std::size_t x = 0; x < count; ++x) {
    const int r = oracle(Subset{x});
    if (r < 0 || r > std::popcount(x))
      throw Error("from_rank_oracle: oracle rank " + std::to_string(r) + " outside [0,|X|] at " +
                  Subset{x}.to_string());
    table[x] = static_cast<std::uint8_t>(r);
  }
  if (table[0] != 0) throw Error("from_rank_oracle: oracle gives r(empty) != 0");

  std::vector<RankedSet> flats;
  for (std::size_t x = 0; x < count; ++x) {
    bool keep = true;
    for (int e = 0; e < n && keep; ++e) {
      const std::uint64_t b = std::uint64_t{1} << e;
      if (x & b) {
        if (table[x ^ b] != table[x]) keep = false;  // coloop of the restriction
      } else {
        if (table[x | b] == table[x]) keep = false;  // not closed
      }
    }
    if (keep) flats.emplace_back(Subset{x}, table[x]);
  }

  CyclicFlatMatroid m(n, std::move(flats));
  const ValidationReport rep = validate_z_axioms(m);
  if (!rep.valid)
    throw Error("from_rank_oracle: extracted flats violate " + to_string(rep.axiom) +
                " (not a matroid rank function): " + rep.detail);
  const std::vector<std::uint8_t> rebuilt = rank_table(m, budget);
  for (std::size_t x = 0; x < count; ++x) {
    if (rebuilt[x] != table[x])
      throw Error("from_rank_oracle: oracle disagrees with cyclic-flat rank at " +
                  Subset{x}.to_string() + " (not a matroid rank function)");
  }
  return m;
}

CyclicFlatMatroid relabel(const CyclicFlatMatroid& m, const std::vector<int>& perm) {
  const int n = m.ground_size();
  if (static_cast<int>(perm.size()) != n) throw Error("relabel: permutation size mismatch");
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v]) throw Error("relabel: not a permutation of [n]");
    seen[v] = true;
  }
  std::vector<RankedSet> flats;
  flats.reserve(m.cyclic_flats().size());
  for (const RankedSet& f : m.cyclic_flats()) {
    Subset img;
    for (int e : f.set.elements()) img.add(perm[e - 1]);
    flats.emplace_back(img, f.rank);
  }
  return CyclicFlatMatroid(n, std::move(flats));
}

CyclicFlatMatroid delete_elements(const CyclicFlatMatroid& m, Subset doomed, int budget) {
  const int n = m.ground_size();
  if (!doomed.subset_of(m.full_set())) throw Error("delete_elements: not a subset of the ground set");
  const std::vector<int> kept = (m.full_set() - doomed).elements();
  const int k = static_cast<int>(kept.size());
  check_budget(k, budget, "delete_elements");
  auto embed = [&](Subset y) {
    Subset x;
    for (int e : y.elements()) x.add(kept[e - 1]);
    return x;
  };
  return from_rank_oracle(k, [&](Subset y) { return rank(m, embed(y)); }, budget);
}

}  // namespace matroid
