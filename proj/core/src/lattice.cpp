#include "matroid/lattice.hpp"

#include <algorithm>
#include <map>

namespace matroid {

FiniteLattice::FiniteLattice(std::vector<std::string> ids, const std::vector<std::pair<int, int>>& covers) {
  ids_ = std::move(ids);
  const int k = size();
  if (k == 0) throw Error("lattice: empty node set");
  leq_.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) leq_[i][i] = true;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= k || hi < 0 || hi >= k || lo == hi) throw Error("lattice: bad cover pair");
    leq_[lo][hi] = true;
  }
  // Reflexive-transitive closure (Warshall), then antisymmetry.
  for (int u = 0; u < k; ++u)
    for (int a = 0; a < k; ++a)
      if (leq_[a][u])
        for (int b = 0; b < k; ++b)
          if (leq_[u][b]) leq_[a][b] = true;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (leq_[a][b] && leq_[b][a]) throw Error("lattice: covers contain a cycle");
  build_tables();
}

FiniteLattice FiniteLattice::from_leq(std::vector<std::string> ids, std::vector<std::vector<bool>> leq) {
  FiniteLattice l;
  l.ids_ = std::move(ids);
  l.leq_ = std::move(leq);
  if (l.size() == 0) throw Error("lattice: empty node set");
  for (int a = 0; a < l.size(); ++a) {
    if (!l.leq_[a][a]) throw Error("lattice: relation not reflexive");
    for (int b = 0; b < l.size(); ++b)
      if (a != b && l.leq_[a][b] && l.leq_[b][a]) throw Error("lattice: relation not antisymmetric");
  }
  for (int a = 0; a < l.size(); ++a)
    for (int u = 0; u < l.size(); ++u)
      if (l.leq_[a][u])
        for (int b = 0; b < l.size(); ++b)
          if (l.leq_[u][b] && !l.leq_[a][b]) throw Error("lattice: relation not transitive");
  l.build_tables();
  return l;
}

void FiniteLattice::build_tables() {
  const int k = size();
  meet_.assign(k, std::vector<int>(k, -1));
  join_.assign(k, std::vector<int>(k, -1));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      int join = -1, meet = -1;
      for (int u = 0; u < k; ++u) {
        if (leq_[a][u] && leq_[b][u] && (join == -1 || leq_[u][join])) join = u;
        if (leq_[u][a] && leq_[u][b] && (meet == -1 || leq_[meet][u])) meet = u;
      }
      if (join >= 0)
        for (int u = 0; u < k; ++u)
          if (leq_[a][u] && leq_[b][u] && !leq_[join][u]) join = -1;
      if (meet >= 0)
        for (int u = 0; u < k; ++u)
          if (leq_[u][a] && leq_[u][b] && !leq_[u][meet]) meet = -1;
      if (join < 0 || meet < 0)
        throw Error("not a lattice: nodes '" + ids_[a] + "' and '" + ids_[b] + "' lack a unique " +
                    (join < 0 ? "join" : "meet"));
      join_[a][b] = join;
      meet_[a][b] = meet;
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (int u = 0; u < k; ++u) {
    bottom_ = meet_[bottom_][u];
    top_ = join_[top_][u];
  }
}

int FiniteLattice::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (ids_[i] == id) return i;
  return -1;
}

bool FiniteLattice::is_chain() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (!leq_[a][b] && !leq_[b][a]) return false;
  return true;
}

std::vector<int> FiniteLattice::upper_covers(int v) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u) {
    if (u == v || !leq_[v][u]) continue;
    bool cover = true;
    for (int w = 0; w < size(); ++w)
      if (w != v && w != u && leq_[v][w] && leq_[w][u]) cover = false;
    if (cover) out.push_back(u);
  }
  return out;
}

std::vector<int> FiniteLattice::lower_covers(int v) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u) {
    if (u == v || !leq_[u][v]) continue;
    bool cover = true;
    for (int w = 0; w < size(); ++w)
      if (w != v && w != u && leq_[u][w] && leq_[w][v]) cover = false;
    if (cover) out.push_back(u);
  }
  return out;
}

std::vector<std::pair<int, int>> FiniteLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < size(); ++v)
    for (int u : upper_covers(v)) out.emplace_back(v, u);
  return out;
}

namespace {

void push_u16(std::vector<std::uint8_t>& out, int v) {
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

struct Canonicalizer {
  int k;
  const std::vector<std::vector<int>>& up;     // upper covers
  std::vector<std::vector<int>> down;          // lower covers
  const std::vector<std::array<int, 2>>& labels;
  std::vector<std::uint8_t> best;
  bool have_best = false;

  using Key = std::vector<int>;

  std::vector<int> refine(std::vector<int> colors) const {
    for (;;) {
      std::vector<Key> keys(k);
      for (int v = 0; v < k; ++v) {
        Key key;
        key.push_back(colors[v]);
        std::vector<int> a, b;
        for (int u : up[v]) a.push_back(colors[u]);
        for (int u : down[v]) b.push_back(colors[u]);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        key.push_back(static_cast<int>(a.size()));
        key.insert(key.end(), a.begin(), a.end());
        key.push_back(static_cast<int>(b.size()));
        key.insert(key.end(), b.begin(), b.end());
        keys[v] = std::move(key);
      }
      std::map<Key, int> dense;
      for (const Key& key : keys) dense.emplace(key, 0);
      int next = 0;
      for (auto& kv : dense) kv.second = next++;
      std::vector<int> refined(k);
      bool changed = false;
      for (int v = 0; v < k; ++v) {
        refined[v] = dense[keys[v]];
        if (refined[v] != colors[v]) changed = true;
      }
      if (!changed) return colors;
      colors = std::move(refined);
    }
  }

  std::vector<std::uint8_t> encode(const std::vector<int>& colors) const {
    // Discrete coloring: position of node v is colors[v].
    std::vector<int> at(k);  // position -> node
    for (int v = 0; v < k; ++v) at[colors[v]] = v;
    std::vector<std::uint8_t> out;
    push_u16(out, k);
    for (int p = 0; p < k; ++p) {
      out.push_back(static_cast<std::uint8_t>(labels[at[p]][0]));
      out.push_back(static_cast<std::uint8_t>(labels[at[p]][1]));
    }
    for (int p = 0; p < k; ++p) {
      std::vector<int> nb;
      for (int u : up[at[p]]) nb.push_back(colors[u]);
      std::sort(nb.begin(), nb.end());
      push_u16(out, static_cast<int>(nb.size()));
      for (int q : nb) push_u16(out, q);
    }
    return out;
  }

  void search(std::vector<int> colors) {
    colors = refine(colors);
    int cell = -1;
    for (int c = 0; c < k && cell < 0; ++c) {
      int count = 0;
      for (int v = 0; v < k; ++v)
        if (colors[v] == c) ++count;
      if (count > 1) cell = c;
    }
    if (cell < 0) {
      std::vector<std::uint8_t> enc = encode(colors);
      if (!have_best || enc < best) {
        best = std::move(enc);
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < k; ++v) {
      if (colors[v] != cell) continue;
      std::vector<int> branched(k);
      for (int u = 0; u < k; ++u)
        branched[u] = 2 * colors[u] + ((colors[u] == cell && u != v) ? 1 : 0);
      search(std::move(branched));
    }
  }
};

}  // namespace

std::vector<std::uint8_t> canonical_poset_bytes(int k, const std::vector<std::vector<int>>& upper_covers,
                                                const std::vector<std::array<int, 2>>& labels) {
  Canonicalizer c{k, upper_covers, {}, labels};
  c.down.assign(k, {});
  for (int v = 0; v < k; ++v)
    for (int u : upper_covers[v]) c.down[u].push_back(v);
  std::map<std::array<int, 2>, int> init;
  for (int v = 0; v < k; ++v) init.emplace(labels[v], 0);
  int next = 0;
  for (auto& kv : init) kv.second = next++;
  std::vector<int> colors(k);
  for (int v = 0; v < k; ++v) colors[v] = init[labels[v]];
  c.search(std::move(colors));
  return c.best;
}

bool lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  auto bytes = [](const FiniteLattice& l) {
    std::vector<std::vector<int>> up(l.size());
    for (int v = 0; v < l.size(); ++v) up[v] = l.upper_covers(v);
    std::vector<std::array<int, 2>> labels(l.size(), {0, 0});
    return canonical_poset_bytes(l.size(), up, labels);
  };
  return bytes(a) == bytes(b);
}

ZLattice zlattice(const CyclicFlatMatroid& m) {
  const std::vector<RankedSet>& fl = m.cyclic_flats();
  const int k = static_cast<int>(fl.size());
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) leq[i][j] = fl[i].set.subset_of(fl[j].set);
  std::vector<std::string> ids(k);
  for (int i = 0; i < k; ++i) ids[i] = fl[i].set.to_string();
  FiniteLattice lattice = FiniteLattice::from_leq(std::move(ids), std::move(leq));

  // Cross-check the poset tables against the matroid formulas:
  // A v B = cl(A u B) and A ^ B = (A n B) minus the coloops of M|(A n B).
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const Subset join_set = closure(m, fl[i].set | fl[j].set);
      Subset inter = fl[i].set & fl[j].set;
      Subset meet_set = inter;
      const int ri = rank(m, inter);
      for (int e : inter.elements()) {
        Subset without = inter;
        without.remove(e);
        if (rank(m, without) == ri - 1) meet_set.remove(e);
      }
      if (m.find_flat(join_set) != lattice.join(i, j) ||
          m.find_flat(meet_set) != lattice.meet(i, j))
        throw std::logic_error("zlattice: matroid meet/join disagrees with the poset tables");
    }
  }
  return ZLattice{std::move(lattice), fl};
}

}  // namespace matroid
