#include "matroid/constructions.hpp"

#include <algorithm>
#include <bit>

#include "matroid/invariants.hpp"

namespace matroid {

namespace {

Subset bottom_flat(const CyclicFlatMatroid& m) {
  if (m.cyclic_flats().empty()) throw Error("matroid has no cyclic flats");
  return m.cyclic_flats().front().set;  // canonical order puts the least set first
}

}  // namespace

CyclicFlatMatroid principal_extension(const CyclicFlatMatroid& m, Subset x, int budget) {
  const int n = m.ground_size();
  if (!x.subset_of(m.full_set())) throw Error("principal_extension: X not a subset of the ground set");
  if (n + 1 > kMaxGroundSet) throw Error("principal_extension: ground set full");
  const std::vector<std::uint8_t> base = rank_table(m, budget);
  const std::uint64_t xm = x.mask();
  const std::uint64_t top = std::uint64_t{1} << n;
  auto oracle = [&](Subset s) -> int {
    const std::uint64_t y = s.mask() & (top - 1);
    if (!(s.mask() & top)) return base[y];
    const bool spanned = base[y | xm] == base[y];
    return base[y] + (spanned ? 0 : 1);
  };
  return from_rank_oracle(n + 1, oracle, budget);
}

std::variant<CyclicFlatMatroid, HypothesisFailure> twofilters(const CyclicFlatMatroid& m, int x, int y) {
  const int n = m.ground_size();
  if (x < 1 || x > n || y < 1 || y > n || x == y) throw Error("twofilters: need distinct elements of [n]");
  ensure_valid(m);

  std::vector<RankedSet> only_x, only_y, rest;
  for (const RankedSet& f : m.cyclic_flats()) {
    const bool hx = f.set.contains(x), hy = f.set.contains(y);
    if (hx && !hy)
      only_x.push_back(f);
    else if (hy && !hx)
      only_y.push_back(f);
    if (!(hy && !hx)) rest.push_back(f);
  }
  if (only_x.empty() || only_y.empty()) {
    HypothesisFailure fail;
    fail.clause = 1;
    fail.detail = std::string("Z_") + std::to_string(only_x.empty() ? x : y) + " - Z_" +
                  std::to_string(only_x.empty() ? y : x) + " is empty";
    return fail;
  }
  for (const RankedSet& fx : only_x) {
    for (const RankedSet& fy : only_y) {
      if (is_modular_pair(m, fx.set, fy.set)) {
        HypothesisFailure fail;
        fail.clause = 2;
        fail.witness_x = fx.set;
        fail.witness_y = fy.set;
        fail.detail = "modular cross pair";
        return fail;
      }
    }
  }

  std::vector<RankedSet> flats = rest;
  for (const RankedSet& fy : only_y) {
    Subset moved = fy.set;
    moved.remove(y);
    moved.add(x);
    for (const RankedSet& f : flats)
      if (f.set == moved)
        throw std::logic_error("twofilters: swapped flat collides with an existing cyclic flat");
    flats.emplace_back(moved, fy.rank);
  }
  CyclicFlatMatroid out(n, std::move(flats));
  const ValidationReport rep = validate_z_axioms(out);
  if (!rep.valid)
    throw std::logic_error("twofilters: constructed family violates " + to_string(rep.axiom));
  return out;
}

namespace {

CyclicFlatMatroid lpm_witness_impl(const Diagram& d, bool allow_dualizing) {
  const auto mixed = mixed_pairs(d);
  if (mixed.empty()) throw Error("lpm_witness: diagram has no mixed pair");

  const std::pair<CornerFlat, CornerFlat>* best = nullptr;
  for (const auto& pr : mixed) {
    if (pr.first.endpoint >= pr.second.endpoint) continue;  // overlapping pair
    if (!best || pr.second.endpoint - pr.first.endpoint <
                     best->second.endpoint - best->first.endpoint)
      best = &pr;
  }
  if (best) {
    auto result = twofilters(lpm_matroid(d), best->first.endpoint, best->second.endpoint);
    if (!std::holds_alternative<CyclicFlatMatroid>(result))
      throw std::logic_error("lpm_witness: two-filters hypotheses fail on a minimal mixed pair");
    return std::get<CyclicFlatMatroid>(result);
  }
  // Only overlapping mixed pairs: their complements are disjoint mixed pairs
  // of the dual diagram.
  if (!allow_dualizing) throw std::logic_error("lpm_witness: dual diagram has no disjoint mixed pair");
  return dual(lpm_witness_impl(transform(d, DiagramTransform::DualFlip), false));
}

}  // namespace

CyclicFlatMatroid lpm_witness(const Diagram& d) {
  if (!is_connected(d)) throw Error("lpm_witness: diagram is not connected");
  return lpm_witness_impl(d, true);
}

ConedMatroid free_m_cone(const CyclicFlatMatroid& m, int m_points) {
  ensure_valid(m);
  if (m_points < 1) throw Error("free_m_cone: m must be positive");
  if (!bottom_flat(m).empty()) throw Error("free_m_cone: matroid has loops");
  const int n = m.ground_size();
  const int total = n + 1 + n * m_points;
  if (total > kMaxGroundSet)
    throw Error("free_m_cone: cone needs " + std::to_string(total) + " elements (max " +
                std::to_string(kMaxGroundSet) + ")");
  const int tip = n + 1;
  auto cone_points = [&](int e) {
    return Subset::interval(n + 1 + (e - 1) * m_points + 1, n + 1 + e * m_points);
  };

  std::vector<RankedSet> flats = m.cyclic_flats();
  for (const auto& level : flats_by_rank(m)) {
    for (std::uint64_t fmask : level) {
      const Subset f{fmask};
      if (f.empty()) continue;
      Subset u = f;
      u.add(tip);
      for (int e : f.elements()) u = u | cone_points(e);
      flats.emplace_back(u, rank(m, f) + 1);
    }
  }
  CyclicFlatMatroid q(total, std::move(flats));
  ensure_valid(q);
  return ConedMatroid{std::move(q), tip, Subset::full(n)};
}

CyclicFlatMatroid free_m_cone_by_extensions(const CyclicFlatMatroid& m, int m_points, int budget) {
  ensure_valid(m);
  if (m_points < 1) throw Error("free_m_cone_by_extensions: m must be positive");
  if (!bottom_flat(m).empty()) throw Error("free_m_cone_by_extensions: matroid has loops");
  const int n = m.ground_size();
  const int total = n + 1 + n * m_points;
  if (total > budget)
    throw Error("free_m_cone_by_extensions: budget exceeded (need " + std::to_string(total) + ")");
  const int tip = n + 1;
  // Adding a coloop leaves the cyclic flats untouched.
  CyclicFlatMatroid q(n + 1, m.cyclic_flats());
  for (int e = 1; e <= n; ++e)
    for (int t = 0; t < m_points; ++t) q = principal_extension(q, Subset::of({tip, e}), budget);
  return q;
}

CyclicFlatMatroid tipless(const ConedMatroid& q, int budget) {
  return delete_elements(q.matroid, Subset::single(q.tip), budget);
}

CyclicFlatMatroid baseless(const ConedMatroid& q, int budget) {
  return delete_elements(q.matroid, q.base, budget);
}

CyclicFlatMatroid tipless_baseless(const ConedMatroid& q, int budget) {
  Subset doomed = q.base;
  doomed.add(q.tip);
  return delete_elements(q.matroid, doomed, budget);
}

CyclicFlatMatroid parallel_blowup(const CyclicFlatMatroid& m, int k, int budget) {
  ensure_valid(m);
  if (k < 1) throw Error("parallel_blowup: k must be positive");
  const int n = m.ground_size();
  const int total = (k + 1) * n;
  if (total > budget)
    throw Error("parallel_blowup: budget exceeded (need " + std::to_string(total) + ")");
  const std::vector<std::uint8_t> base = n <= budget ? rank_table(m, budget) : std::vector<std::uint8_t>{};
  std::vector<std::uint64_t> cls(n + 1, 0);
  for (int e = 1; e <= n; ++e)
    cls[e] = Subset::single(e).mask() | Subset::interval(n + (e - 1) * k + 1, n + e * k).mask();
  auto oracle = [&](Subset s) -> int {
    std::uint64_t proj = 0;
    for (int e = 1; e <= n; ++e)
      if (s.mask() & cls[e]) proj |= std::uint64_t{1} << (e - 1);
    return base[proj];
  };
  return from_rank_oracle(total, oracle, budget);
}

std::pair<CyclicFlatMatroid, CyclicFlatMatroid> diffconfig_pair(int b, int k) {
  if (b < 1 || k < 1) throw Error("diffconfig_pair: b and k must be positive");
  const int n = 4 * (b + k);
  if (n > kEnumerationBudget)
    throw Error("diffconfig_pair: 4(b+k) = " + std::to_string(n) + " exceeds the enumeration budget");
  const std::string eb(b, 'E'), nk(k, 'N'), tail(2 * b + k, 'E');
  const Diagram d = make_diagram(nk + eb + nk + eb + nk + tail, tail + nk + eb + nk + eb + nk);
  CyclicFlatMatroid m = lpm_matroid(d);

  auto block = [&](int i) { return Subset::interval((i - 1) * (b + k) + 1, i * (b + k)); };
  const Subset w = block(1), xx = block(2), yy = block(3), z = block(4);
  std::vector<RankedSet> flats;
  flats.emplace_back(Subset{}, 0);
  flats.emplace_back(w, k);
  flats.emplace_back(z, k);
  flats.emplace_back(w | z, 2 * k);
  flats.emplace_back(w | xx, 2 * k);
  flats.emplace_back(w | yy, 2 * k);
  flats.emplace_back(Subset::full(n), 3 * k);
  CyclicFlatMatroid mprime(n, std::move(flats));
  ensure_valid(mprime);
  return {std::move(m), std::move(mprime)};
}

std::pair<CyclicFlatMatroid, CyclicFlatMatroid> tipless_counterexample() {
  const CyclicFlatMatroid u34(4, {RankedSet(Subset{}, 0), RankedSet(Subset::full(4), 3)});
  const CyclicFlatMatroid a = tipless(free_m_cone(u34, 2));

  // Elements w,w',x,x',y,y',z,z',a,b,c,d as 1..12.
  const Subset W = Subset::of({1, 2}), X = Subset::of({3, 4}), Y = Subset::of({5, 6}),
               Z = Subset::of({7, 8});
  const int ea = 9, eb = 10, ec = 11, ed = 12;
  std::vector<RankedSet> flats;
  flats.emplace_back(Subset{}, 0);
  auto line = [&](Subset pair) {
    Subset s = pair;
    s.add(ea);
    return s;
  };
  flats.emplace_back(line(W), 2);
  flats.emplace_back(line(X), 2);
  flats.emplace_back(line(Y), 2);
  flats.emplace_back(line(Z), 2);
  auto plane = [&](Subset p1, Subset p2, int extra) {
    Subset s = p1 | p2;
    s.add(ea);
    s.add(extra);
    return s;
  };
  flats.emplace_back(plane(W, X, eb), 3);
  flats.emplace_back(plane(W, Y, ec), 3);
  flats.emplace_back(plane(W, Z, ed), 3);
  flats.emplace_back(plane(X, Y, ed), 3);
  flats.emplace_back(plane(X, Z, ec), 3);
  flats.emplace_back(plane(Y, Z, eb), 3);
  flats.emplace_back(Subset::of({1, 3, 5, 7}), 3);
  flats.emplace_back(Subset::full(12), 4);
  CyclicFlatMatroid n(12, std::move(flats));
  ensure_valid(n);
  return {std::move(a), std::move(n)};
}

LatticeRealization lattice_to_transversal(const FiniteLattice& l, bool drop_loop) {
  const int k = l.size();
  std::vector<int> v_size(k, 0);  // |V_z| = #{y : y not >= z}
  for (int z = 0; z < k; ++z)
    for (int y = 0; y < k; ++y)
      if (!l.leq(z, y)) ++v_size[z];

  int n = 0;
  std::vector<Subset> block(k);
  for (int z = 0; z < k; ++z) {
    block[z] = Subset::interval(n + 1, n + v_size[z] + 1);
    n += v_size[z] + 1;
  }
  if (n > kMaxGroundSet)
    throw Error("lattice_to_transversal: needs " + std::to_string(n) + " elements (max " +
                std::to_string(kMaxGroundSet) + ")");

  std::vector<Subset> flat_of_node(k);
  std::vector<RankedSet> flats;
  for (int z = 0; z < k; ++z) {
    Subset f;
    for (int y = 0; y < k; ++y)
      if (l.leq(y, z)) f = f | block[y];
    flat_of_node[z] = f;
    flats.emplace_back(f, v_size[z]);
  }
  SetSystem pres;
  pres.n = n;
  for (int y = 0; y < k; ++y) {
    if (y == l.top()) continue;
    Subset a;
    for (int z = 0; z < k; ++z)
      if (!l.leq(z, y)) a = a | block[z];
    pres.sets.push_back(a);
  }
  CyclicFlatMatroid m(n, flats);
  ensure_valid(m);

  for (int z = 0; z < k; ++z) {
    for (int x = 0; x < k; ++x)
      if ((flat_of_node[z] & flat_of_node[x]) != flat_of_node[l.meet(z, x)])
        throw std::logic_error("lattice_to_transversal: F_z n F_x != F_{z meet x}");
    if (transversal_rank(pres, flat_of_node[z]) != v_size[z])
      throw std::logic_error("lattice_to_transversal: presentation rank mismatch on F_z");
  }
  // Full oracle cross-check where the subset budget allows it.
  if (n <= 20 && matroid_of(pres, n) != m)
    throw std::logic_error("lattice_to_transversal: presentation matroid differs from the direct flats");

  if (drop_loop) {
    const int loop = block[l.bottom()].min_element();
    std::vector<RankedSet> reduced;
    for (const RankedSet& f : flats) {
      Subset s;
      for (int e : f.set.elements())
        if (e != loop) s.add(e > loop ? e - 1 : e);
      reduced.emplace_back(s, f.rank);
    }
    std::vector<Subset> sets;
    for (const Subset& a : pres.sets) {
      Subset s;
      for (int e : a.elements())
        if (e != loop) s.add(e > loop ? e - 1 : e);
      sets.push_back(s);
    }
    for (int z = 0; z < k; ++z) {
      Subset s;
      for (int e : flat_of_node[z].elements())
        if (e != loop) s.add(e > loop ? e - 1 : e);
      flat_of_node[z] = s;
    }
    CyclicFlatMatroid md(n - 1, std::move(reduced));
    ensure_valid(md);
    return LatticeRealization{SetSystem{n - 1, std::move(sets)}, std::move(md),
                              std::move(flat_of_node)};
  }
  return LatticeRealization{std::move(pres), std::move(m), std::move(flat_of_node)};
}

namespace {

CyclicFlatMatroid extend_with_top(const CyclicFlatMatroid& m) {
  const int n = m.ground_size();
  if (n + 2 > kMaxGroundSet) throw Error("extend_with_top: ground set full");
  std::vector<RankedSet> flats = m.cyclic_flats();
  flats.emplace_back(Subset::full(n + 2), rank(m) + 1);
  CyclicFlatMatroid out(n + 2, std::move(flats));
  ensure_valid(out);
  return out;
}

}  // namespace

std::pair<CyclicFlatMatroid, CyclicFlatMatroid> theorem71_pair(const FiniteLattice& l) {
  if (l.is_chain()) throw Error("theorem71_pair: lattice is a chain");

  // Strip the top chain until the top covers at least two nodes.
  std::vector<bool> alive(l.size(), true);
  int top = l.top();
  int stripped = 0;
  for (;;) {
    std::vector<int> covered;
    for (int u : l.lower_covers(top))
      if (alive[u]) covered.push_back(u);
    if (covered.size() >= 2) break;
    if (covered.size() != 1) throw std::logic_error("theorem71_pair: stripped lattice collapsed");
    alive[top] = false;
    top = covered[0];
    ++stripped;
  }

  std::vector<int> keep;
  for (int i = 0; i < l.size(); ++i)
    if (alive[i]) keep.push_back(i);
  std::vector<std::string> ids;
  for (int i : keep) ids.push_back(l.ids()[i]);
  std::vector<std::vector<bool>> leq(keep.size(), std::vector<bool>(keep.size(), false));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) leq[a][b] = l.leq(keep[a], keep[b]);
  const FiniteLattice sub = FiniteLattice::from_leq(std::move(ids), std::move(leq));

  const LatticeRealization base = lattice_to_transversal(sub);
  const std::vector<int> coatoms = sub.lower_covers(sub.top());
  if (coatoms.size() < 2) throw std::logic_error("theorem71_pair: top no longer covers two nodes");

  // e in S_z and f in S_w for two covers z and w of the top; S_z is F_z
  // minus the flats strictly below z.
  auto block_of = [&](int z) {
    Subset s = base.flat_of_node[z];
    for (int u = 0; u < sub.size(); ++u)
      if (u != z && sub.leq(u, z)) s = s - base.flat_of_node[u];
    return s;
  };
  const int e = block_of(coatoms[0]).min_element();
  const int f = block_of(coatoms[1]).min_element();
  auto swapped = twofilters(base.matroid, e, f);
  if (!std::holds_alternative<CyclicFlatMatroid>(swapped))
    throw std::logic_error("theorem71_pair: two-filters hypotheses fail on coatom blocks");

  CyclicFlatMatroid m = base.matroid;
  CyclicFlatMatroid mprime = std::get<CyclicFlatMatroid>(swapped);
  for (int s = 0; s < stripped; ++s) {
    m = extend_with_top(m);
    mprime = extend_with_top(mprime);
  }
  return {std::move(m), std::move(mprime)};
}

}  // namespace matroid
