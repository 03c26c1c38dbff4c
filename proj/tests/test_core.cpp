#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "matroid/lattice.hpp"
#include "matroid/lpm.hpp"
#include "matroid/matroid.hpp"
#include "matroid/transversal.hpp"

using namespace matroid;

TEST_CASE("subset algebra") {
  const Subset a = Subset::of({1, 2, 5});
  CHECK(a.size() == 3);
  CHECK(a.contains(5));
  CHECK(!a.contains(3));
  CHECK((a | Subset::of({3})) == Subset::of({1, 2, 3, 5}));
  CHECK((a & Subset::interval(2, 5)) == Subset::of({2, 5}));
  CHECK((a - Subset::of({2})) == Subset::of({1, 5}));
  CHECK(a.complement_in(6) == Subset::of({3, 4, 6}));
  CHECK(Subset::interval(3, 2).empty());
  CHECK(Subset::full(4) == Subset::of({1, 2, 3, 4}));

  CHECK(Subset::lex_less(Subset{}, Subset::of({1})));
  CHECK(Subset::lex_less(Subset::of({1}), Subset::of({1, 2})));
  CHECK(Subset::lex_less(Subset::of({1, 2, 3}), Subset::of({1, 3})));
  CHECK(Subset::lex_less(Subset::of({1}), Subset::of({2})));
  CHECK(!Subset::lex_less(Subset::of({2}), Subset::of({1})));
}

TEST_CASE("z-axiom validation") {
  CHECK(validate_z_axioms(fixtures::pair_m()).valid);

  SUBCASE("single non-loop flat fails Z2") {
    const ValidationReport r = validate_z_axioms(1, {RankedSet(Subset{}, 0), RankedSet(Subset::of({1}), 1)});
    REQUIRE(!r.valid);
    CHECK(r.axiom == ZAxiom::Z2);
  }

  SUBCASE("diamond with oversized top rank fails Z2 at the least witness") {
    const ValidationReport r =
        validate_z_axioms(4, {RankedSet(Subset{}, 0), RankedSet(Subset::of({1, 2}), 1),
                              RankedSet(Subset::of({3, 4}), 1), RankedSet(Subset::full(4), 3)});
    REQUIRE(!r.valid);
    CHECK(r.axiom == ZAxiom::Z2);
    CHECK(r.witness_x == Subset::of({1, 2}));
    CHECK(r.witness_y == Subset::full(4));
  }

  SUBCASE("missing join fails Z0") {
    const ValidationReport r =
        validate_z_axioms(4, {RankedSet(Subset{}, 0), RankedSet(Subset::of({1, 2}), 1),
                              RankedSet(Subset::of({2, 3}), 1)});
    REQUIRE(!r.valid);
    CHECK(r.axiom == ZAxiom::Z0);
  }

  SUBCASE("bad bottom rank fails Z1") {
    const ValidationReport r = validate_z_axioms(3, {RankedSet(Subset::of({1, 2, 3}), 2)});
    REQUIRE(!r.valid);
    CHECK(r.axiom == ZAxiom::Z1);
  }

  SUBCASE("Z3 catches a non-semimodular diamond") {
    // Two 4-sets sharing two elements, both rank 2, over an empty bottom:
    // join rank 3 + meet rank 0 + |(X n Y) - meet| = 2 exceeds 2 + 2.
    const ValidationReport r = validate_z_axioms(
        6, {RankedSet(Subset{}, 0), RankedSet(Subset::of({1, 2, 3, 4}), 2),
            RankedSet(Subset::of({3, 4, 5, 6}), 2), RankedSet(Subset::full(6), 3)});
    REQUIRE(!r.valid);
    CHECK(r.axiom == ZAxiom::Z3);
  }

  SUBCASE("structural errors throw") {
    CHECK_THROWS_AS(validate_z_axioms(2, {RankedSet(Subset::of({1}), 1), RankedSet(Subset::of({1}), 1)}),
                    Error);
    CHECK_THROWS_AS(CyclicFlatMatroid(65, {}), Error);
    CHECK_THROWS_AS(RankedSet(Subset::of({1, 2}), 3), Error);
  }
}

TEST_CASE("rank via the cyclic-flat minimum") {
  const CyclicFlatMatroid m = fixtures::running_matroid();
  CHECK(rank(m, Subset::full(9)) == 5);
  CHECK(rank(m, Subset{}) == 0);
  CHECK(rank(m, Subset::of({1, 2, 3, 4})) == 3);
  CHECK(rank(m) == 5);
}

TEST_CASE("closure") {
  const CyclicFlatMatroid m = fixtures::running_matroid();
  CHECK(closure(m, Subset::of({1, 2})) == Subset::of({1, 2, 3}));
  CHECK(closure(m, Subset::full(9)) == Subset::full(9));
  CHECK(closure(fixtures::pair_m(), Subset::of({4, 5})) == Subset::of({4, 5, 6}));
}

TEST_CASE("zlattice meets and joins") {
  SUBCASE("diamond") {
    const ZLattice z = zlattice(fixtures::pair_m());
    CHECK(z.lattice.size() == 4);
    CHECK(z.lattice.upper_covers(z.lattice.bottom()).size() == 2);
  }
  SUBCASE("nested matroid gives a chain") {
    const CyclicFlatMatroid m(4, {RankedSet(Subset{}, 0), RankedSet(Subset::interval(1, 2), 1),
                                  RankedSet(Subset::interval(1, 4), 2)});
    const ZLattice z = zlattice(m);
    CHECK(z.lattice.size() == 3);
    CHECK(z.lattice.is_chain());
  }
  SUBCASE("running example: [6] meet ([3] u [7,9]) = [3]") {
    const CyclicFlatMatroid m = fixtures::running_matroid();
    const ZLattice z = zlattice(m);
    CHECK(z.lattice.size() == 7);
    const int a = m.find_flat(Subset::interval(1, 6));
    const int b = m.find_flat(Subset::interval(1, 3) | Subset::interval(7, 9));
    CHECK(z.nodes[z.lattice.meet(a, b)].set == Subset::interval(1, 3));
  }
}

TEST_CASE("dual") {
  SUBCASE("U_{1,2} is self-dual") {
    const CyclicFlatMatroid u12 = fixtures::uniform(1, 2);
    CHECK(dual(u12) == u12);
  }
  SUBCASE("dual flat sizes of the figure matroid") {
    const CyclicFlatMatroid d = dual(fixtures::pair_m());
    std::vector<int> sizes;
    for (const RankedSet& f : d.cyclic_flats()) sizes.push_back(f.set.size());
    CHECK(sizes == std::vector<int>{0, 3, 3, 6});
  }
  SUBCASE("involution and LPM transpose") {
    const CyclicFlatMatroid m = fixtures::running_matroid();
    CHECK(dual(dual(m)) == m);
    const Diagram flipped = transform(fixtures::running_diagram(), DiagramTransform::DualFlip);
    CHECK(lpm_matroid(flipped) == dual(m));
  }
}

TEST_CASE("from_rank_oracle") {
  SUBCASE("uniform oracle") {
    auto oracle = [](Subset x) { return std::min(x.size(), 2); };
    CHECK(from_rank_oracle(3, oracle) == fixtures::uniform(2, 3));
  }
  SUBCASE("running example matching oracle recovers the pictured flats") {
    const SetSystem pres = path_presentation(fixtures::running_diagram());
    const CyclicFlatMatroid m =
        from_rank_oracle(9, [&](Subset x) { return transversal_rank(pres, x); });
    CHECK(m == fixtures::running_matroid());
  }
  SUBCASE("prism has three 4-element rank-3 planes") {
    const CyclicFlatMatroid m = matroid_of(fixtures::prism_presentation());
    int planes = 0;
    for (const RankedSet& f : m.cyclic_flats()) planes += (f.set.size() == 4 && f.rank == 3);
    CHECK(planes == 3);
  }
  SUBCASE("non-matroid oracle is rejected") {
    auto bogus = [](Subset x) { return x.size() == 2 ? 1 : std::min(x.size(), 2); };
    CHECK_THROWS_AS(from_rank_oracle(3, bogus), Error);
  }
  SUBCASE("budget") { CHECK_THROWS_AS(from_rank_oracle(23, [](Subset) { return 0; }), Error); }
}

TEST_CASE("from_rank_oracle o rank is the identity") {
  for (const CyclicFlatMatroid& m :
       {fixtures::pair_m(), fixtures::pair_m_prime(), fixtures::running_matroid(),
        fixtures::uniform(2, 4), fixtures::three_lines_m()}) {
    CHECK(from_rank_oracle(m.ground_size(), [&](Subset x) { return rank(m, x); }) == m);
  }
}

TEST_CASE("modular pairs") {
  const CyclicFlatMatroid m = fixtures::running_matroid();
  CHECK(is_modular_pair(m, Subset::interval(1, 3), Subset::interval(7, 9)));
  CHECK(!is_modular_pair(m, Subset::interval(1, 6), Subset::interval(7, 9)));
  CHECK(is_modular_pair(m, Subset::of({2, 4}), Subset::of({2, 4})));
}

TEST_CASE("direct components") {
  SUBCASE("figure matroid is connected") {
    const std::vector<Subset> comps = direct_components(fixtures::pair_m());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == Subset::full(6));
  }
  SUBCASE("free matroid splits into singletons") {
    const CyclicFlatMatroid free2(2, {RankedSet(Subset{}, 0)});
    CHECK(direct_components(free2).size() == 2);
  }
  SUBCASE("running example is connected") {
    CHECK(direct_components(fixtures::running_matroid()).size() == 1);
  }
}

TEST_CASE("rank function laws on small matroids") {
  std::mt19937_64 rng(0);
  for (const CyclicFlatMatroid& m :
       {fixtures::pair_m(), fixtures::running_matroid(), matroid_of(fixtures::prism_presentation())}) {
    const int n = m.ground_size();
    const std::vector<std::uint8_t> table = rank_table(m);
    // unit increase + monotonicity
    for (std::uint64_t x = 0; x < table.size(); ++x) {
      CHECK(table[x] <= Subset{x}.size());
      for (int e = 1; e <= n; ++e) {
        if (Subset{x}.contains(e)) continue;
        const std::uint64_t xe = x | Subset::single(e).mask();
        CHECK(table[xe] >= table[x]);
        CHECK(table[xe] <= table[x] + 1);
      }
    }
    // submodularity on random pairs
    for (int t = 0; t < 2000; ++t) {
      const Subset x{rng() & (Subset::full(n).mask())};
      const Subset y{rng() & (Subset::full(n).mask())};
      CHECK(table[(x | y).mask()] + table[(x & y).mask()] <= table[x.mask()] + table[y.mask()]);
    }
  }
}

TEST_CASE("relabel and delete") {
  const CyclicFlatMatroid m = fixtures::pair_m();
  const std::vector<int> swap14 = {4, 2, 3, 1, 5, 6};
  const CyclicFlatMatroid r = relabel(m, swap14);
  CHECK(r.find_flat(Subset::of({2, 3, 4})) >= 0);
  CHECK(relabel(r, swap14) == m);

  const CyclicFlatMatroid d = delete_elements(fixtures::running_matroid(), Subset::of({9}));
  CHECK(d.ground_size() == 8);
  CHECK(rank(d) == 5);
}
