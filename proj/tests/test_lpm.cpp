#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "matroid/enumeration.hpp"
#include "matroid/invariants.hpp"
#include "matroid/lpm.hpp"

using namespace matroid;

namespace {

Diagram random_diagram(int size, std::mt19937_64& rng) {
  const std::vector<Diagram> all = diagrams_of_size(size);
  return all[rng() % all.size()];
}

const CornerFlat* corner_with(const std::vector<CornerFlat>& corners, CornerKind kind, int endpoint) {
  for (const CornerFlat& c : corners)
    if (c.kind == kind && c.endpoint == endpoint) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("diagram validation") {
  CHECK(!is_connected(make_diagram("NE", "NE")));  // coinciding paths touch everywhere
  CHECK_THROWS_AS(make_diagram("NE", "EN "), Error);
  CHECK_THROWS_AS(make_diagram("NNE", "EN"), Error);
  CHECK_THROWS_AS(make_diagram("ENE", "NEE"), Error);  // lower rises above upper
  CHECK(is_connected(fixtures::running_diagram()));
  CHECK(!is_connected(make_diagram("NENE", "ENEN")));
  CHECK(split_components(make_diagram("NENE", "ENEN")).size() == 2);
}

TEST_CASE("path presentation") {
  SUBCASE("running example intervals") {
    const SetSystem a = path_presentation(fixtures::running_diagram());
    REQUIRE(a.sets.size() == 5);
    CHECK(a.sets[0] == Subset::interval(1, 3));
    CHECK(a.sets[1] == Subset::interval(2, 5));
    CHECK(a.sets[2] == Subset::interval(4, 6));
    CHECK(a.sets[3] == Subset::interval(5, 8));
    CHECK(a.sets[4] == Subset::interval(7, 9));
  }
  SUBCASE("single square") {
    const SetSystem a = path_presentation(make_diagram("NE", "EN"));
    REQUIRE(a.sets.size() == 1);
    CHECK(a.sets[0] == Subset::of({1, 2}));
  }
  SUBCASE("U_{2,4}") {
    const SetSystem a = path_presentation(make_diagram("NNEE", "EENN"));
    REQUIRE(a.sets.size() == 2);
    CHECK(a.sets[0] == Subset::interval(1, 3));
    CHECK(a.sets[1] == Subset::interval(2, 4));
    CHECK(lpm_matroid(make_diagram("NNEE", "EENN")) == fixtures::uniform(2, 4));
  }
}

TEST_CASE("lpm matroids") {
  CHECK(lpm_matroid(fixtures::running_diagram()) == fixtures::running_matroid());
  const auto [dm, dmp] = std::pair{make_diagram("NENENEEE", "EEENENEN"), 0};
  (void)dmp;
  const CyclicFlatMatroid m = lpm_matroid(dm);
  // Fig. lattice of the b=k=1 staircase.
  CHECK(m == CyclicFlatMatroid(
                 8, {RankedSet(Subset{}, 0), RankedSet(Subset::interval(1, 2), 1),
                     RankedSet(Subset::of({7, 8}), 1), RankedSet(Subset::interval(1, 4), 2),
                     RankedSet(Subset::of({1, 2, 7, 8}), 2), RankedSet(Subset::interval(5, 8), 2),
                     RankedSet(Subset::full(8), 3)}));
}

TEST_CASE("corner flats") {
  SUBCASE("running example corners") {
    const auto corners = corner_flats(fixtures::running_diagram());
    REQUIRE(corners.size() == 4);
    const CornerFlat* i3 = corner_with(corners, CornerKind::Initial, 3);
    REQUIRE(i3);
    CHECK(i3->interval == Subset::interval(1, 3));
    CHECK(i3->x == 1);
    CHECK(i3->y == 2);
    const CornerFlat* i6 = corner_with(corners, CornerKind::Initial, 6);
    REQUIRE(i6);
    CHECK(i6->x == 2);
    CHECK(i6->y == 4);
    const CornerFlat* f4 = corner_with(corners, CornerKind::Final, 4);
    REQUIRE(f4);
    CHECK(f4->interval == Subset::interval(4, 9));
    CHECK(f4->x == 2);
    CHECK(f4->y == 1);
    const CornerFlat* f7 = corner_with(corners, CornerKind::Final, 7);
    REQUIRE(f7);
    CHECK(f7->x == 3);
    CHECK(f7->y == 3);
  }
  SUBCASE("uniform matroids have no corners") {
    CHECK(corner_flats(make_diagram("NNEE", "EENN")).empty());
  }
  SUBCASE("diffconfig b=k=1 corners") {
    const auto corners = corner_flats(make_diagram("NENENEEE", "EEENENEN"));
    REQUIRE(corners.size() == 4);
    CHECK(corner_with(corners, CornerKind::Initial, 2));
    CHECK(corner_with(corners, CornerKind::Initial, 4));
    CHECK(corner_with(corners, CornerKind::Final, 5));
    CHECK(corner_with(corners, CornerKind::Final, 7));
  }
  SUBCASE("disconnected diagrams are rejected") {
    CHECK_THROWS_AS(corner_flats(make_diagram("NENE", "ENEN")), Error);
  }
}

TEST_CASE("mixed pairs") {
  SUBCASE("running example has exactly the two pairs") {
    const auto mixed = mixed_pairs(fixtures::running_diagram());
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0].first.endpoint == 3);
    CHECK(mixed[0].second.endpoint == 4);
    CHECK(mixed[1].first.endpoint == 6);
    CHECK(mixed[1].second.endpoint == 7);
  }
  SUBCASE("uniform") { CHECK(mixed_pairs(make_diagram("NNEE", "EENN")).empty()); }
}

TEST_CASE("modular corner pairs agree with the rank definition and mixedness") {
  for (int size = 2; size <= 6; ++size) {
    for (const Diagram& d : diagrams_of_size(size)) {
      const CyclicFlatMatroid m = lpm_matroid(d);
      const auto corners = corner_flats(d);
      for (const CornerFlat& a : corners) {
        if (a.kind != CornerKind::Initial) continue;
        for (const CornerFlat& b : corners) {
          if (b.kind != CornerKind::Final) continue;
          const bool counted = is_modular_corner_pair(d, a, b);
          const bool modular = is_modular_pair(m, a.interval, b.interval);
          const bool mixed = a.x < b.x && a.y > b.y;
          CHECK(counted == modular);
          CHECK(modular == !mixed);
        }
      }
    }
  }
}

TEST_CASE("fundamental diagrams") {
  CHECK(!is_fundamental(fixtures::running_diagram()));
  CHECK(is_fundamental(make_diagram("NNEE", "EENN")));
  CHECK(!is_fundamental(make_diagram("NENENEEE", "EEENENEN")));
  // Disconnected: each component checked separately.
  CHECK(is_fundamental(make_diagram("NENE", "ENEN")));
}

TEST_CASE("rook presentations") {
  SUBCASE("running diagram") {
    const SetSystem a = rook_presentation(fixtures::running_diagram());
    REQUIRE(a.sets.size() == 5);
    CHECK(a.sets[0] == Subset::of({1, 6, 7}));
    CHECK(a.sets[1] == Subset::of({2, 6, 7, 8}));
    CHECK(a.sets[2] == Subset::of({3, 7, 8}));
    CHECK(a.sets[3] == Subset::of({4, 7, 8, 9}));
    CHECK(a.sets[4] == Subset::of({5, 8, 9}));
  }
  SUBCASE("single square") {
    const SetSystem a = rook_presentation(make_diagram("NE", "EN"));
    REQUIRE(a.sets.size() == 1);
    CHECK(a.sets[0] == Subset::of({1, 2}));
  }
  SUBCASE("2x2 block") {
    const SetSystem a = rook_presentation(make_diagram("NNEE", "EENN"));
    REQUIRE(a.sets.size() == 2);
    CHECK(a.sets[0] == Subset::of({1, 3, 4}));
    CHECK(a.sets[1] == Subset::of({2, 3, 4}));
  }
  SUBCASE("rook matroids are fundamental by construction") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      const Diagram d = random_diagram(2 + static_cast<int>(rng() % 5), rng);
      const SetSystem a = rook_presentation(d);
      const int r = static_cast<int>(a.sets.size());
      for (int i = 1; i <= r; ++i) CHECK(support(a, Subset::single(i)) == Subset::single(i));
    }
  }
}

TEST_CASE("interval rank") {
  const Diagram d = fixtures::running_diagram();
  CHECK(interval_rank(d, 4, 9) == 4);
  CHECK(interval_rank(d, 2, 2) == 1);
  CHECK(interval_rank(d, 3, 5) == 3);
  // Agreement with the matroid rank on every interval.
  const CyclicFlatMatroid m = lpm_matroid(d);
  for (int a = 1; a <= 9; ++a)
    for (int b = a; b <= 9; ++b) CHECK(interval_rank(d, a, b) == rank(m, Subset::interval(a, b)));
}

TEST_CASE("transforms") {
  SUBCASE("single square flips to itself") {
    const Diagram d = make_diagram("NE", "EN");
    CHECK(transform(d, DiagramTransform::DualFlip) == d);
  }
  SUBCASE("rotation is the reverse relabeling") {
    const Diagram d = fixtures::running_diagram();
    const Diagram rot = transform(d, DiagramTransform::Rotate180);
    CHECK(rot.upper.steps == "NNENNENEE");  // reverse of the lower path
    std::vector<int> rev(9);
    for (int i = 0; i < 9; ++i) rev[i] = 9 - i;
    CHECK(relabel(lpm_matroid(d), rev) == lpm_matroid(rot));
  }
  SUBCASE("dual flip is an involution and presents the dual") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
      const Diagram d = random_diagram(2 + static_cast<int>(rng() % 6), rng);
      const Diagram f = transform(d, DiagramTransform::DualFlip);
      CHECK(transform(f, DiagramTransform::DualFlip) == d);
      CHECK(lpm_matroid(f) == dual(lpm_matroid(d)));
    }
  }
  SUBCASE("initial flats of D are complements of final flats of the flip") {
    for (int size = 2; size <= 8; ++size) {
      for (const Diagram& d : diagrams_of_size(size)) {
        const int n = size + 1;
        const auto corners = corner_flats(d);
        const auto flipped = corner_flats(transform(d, DiagramTransform::DualFlip));
        for (const CornerFlat& c : corners) {
          if (c.kind != CornerKind::Initial) continue;
          const bool found = corner_with(flipped, CornerKind::Final, c.endpoint + 1) != nullptr;
          CHECK(found);
        }
        for (const CornerFlat& c : flipped) {
          if (c.kind != CornerKind::Final) continue;
          CHECK(corner_with(corners, CornerKind::Initial, c.endpoint - 1) != nullptr);
        }
      }
    }
  }
}

TEST_CASE("interval restriction") {
  const Diagram d = fixtures::running_diagram();
  SUBCASE("restriction to [2,8] matches the pictured diagram") {
    const auto r = restrict_to_interval(d, 2, 8);
    REQUIRE(r.has_value());
    const SetSystem a = path_presentation(*r);
    REQUIRE(a.sets.size() == 5);
    CHECK(a.sets[0] == Subset::interval(1, 2));
    CHECK(a.sets[1] == Subset::interval(2, 4));
    CHECK(a.sets[2] == Subset::interval(3, 5));
    CHECK(a.sets[3] == Subset::interval(4, 6));
    CHECK(a.sets[4] == Subset::interval(6, 7));
  }
  SUBCASE("restriction to [2,7] matches the pictured diagram") {
    const auto r = restrict_to_interval(d, 2, 7);
    REQUIRE(r.has_value());
    const SetSystem a = path_presentation(*r);
    REQUIRE(a.sets.size() == 5);
    CHECK(a.sets[0] == Subset::interval(1, 2));
    CHECK(a.sets[1] == Subset::interval(2, 3));
    CHECK(a.sets[2] == Subset::interval(3, 4));
    CHECK(a.sets[3] == Subset::interval(4, 5));
    CHECK(a.sets[4] == Subset::interval(6, 6));
  }
  SUBCASE("free restrictions return the marker") {
    CHECK(!restrict_to_interval(d, 3, 5).has_value());
    CHECK(!restrict_to_interval(d, 2, 5).has_value());
  }
  SUBCASE("whole interval returns the diagram itself") {
    const auto r = restrict_to_interval(d, 1, 9);
    REQUIRE(r.has_value());
    CHECK(*r == d);
  }
  SUBCASE("matroid of the restriction agrees with the rank oracle") {
    std::mt19937_64 rng(9);
    const CyclicFlatMatroid m = lpm_matroid(d);
    for (int a = 1; a <= 9; ++a) {
      for (int b = a; b <= 9; ++b) {
        const int k = b - a + 1;
        const CyclicFlatMatroid expected = from_rank_oracle(
            k, [&](Subset y) {
              Subset shifted;
              for (int e : y.elements()) shifted.add(e + a - 1);
              return rank(m, shifted);
            });
        const auto r = restrict_to_interval(d, a, b);
        if (!r.has_value()) {
          CHECK(expected == CyclicFlatMatroid(k, {RankedSet(Subset{}, 0)}));
        } else {
          CHECK(lpm_matroid(*r) == expected);
        }
      }
    }
  }
}
