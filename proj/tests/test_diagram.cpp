#include "doctest.h"

#include "skein/diagram.hpp"

using namespace skein;

namespace {

TangleDiagram closedBraid(int n, const std::vector<int>& gens) { return traceClosure(TangleDiagram::braid(n, gens)); }

}  // namespace

TEST_CASE("width bookkeeping rejects malformed words") {
  CHECK_THROWS_AS(TangleDiagram(SliceWord{0, {Event::cap(0)}, 0}), ContractViolation);
  CHECK_THROWS_AS(TangleDiagram(SliceWord{2, {Event::cross(1, 1)}, 2}), ContractViolation);
  CHECK_THROWS_AS(TangleDiagram(SliceWord{0, {Event::cup(0)}, 0}), ContractViolation);
  CHECK_NOTHROW(TangleDiagram(SliceWord{0, {Event::cup(0), Event::cap(0)}, 0}));
  auto w = SliceWord{1, {Event::cup(1), Event::cross(0, 1), Event::cap(1)}, 1}.widths();
  CHECK(w == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("orientation consistency at caps") {
  // cup flag +1 gives (up, down); capping that is fine, but (up, up) is not
  CHECK_NOTHROW(TangleDiagram(SliceWord{0, {Event::cup(0), Event::cap(0)}, 0}, {}, {1}));
  CHECK_THROWS_AS(TangleDiagram(SliceWord{2, {Event::cap(0)}, 0}, {1, 1}, {}), ContractViolation);
}

TEST_CASE("trace closure component counts and Tait numbers") {
  CHECK(traceClosure(TangleDiagram::identity(3, true)).componentCount() == 3);
  CHECK(closedBraid(2, {1}).componentCount() == 1);
  CHECK(closedBraid(2, {1, 1}).componentCount() == 2);
  auto trefoil = closedBraid(2, {1, 1, 1});
  CHECK(trefoil.componentCount() == 1);
  CHECK(trefoil.taitNumber() == 3);
  CHECK(closedBraid(3, {1, -2, 1, -2}).taitNumber() == 0);
  CHECK(traceClosure(TangleDiagram::identity(2, true)).taitNumber() == 0);
}

TEST_CASE("traced crossings are visited once over and once under") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    auto d = randomClosedDiagram(rng, 6, t % 2 == 0);
    std::map<int, std::pair<int, int>> visits;
    for (const auto& c : d.trace()) {
      CHECK(c.closed);
      for (const auto& v : c.crossings) (v.over ? visits[v.event].first : visits[v.event].second)++;
    }
    CHECK(static_cast<int>(visits.size()) == d.word().crossingCount());
    for (const auto& [e, ou] : visits) CHECK(ou == std::make_pair(1, 1));
  }
}

TEST_CASE("rotations are involutions and compose to the third") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    RandomTangleSpec spec;
    spec.widthIn = 2;
    spec.widthOut = 2;
    spec.oriented = t % 2 == 0;
    spec.crossings = 5;
    auto d = randomTangle(rng, spec);
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) CHECK(rotate(rotate(d, a), a) == d);
    CHECK(rotate(rotate(d, Axis::Y), Axis::X) == rotate(d, Axis::Z));
    CHECK(rotate(rotate(d, Axis::X), Axis::Y) == rotate(d, Axis::Z));
    if (d.oriented()) CHECK(reverseOrientation(reverseOrientation(d)) == d);
  }
  auto id = TangleDiagram::identity(2, false);
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) CHECK(rotate(id, a) == id);
}

TEST_CASE("reversal preserves the Tait number of closed diagrams") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    auto d = randomClosedDiagram(rng, 7, true);
    CHECK(reverseOrientation(d).taitNumber() == d.taitNumber());
  }
}

TEST_CASE("composition and placement") {
  auto s = TangleDiagram::braid(2, {1});
  auto si = TangleDiagram::braid(2, {-1});
  auto c = compose(s, si);
  CHECK(c.word().events.size() == 2);
  CHECK(compose(TangleDiagram::identity(2, true), s) == s);
  auto p = placeAt(s, 1, 3);
  CHECK(p.word().events.front() == Event::cross(1, 1));
  CHECK(placeAt(TangleDiagram::identity(2, false), 1, 4) == TangleDiagram::identity(4, false));
  CHECK_THROWS_AS(placeAt(s, 2, 3), ContractViolation);
  CHECK_THROWS_AS(compose(s, TangleDiagram::identity(3, true)), ContractViolation);
}

TEST_CASE("two-cable doubles strands and quadruples crossings") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 15; ++t) {
    auto d = randomClosedDiagram(rng, 4, true);
    auto c = twoCable(d);
    CHECK(c.word().crossingCount() == 4 * d.word().crossingCount());
    CHECK(c.componentCount() == 2 * d.componentCount());
  }
  auto unknot = TangleDiagram(SliceWord{0, {Event::cup(0), Event::cap(0)}, 0}, {}, {1});
  unknot.addComponentTwist(0, 1);
  CHECK(twoCable(unknot).word().crossingCount() == 2);
}

TEST_CASE("random generation is deterministic and respects boundary data") {
  CHECK(randomTangle(42, 3, 8, true) == randomTangle(42, 3, 8, true));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    RandomTangleSpec spec;
    spec.widthIn = spec.widthOut = 3;
    spec.oriented = true;
    spec.dirsIn = spec.dirsOut = {1, -1, 1};
    spec.crossings = 6;
    auto d = randomTangle(rng, spec);
    CHECK(d.topDirections() == std::vector<int>{1, -1, 1});
  }
}

TEST_CASE("matching closure rejects orientation clashes") {
  auto id = TangleDiagram::identity(2, true);
  CHECK_THROWS_AS(platClosure(id), ContractViolation);
  auto mixed = TangleDiagram(SliceWord::identity(2), {1, -1}, {});
  CHECK(platClosure(mixed).componentCount() == 1);
}
