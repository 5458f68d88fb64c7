#include "doctest.h"

#include <random>

#include "skein/constructions.hpp"
#include "skein/errors.hpp"
#include "skein/suites.hpp"

using namespace skein;

namespace {

Caps roomy() {
  Caps c;
  c.bracket = 40;
  c.skein = 28;
  return c;
}

TangleDiagram closedBraid(int strands, const std::vector<int>& gens) {
  return traceClosure(TangleDiagram::braid(strands, gens));
}

TangleDiagram crossingTangle(int sign) { return TangleDiagram(SliceWord{2, {Event::cross(0, sign)}, 2}); }

// Two vertical strands, two horizontal arcs, one crossing.
std::vector<TangleDiagram> terminalTangles() {
  return {TangleDiagram::identity(2, false), TangleDiagram(SliceWord{2, {Event::cap(0), Event::cup(0)}, 2}),
          crossingTangle(1)};
}

// Closed 4-plat around a marked tangle on the middle strands.
MarkedLink plat(const TangleDiagram& inner) {
  MarkedLink m;
  m.below = TangleDiagram(SliceWord{0, {Event::cup(0), Event::cup(2)}, 4});
  m.inner = inner;
  m.above = TangleDiagram(SliceWord{4, {Event::cap(2), Event::cap(0)}, 0});
  m.position = 1;
  return m;
}

}  // namespace

TEST_CASE("terminal tangles are fixed by every mutation") {
  std::mt19937_64 rng(11);
  for (const auto& t : terminalTangles()) {
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      TangleDiagram r = rotate(t, axis);
      CHECK(bracketPolynomial(traceClosure(r)) == bracketPolynomial(traceClosure(t)));
      for (int trial = 0; trial < 5; ++trial) {
        MarkedLink m = randomMarkedLink(rng, {});
        m.inner = t;
        CHECK(bracketPolynomial(mutate(m, axis)) == bracketPolynomial(m.assemble()));
        CHECK(kauffmanLambda(mutate(m, axis)) == kauffmanLambda(m.assemble()));
      }
    }
  }
}

TEST_CASE("mutating an unknot diagram") {
  // The 4-plat of one crossing is an unknot; every mutant has trivial Jones.
  for (int sign : {1, -1}) {
    MarkedLink m = plat(crossingTangle(sign));
    REQUIRE(m.assemble().componentCount() == 1);
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      TangleDiagram mutant = mutate(m, axis);
      MultiLaurent b = bracketPolynomial(mutant);
      CHECK(b == bracketPolynomial(m.assemble()));
      // One kink: the bracket is -A^3 or -A^-3, so the Jones polynomial is 1.
      const bool kinkedUnknot = b.str() == "-A^3" || b.str() == "-A^-3";
      CHECK(kinkedUnknot);
    }
  }
}

TEST_CASE("mutation preserves the bracket and, component-wise, P and F") {
  std::mt19937_64 rng(2024);
  const Caps caps = roomy();
  int preserving = 0;
  for (int trial = 0; trial < 20; ++trial) {
    RandomMarkedLinkSpec spec;
    spec.oriented = true;
    MarkedLink m = randomMarkedLink(rng, spec);
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      TangleDiagram mutant = mutate(m, axis);
      CHECK(mutant.crossingSigns().size() == m.assemble().crossingSigns().size());
      CHECK(bracketPolynomial(mutant, caps) == bracketPolynomial(m.assemble(), caps));
      if (m.componentPreserving(axis)) {
        ++preserving;
        CHECK(homflypt(mutant, caps) == homflypt(m.assemble(), caps));
        CHECK(kauffmanF(mutant, caps) == kauffmanF(m.assemble(), caps));
      }
    }
  }
  CHECK(preserving > 10);
}

TEST_CASE("component preservation and mutation errors") {
  MarkedLink m = plat(crossingTangle(1));
  // A knot: every axis preserves the single component.
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) CHECK(m.componentPreserving(axis));
  // In the Hopf link b0,t0 lie on one component and b1,t1 on the other.
  MarkedLink hopf = plat(TangleDiagram(SliceWord{2, {Event::cross(0, 1), Event::cross(0, 1)}, 2}));
  REQUIRE(hopf.assemble().componentCount() == 2);
  CHECK(hopf.componentPreserving(Axis::Y));
  CHECK_FALSE(hopf.componentPreserving(Axis::X));
  CHECK_FALSE(hopf.componentPreserving(Axis::Z));

  MarkedLink bad = m;
  bad.inner = TangleDiagram(SliceWord{2, {Event::cap(0)}, 0});
  CHECK_THROWS_AS(mutate(bad, Axis::X), ContractViolation);
}

TEST_CASE("rotor assembly") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    RandomRotorSpec spec;
    spec.order = n;
    spec.arcs = 1 + n % 2;
    spec.oriented = n % 2 == 0;
    auto [rotor, stator] = randomRotorAndStator(rng, spec);
    TangleDiagram assembled = assembleRotor(rotor);
    CHECK(assembled.widthIn() == 0);
    CHECK(assembled.widthOut() == 2 * n);
    CHECK(assembled.word().crossingCount() == n * rotor.segment.word().crossingCount());
    CHECK(rotate(rotate(assembled, Axis::X), Axis::X) == assembled);
    auto [l, rl] = buildRotantPair(rotor, stator);
    CHECK(l.isClosed());
    CHECK(rl.word().crossingCount() == l.word().crossingCount());
  }
  RandomRotorSpec spec;
  auto [rotor, stator] = randomRotorAndStator(rng, spec);
  TangleDiagram wrong(SliceWord{4, {Event::cap(0), Event::cap(0)}, 0});
  CHECK_THROWS_AS(buildRotantPair(rotor, wrong), ContractViolation);
}

TEST_CASE("a mirror-symmetric rotor gives identical rotants") {
  // Segment: a cup beside the radial strand, no crossings; its assembled
  // rotor is a row of nested arcs that the mirror fixes up to isotopy.
  Rotor r;
  r.order = 3;
  r.arcs = 1;
  r.segment = TangleDiagram(SliceWord{1, {Event::cup(0)}, 3});
  TangleDiagram stator(SliceWord{6, {Event::cross(2, 1), Event::cap(1), Event::cross(2, -1), Event::cap(0), Event::cap(0)}, 0});
  auto [l, rl] = buildRotantPair(r, stator);
  CHECK(verifyEqual(l, rl, {InvariantKind::Bracket, InvariantKind::KauffmanLambda}).allEqual());
}

TEST_CASE("rotant pairs within the supported orders") {
  const Caps caps = roomy();
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      RandomRotorSpec spec;
      spec.order = n;
      spec.oriented = true;
      spec.arcs = 1 + trial % 2;
      spec.braidLike = trial == 3;
      auto [rotor, stator] = randomRotorAndStator(rng, spec);
      auto [l, rl] = buildRotantPair(rotor, stator);
      CHECK(l.taitNumber() == rl.taitNumber());
      CHECK(bracketPolynomial(l, caps) == bracketPolynomial(rl, caps));
      CHECK(homflypt(l, caps) == homflypt(rl, caps));
      if (n <= 3) CHECK(kauffmanLambda(l, caps) == kauffmanLambda(rl, caps));
    }
  }
}

TEST_CASE("cyclic words in the annulus") {
  std::mt19937_64 rng(3);
  SUBCASE("single letter") {
    RandomWordSpec spec;
    spec.length = 1;
    CyclicWord w = randomCyclicWord(rng, spec);
    for (WordAction a : {WordAction::RyPerLetter, WordAction::RzPerLetter})
      CHECK(wordAnnulusClass(rewriteCyclicWord(w, a, false)) == wordAnnulusClass(w));
  }
  SUBCASE("z rotation needs the 2-tangles on the mirrored strands") {
    int mismatches = 0;
    for (int trial = 0; trial < 30; ++trial) {
      RandomWordSpec spec;
      spec.length = 6;
      CyclicWord w = randomCyclicWord(rng, spec);
      CyclicWord rz = rewriteCyclicWord(w, WordAction::RzPerLetter, false);
      CHECK(wordAnnulusClass(rz) == wordAnnulusClass(w));
      CyclicWord unmoved = rz;
      unmoved.twoTanglePosition = w.twoTanglePosition;
      for (Letter& l : unmoved.letters)
        if (l.arity == 2) l.tangle = rotate(l.tangle, Axis::X);
      if (!(wordAnnulusClass(unmoved) == wordAnnulusClass(w))) ++mismatches;
    }
    CHECK(mismatches > 0);
  }
  SUBCASE("two distinct 3-tangles are not enough") {
    int mismatches = 0;
    for (int trial = 0; trial < 40; ++trial) {
      RandomWordSpec spec;
      spec.length = 7;
      spec.threeTangles = 2;
      CyclicWord w = randomCyclicWord(rng, spec);
      if (!(wordAnnulusClass(rewriteCyclicWord(w, WordAction::RyPerLetter, false)) == wordAnnulusClass(w)))
        ++mismatches;
    }
    CHECK(mismatches > 0);
  }
  SUBCASE("swapped pair") {
    RandomTangleSpec two;
    two.widthIn = two.widthOut = 2;
    two.crossings = 2;
    for (int trial = 0; trial < 10; ++trial) {
      auto [ab, ba] = jonesPair(randomTangle(rng, two), randomTangle(rng, two));
      CyclicWord w1{{{3, ab}, {2, randomTangle(rng, two)}, {3, ab}, {2, crossingTangle(1)}}, 0};
      CyclicWord w2 = w1;
      w2.letters[0].tangle = ba;
      w2.letters[2].tangle = ba;
      CHECK(wordAnnulusClass(w1) == wordAnnulusClass(w2));
    }
  }
}

TEST_CASE("oriented words") {
  std::mt19937_64 rng(8);
  const Caps caps = roomy();
  RandomWordSpec spec;
  spec.orientation = WordOrientation::BraidLike;
  spec.length = 5;
  CyclicWord w = randomCyclicWord(rng, spec);
  // Rotating upward letters about z without reversing leaves them pointing down.
  CHECK_THROWS_AS(rewriteCyclicWord(w, WordAction::RzPerLetter, false), ContractViolation);
  CyclicWord r = rewriteCyclicWord(w, WordAction::RzPerLetter, true);
  for (int twists = 0; twists <= 2; ++twists) {
    TangleDiagram a = wordClosure(w, twists), b = wordClosure(r, twists);
    CHECK(a.word().crossingCount() == wordTangle(w).word().crossingCount() + 6 * twists);
    CHECK(homflypt(a, caps) == homflypt(b, caps));
  }
  CHECK(letterDirections(WordOrientation::Mixed) == std::vector<int>{1, 1, -1});
  CHECK(letterDirections(WordOrientation::None).empty());
}

TEST_CASE("connected sums") {
  const Caps caps = roomy();
  const TangleDiagram trefoil = closedBraid(2, {1, 1, 1});
  const TangleDiagram mirror = closedBraid(2, {-1, -1, -1});
  const TangleDiagram hopf = closedBraid(2, {1, 1});
  const TangleDiagram unknot = closedBraid(2, {1});

  SUBCASE("polynomials multiply") {
    for (const auto& [a, b] : std::vector<std::pair<TangleDiagram, TangleDiagram>>{
             {trefoil, trefoil}, {trefoil, mirror}, {hopf, trefoil}, {trefoil, hopf}}) {
      TangleDiagram sum = connectedSum(a, 0, b, 0);
      CHECK(sum.componentCount() == a.componentCount() + b.componentCount() - 1);
      CHECK(homflypt(sum, caps) == homflypt(a, caps) * homflypt(b, caps));
      CHECK(jones(sum, caps) == jones(a, caps) * jones(b, caps));
    }
  }
  SUBCASE("summing with an unknot") {
    TangleDiagram sum = connectedSum(trefoil, 0, unknot, 0);
    CHECK(verifyEqual(sum, trefoil, {InvariantKind::Jones, InvariantKind::Homflypt, InvariantKind::KauffmanF}, caps)
              .allEqual());
  }
  SUBCASE("granny and square knots") {
    TangleDiagram granny = connectedSum(trefoil, 0, trefoil, 0);
    TangleDiagram square = connectedSum(trefoil, 0, mirror, 0);
    CHECK(jones(granny, caps) != jones(square, caps));
    auto [sum, reversed] = connectedSumPair(trefoil, 0, trefoil, 0);
    CHECK(verifyEqual(twoCable(sum), twoCable(reversed), {InvariantKind::Homflypt}, caps).allEqual());
  }
  SUBCASE("reversing a link summand") {
    auto [sum, reversed] = connectedSumPair(hopf, 0, hopf, 1);
    CHECK(verifyEqual(twoCable(sum), twoCable(reversed), {InvariantKind::Homflypt, InvariantKind::KauffmanF}, caps)
              .allEqual());
  }
  CHECK_THROWS_AS(connectedSum(trefoil, 1, trefoil, 0), ContractViolation);
  CHECK_THROWS_AS(connectedSum(trefoil, 0, hopf, 2), ContractViolation);
}

TEST_CASE("certificates") {
  const TangleDiagram trefoil = closedBraid(2, {1, 1, 1});
  Certificate same = certify("identity", "none", trefoil, trefoil, {InvariantKind::Jones, InvariantKind::Homflypt},
                             Caps{}, 42);
  CHECK(same.allEqual());
  Json j = same.toJson();
  for (const char* key : {"construction", "theorem", "diagrams", "invariants", "verdicts", "seed"})
    CHECK(j.contains(key));
  CHECK(j["seed"] == 42);
  CHECK(j["diagrams"].size() == 2);
  CHECK(j["verdicts"]["jones"] == true);
  CHECK(j["invariants"]["jones"][0] == "-s^8 + s^6 + s^2");

  Certificate differ = certify("mirror", "none", trefoil, closedBraid(2, {-1, -1, -1}), {InvariantKind::Jones},
                               Caps{});
  CHECK_FALSE(differ.allEqual());
  CHECK(differ.toJson()["seed"].is_null());
  differ.checks.emplace_back("extra", true);
  CHECK(differ.toJson()["verdicts"]["extra"] == true);
}

TEST_CASE("suites at small sizes") {
  const Caps caps = suiteCaps();
  for (const SuiteReport& r :
       {mutationSuite(1, 5, caps), rotantSuite(1, {2, 3}, 3, caps), annulusWordSuite(1, 5), swappedPairSuite(1, 5),
        singleLetterWordSuite(1, 3, caps), twoLetterWordSuite(1, 2, caps), cabledMutantSuite(1, 2, caps)}) {
    INFO(r.summary());
    CHECK(r.passed());
    CHECK(r.instances > 0);
  }
  SuiteReport rotants = rotantSuite(9, {3}, 4, caps);
  CHECK(rotants.log.size() == 4);
  // Same seed, same report.
  CHECK(mutationSuite(3, 4, caps).checks == mutationSuite(3, 4, caps).checks);
}
