#include "skein/suites.hpp"

#include <sstream>

namespace skein {

namespace {

using Kinds = std::vector<InvariantKind>;

std::uint64_t instanceSeed(std::mt19937_64& master) { return master(); }

void record(SuiteReport& report, Certificate c) {
  report.checks += static_cast<int>(c.entries.size() + c.checks.size());
  if (!c.allEqual()) report.failures.push_back(std::move(c));
}

MarkedLink randomKnotMarkedLink(std::mt19937_64& rng, const RandomMarkedLinkSpec& spec) {
  for (;;) {
    MarkedLink m = randomMarkedLink(rng, spec);
    if (m.assemble().componentCount() == 1) return m;
  }
}

TangleDiagram randomOrientedClosed(std::mt19937_64& rng, int crossings, int components) {
  for (;;) {
    TangleDiagram d = randomClosedDiagram(rng, crossings, true, 4);
    if (components <= 0 || d.componentCount() == components) return d;
  }
}

}  // namespace

std::string SuiteReport::summary() const {
  std::ostringstream out;
  out << name << ": " << instances << " instances, " << checks << " checks, " << failures.size() << " failures";
  return out.str();
}

Caps suiteCaps() {
  Caps c = Caps::fromEnvironment();
  c.bracket = std::max(c.bracket, 40);
  c.skein = std::max(c.skein, 28);
  return c;
}

SuiteReport mutationSuite(std::uint64_t seed, int trials, const Caps& caps) {
  SuiteReport report{"mutation"};
  std::mt19937_64 master(seed);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = instanceSeed(master);
    std::mt19937_64 rng(s);
    RandomMarkedLinkSpec spec;
    spec.oriented = true;
    spec.innerCrossings = 1 + t % 3;
    spec.outerCrossings = 2 + t % 4;
    MarkedLink m = randomMarkedLink(rng, spec);
    TangleDiagram original = m.assemble();
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      ++report.instances;
      TangleDiagram mutant = mutate(m, axis);
      Kinds kinds{InvariantKind::Bracket};
      if (m.componentPreserving(axis)) {
        kinds.push_back(InvariantKind::Homflypt);
        kinds.push_back(InvariantKind::KauffmanF);
      }
      record(report, certify(std::string("mutation-") + axisName(axis), "1.1", original, mutant, kinds, caps, s));
    }
  }
  return report;
}

namespace {

RandomRotorSpec rotorSpecFor(int order, int variant) {
  RandomRotorSpec spec;
  spec.order = order;
  spec.oriented = true;
  spec.segmentCrossings = 2;
  spec.statorCrossings = 2;
  switch (variant % 3) {
    case 0: spec.arcs = 1; break;
    case 1: spec.arcs = 2; break;
    default:
      spec.arcs = 2;
      spec.braidLike = true;
      break;
  }
  return spec;
}

void logAlexander(SuiteReport& report, int order, int t, const TangleDiagram& l, const TangleDiagram& rl,
                  const Caps& caps) {
  std::ostringstream line;
  line << "alexander n=" << order << " trial=" << t << ": ";
  try {
    auto a = alexander(l, caps), b = alexander(rl, caps);
    line << (a == b ? "equal" : "different") << " (" << a.str() << " | " << b.str() << ")";
  } catch (const ResourceError& e) {
    line << "skipped (" << e.what() << ")";
  }
  report.log.push_back(line.str());
}

SuiteReport rotorSuite(const std::string& name, const std::string& theorem, std::uint64_t seed,
                       const std::vector<int>& orders, int trials, bool twoArcs, const Caps& caps) {
  SuiteReport report{name};
  std::mt19937_64 master(seed);
  for (int n : orders) {
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t s = instanceSeed(master);
      std::mt19937_64 rng(s);
      RandomRotorSpec spec = rotorSpecFor(n, twoArcs ? 1 + t % 2 : t);
      auto [rotor, stator] = randomRotorAndStator(rng, spec);
      auto [l, rl] = buildRotantPair(rotor, stator);
      ++report.instances;
      Kinds kinds{InvariantKind::Bracket};
      if (twoArcs || n <= 4) kinds.push_back(InvariantKind::Homflypt);
      if (!twoArcs && n <= 3) kinds.push_back(InvariantKind::KauffmanLambda);
      Certificate c = certify("rotant-n" + std::to_string(n), theorem, l, rl, kinds, caps, s);
      c.checks.emplace_back("tait", l.taitNumber() == rl.taitNumber());
      record(report, std::move(c));
      logAlexander(report, n, t, l, rl, caps);
    }
  }
  return report;
}

}  // namespace

SuiteReport rotantSuite(std::uint64_t seed, const std::vector<int>& orders, int trials, const Caps& caps) {
  return rotorSuite("rotant", "2.2", seed, orders, trials, false, caps);
}

SuiteReport twoArcRotorSuite(std::uint64_t seed, const std::vector<int>& orders, int trials, const Caps& caps) {
  return rotorSuite("two-arc rotor", "2.3", seed, orders, trials, true, caps);
}

SuiteReport annulusWordSuite(std::uint64_t seed, int trials) {
  SuiteReport report{"annulus words"};
  std::mt19937_64 master(seed);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = instanceSeed(master);
    std::mt19937_64 rng(s);
    RandomWordSpec spec;
    spec.length = 6 + t % 3;
    spec.threeTangles = 1;
    spec.twoTangles = 2;
    spec.twoTanglePosition = t % 2;
    CyclicWord w = randomCyclicWord(rng, spec);
    const AnnulusClass original = wordAnnulusClass(w);
    for (WordAction action : {WordAction::RyPerLetter, WordAction::RzPerLetter}) {
      ++report.instances;
      CyclicWord r = rewriteCyclicWord(w, action, false);
      Certificate c{action == WordAction::RyPerLetter ? "word-ry" : "word-rz", "3.4", wordClosure(w, 0),
                    wordClosure(r, 0), {}, s};
      c.checks.emplace_back("annulusClass", original == wordAnnulusClass(r));
      record(report, std::move(c));
    }
  }
  return report;
}

SuiteReport swappedPairSuite(std::uint64_t seed, int trials) {
  SuiteReport report{"swapped pair words"};
  std::mt19937_64 master(seed);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = instanceSeed(master);
    std::mt19937_64 rng(s);
    RandomTangleSpec two;
    two.widthIn = two.widthOut = 2;
    two.crossings = 2;
    TangleDiagram a = randomTangle(rng, two);
    TangleDiagram b = randomTangle(rng, two);
    auto [ab, ba] = jonesPair(a, b);
    CyclicWord first, second;
    const int length = 3 + t % 4;
    for (int i = 0; i < length; ++i) {
      if (i % 2 == 0) {
        first.letters.push_back({3, ab});
        second.letters.push_back({3, ba});
      } else {
        Letter letter{2, randomTangle(rng, two)};
        first.letters.push_back(letter);
        second.letters.push_back(letter);
      }
    }
    ++report.instances;
    Certificate c{"swapped-pair", "3.2", wordClosure(first, 0), wordClosure(second, 0), {}, s};
    c.checks.emplace_back("annulusClass", wordAnnulusClass(first) == wordAnnulusClass(second));
    record(report, std::move(c));
  }
  return report;
}

namespace {

struct WordVariant {
  WordOrientation orientation;
  WordAction action;
};

SuiteReport orientedWordSuite(const std::string& name, const std::string& theorem, std::uint64_t seed, int trials,
                              int threeTangles, const std::vector<WordVariant>& variants, const Caps& caps) {
  SuiteReport report{name};
  std::mt19937_64 master(seed);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = instanceSeed(master);
    std::mt19937_64 rng(s);
    const WordVariant& variant = variants[t % variants.size()];
    RandomWordSpec spec;
    spec.length = 6;
    spec.threeTangles = threeTangles;
    spec.twoTangles = 1;
    spec.letterCrossings = 2;
    spec.twoTanglePosition = (t / static_cast<int>(variants.size())) % 2;
    spec.orientation = variant.orientation;
    CyclicWord w = randomCyclicWord(rng, spec);
    CyclicWord r = rewriteCyclicWord(w, variant.action, true);
    const std::string label = variant.action == WordAction::RzPerLetter ? "word-rz" : "word-ry";
    for (int twists = 0; twists <= 2; ++twists) {
      ++report.instances;
      record(report, certify(label + "-twists" + std::to_string(twists), theorem, wordClosure(w, twists),
                             wordClosure(r, twists), {InvariantKind::Homflypt}, caps, s));
    }
  }
  return report;
}

}  // namespace

SuiteReport singleLetterWordSuite(std::uint64_t seed, int trials, const Caps& caps) {
  return orientedWordSuite("single-letter oriented words", "4.2", seed, trials, 1,
                           {{WordOrientation::BraidLike, WordAction::RzPerLetter},
                            {WordOrientation::Alternating, WordAction::RzPerLetter},
                            {WordOrientation::Mixed, WordAction::RyPerLetter}},
                           caps);
}

SuiteReport twoLetterWordSuite(std::uint64_t seed, int trials, const Caps& caps) {
  return orientedWordSuite("two-letter oriented words", "5.1", seed, trials, 2,
                           {{WordOrientation::Alternating, WordAction::RyPerLetter},
                            {WordOrientation::Mixed, WordAction::RyPerLetter}},
                           caps);
}

SuiteReport cabledMutantSuite(std::uint64_t seed, int trials, const Caps& caps) {
  SuiteReport report{"2-cabled mutants"};
  std::mt19937_64 master(seed);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = instanceSeed(master);
    std::mt19937_64 rng(s);
    RandomMarkedLinkSpec spec;
    spec.oriented = true;
    spec.innerCrossings = 2;
    spec.outerCrossings = 2;
    MarkedLink m = randomKnotMarkedLink(rng, spec);
    const Axis axis = static_cast<Axis>(t % 3);
    ++report.instances;
    record(report, certify(std::string("cabled-mutant-") + axisName(axis), "1.2", twoCable(m.assemble()),
                           twoCable(mutate(m, axis)), {InvariantKind::Homflypt, InvariantKind::KauffmanF}, caps, s));
  }
  return report;
}

SuiteReport cabledSumSuite(std::uint64_t seed, int trials, const Caps& caps) {
  SuiteReport report{"2-cabled connected sums"};
  std::mt19937_64 master(seed);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = instanceSeed(master);
    std::mt19937_64 rng(s);
    TangleDiagram l1 = randomOrientedClosed(rng, 2, 0);
    TangleDiagram l2 = randomOrientedClosed(rng, 2, t % 2 ? 2 : 0);
    auto [sum, reversedSum] = connectedSumPair(l1, 0, l2, 0);
    ++report.instances;
    record(report, certify("cabled-connected-sum", "1.3", twoCable(sum), twoCable(reversedSum),
                           {InvariantKind::Homflypt, InvariantKind::KauffmanF}, caps, s));
  }
  return report;
}

std::vector<SuiteReport> allSuites(std::uint64_t seed, const Caps& caps) {
  std::vector<SuiteReport> out;
  out.push_back(mutationSuite(seed, 100, caps));
  out.push_back(rotantSuite(seed, {2, 3, 4, 5}, 25, caps));
  out.push_back(twoArcRotorSuite(seed, {6, 7}, 10, caps));
  out.push_back(annulusWordSuite(seed, 25));
  out.push_back(swappedPairSuite(seed, 25));
  out.push_back(singleLetterWordSuite(seed, 25, caps));
  out.push_back(twoLetterWordSuite(seed, 25, caps));
  out.push_back(cabledMutantSuite(seed, 10, caps));
  out.push_back(cabledSumSuite(seed, 10, caps));
  return out;
}

}  // namespace skein
