// Command-line front end: invariants, constructions, spectral solvers and the
// seeded property suites.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skein/constructions.hpp"
#include "skein/diagram_io.hpp"
#include "skein/errors.hpp"
#include "skein/hecke.hpp"
#include "skein/invariants.hpp"
#include "skein/suites.hpp"
#include "skein/tl.hpp"

using namespace skein;

namespace {

/// Input problem reported with a line and column.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readText(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string lineColumn(const std::string& text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json readJson(const std::string& path) {
  const std::string text = readText(path);
  try {
    return parseJsonText(text);
  } catch (const ParseError& e) {
    // nlohmann reports the offset one past the offending character.
    throw InputError(path + ": " + lineColumn(text, e.position == 0 ? 0 : e.position - 1) + ": " + e.what());
  }
}

TangleDiagram readDiagram(const std::string& path, bool pdCode) {
  if (!pdCode) return diagramFromJson(readJson(path));
  const std::string text = readText(path);
  try {
    return skein::fromPD(parsePD(text));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + lineColumn(text, e.position) + ": " + e.what());
  }
}

// ---- JSON for construction inputs --------------------------------------------

MarkedLink markedLinkFromJson(const Json& j) {
  MarkedLink m;
  m.below = diagramFromJson(j.at("below"));
  m.inner = diagramFromJson(j.at("inner"));
  m.above = diagramFromJson(j.at("above"));
  m.position = j.at("position").get<int>();
  return m;
}

Json markedLinkToJson(const MarkedLink& m) {
  return {{"below", diagramToJson(m.below)},
          {"inner", diagramToJson(m.inner)},
          {"above", diagramToJson(m.above)},
          {"position", m.position}};
}

CyclicWord wordFromJson(const Json& j) {
  CyclicWord w;
  w.twoTanglePosition = j.value("two_tangle_position", 0);
  for (const auto& l : j.at("letters")) w.letters.push_back({l.at("arity").get<int>(), diagramFromJson(l.at("tangle"))});
  return w;
}

Json wordToJson(const CyclicWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters) letters.push_back({{"arity", l.arity}, {"tangle", diagramToJson(l.tangle)}});
  return {{"letters", letters}, {"two_tangle_position", w.twoTanglePosition}};
}

std::vector<InvariantKind> parseKinds(const std::vector<std::string>& names) {
  std::vector<InvariantKind> kinds;
  for (const auto& n : names) kinds.push_back(parseInvariantKind(n));
  return kinds;
}

Axis axisFromFlag(const std::string& s) { return parseAxis(s); }

// ---- caps --------------------------------------------------------------------------

struct CapFlags {
  int bracket = 0;
  int skein = 0;

  Caps apply(Caps base) const {
    if (bracket > 0) base.bracket = bracket;
    if (skein > 0) base.skein = skein;
    return base;
  }
};

void emit(const Json& j, const std::string& output) {
  std::cout << j.dump(2) << '\n';
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw InputError("cannot write " + output);
    out << j.dump(2) << '\n';
  }
}

int reportSuite(const SuiteReport& r, const std::string& failureDir, bool showLog) {
  std::cout << r.summary() << '\n';
  if (showLog)
    for (const auto& line : r.log) std::cout << "  " << line << '\n';
  if (r.passed()) return 0;
  std::filesystem::create_directories(failureDir);
  int k = 0;
  for (const auto& c : r.failures) {
    std::string slug = r.name;
    for (char& ch : slug)
      if (ch == ' ') ch = '-';
    const std::string path = failureDir + "/failure-" + slug + "-" + std::to_string(k++) + ".json";
    std::ofstream(path) << c.toJson().dump(2) << '\n';
    std::cout << "FAILED certificate (" << path << "):\n" << c.toJson().dump(2) << '\n';
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link invariants, skein modules and link-cloning constructions"};
  app.require_subcommand(1);
  CapFlags capFlags;
  app.add_option("--bracket-cap", capFlags.bracket, "Crossing budget for the bracket (default from SKEIN_BRACKET_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--skein-cap", capFlags.skein, "Crossing budget for skein trees (default from SKEIN_SKEIN_CAP)")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  // invariant
  auto* inv = app.add_subcommand("invariant", "Print invariants of a closed diagram");
  std::vector<std::string> invKinds;
  std::string invFile;
  bool fromPD = false;
  inv->add_option("--kind", invKinds, "Invariant kinds (default: all that apply)")->delimiter(',');
  inv->add_flag("--from-pd", fromPD, "Read a planar-diagram code instead of JSON");
  inv->add_option("file", invFile, "Diagram file")->required();
  inv->callback([&] {
    action = [&] {
      const Caps caps = capFlags.apply(Caps::fromEnvironment());
      TangleDiagram d = readDiagram(invFile, fromPD);
      std::vector<InvariantKind> kinds;
      if (invKinds.empty()) {
        kinds = d.oriented() ? allInvariantKinds()
                             : std::vector<InvariantKind>{InvariantKind::Bracket, InvariantKind::KauffmanLambda};
      } else {
        kinds = parseKinds(invKinds);
      }
      for (InvariantKind k : kinds) std::cout << invariantName(k) << ": " << computeInvariant(k, d, caps).str() << '\n';
      return 0;
    };
  });

  // mutate
  auto* mut = app.add_subcommand("mutate", "Mutate a marked link and certify the pair");
  std::string mutFile, mutAxis = "x", mutOut;
  std::optional<std::uint64_t> mutSeed;
  std::vector<std::string> mutKinds;
  RandomMarkedLinkSpec mutSpec;
  mutSpec.oriented = true;
  auto* mutInput = mut->add_option("--input", mutFile, "Marked link JSON {below, inner, above, position}");
  mut->add_option("--seed", mutSeed, "Seed for a random marked link")->excludes(mutInput);
  mut->add_option("--axis", mutAxis, "Rotation axis")->check(CLI::IsMember({"x", "y", "z"}));
  mut->add_option("--kinds", mutKinds, "Invariants to compare")->delimiter(',');
  mut->add_option("--inner-crossings", mutSpec.innerCrossings);
  mut->add_option("--outer-crossings", mutSpec.outerCrossings);
  mut->add_option("--width", mutSpec.width);
  mut->add_option("-o,--output", mutOut, "Also write the certificate here");
  mut->callback([&] {
    if (mutFile.empty() && !mutSeed) throw CLI::ValidationError("mutate", "either --input or --seed is required");
    action = [&] {
      const Caps caps = capFlags.apply(suiteCaps());
      MarkedLink m;
      if (mutSeed) {
        std::mt19937_64 rng(*mutSeed);
        m = randomMarkedLink(rng, mutSpec);
      } else {
        m = markedLinkFromJson(readJson(mutFile));
      }
      const Axis axis = axisFromFlag(mutAxis);
      std::vector<InvariantKind> kinds = parseKinds(mutKinds);
      if (kinds.empty()) {
        kinds.push_back(InvariantKind::Bracket);
        if (m.assemble().oriented() && m.componentPreserving(axis)) {
          kinds.push_back(InvariantKind::Homflypt);
          kinds.push_back(InvariantKind::KauffmanF);
        }
      }
      Certificate c = certify(std::string("mutation-") + axisName(axis), "1.1", m.assemble(), mutate(m, axis), kinds,
                              caps, mutSeed);
      c.checks.emplace_back("componentPreserving", m.componentPreserving(axis));
      Json j = c.toJson();
      j["marked_link"] = markedLinkToJson(m);
      emit(j, mutOut);
      return 0;
    };
  });

  // rotant
  auto* rot = app.add_subcommand("rotant", "Build a rotant pair and certify it");
  std::string rotFile, rotOut;
  std::optional<std::uint64_t> rotSeed;
  std::vector<std::string> rotKinds;
  RandomRotorSpec rotSpec;
  rotSpec.oriented = true;
  auto* rotInput = rot->add_option("--input", rotFile, "Rotor JSON {segment, order, arcs, stator}");
  rot->add_option("--seed", rotSeed, "Seed for a random rotor and stator")->excludes(rotInput);
  rot->add_option("--n", rotSpec.order, "Order of the random rotor");
  rot->add_option("--arcs", rotSpec.arcs, "Arcs between neighbouring segments");
  rot->add_flag("--braid-like", rotSpec.braidLike, "Segments from upward 3-strand tangles (two arcs)");
  rot->add_option("--kinds", rotKinds, "Invariants to compare")->delimiter(',');
  rot->add_option("-o,--output", rotOut, "Also write the certificate here");
  rot->callback([&] {
    if (rotFile.empty() && !rotSeed) throw CLI::ValidationError("rotant", "either --input or --seed is required");
    action = [&] {
      const Caps caps = capFlags.apply(suiteCaps());
      Rotor r;
      TangleDiagram stator;
      if (rotSeed) {
        std::mt19937_64 rng(*rotSeed);
        std::tie(r, stator) = randomRotorAndStator(rng, rotSpec);
      } else {
        Json j = readJson(rotFile);
        r.segment = diagramFromJson(j.at("segment"));
        r.order = j.at("order").get<int>();
        r.arcs = j.at("arcs").get<int>();
        stator = diagramFromJson(j.at("stator"));
      }
      auto [l, rl] = buildRotantPair(r, stator);
      std::vector<InvariantKind> kinds = parseKinds(rotKinds);
      if (kinds.empty()) {
        kinds = {InvariantKind::Bracket, InvariantKind::KauffmanLambda};
        if (l.oriented()) kinds.insert(kinds.begin() + 1, InvariantKind::Homflypt);
      }
      Certificate c = certify("rotant-n" + std::to_string(r.order), r.arcs <= 2 && r.order > 5 ? "2.3" : "2.2", l, rl,
                              kinds, caps, rotSeed);
      if (l.oriented()) c.checks.emplace_back("tait", l.taitNumber() == rl.taitNumber());
      emit(c.toJson(), rotOut);
      return 0;
    };
  });

  // word
  auto* wrd = app.add_subcommand("word", "Rewrite a cyclic word letter by letter and compare");
  std::string wordFile, wordAction = "rz", wordOrientation = "none", wordOut;
  std::optional<std::uint64_t> wordSeed;
  bool wordReverse = false;
  int wordMaxTwists = 2;
  RandomWordSpec wordSpec;
  auto* wordInput = wrd->add_option("--input", wordFile, "Word JSON {letters: [{arity, tangle}], two_tangle_position}");
  wrd->add_option("--seed", wordSeed, "Seed for a random word")->excludes(wordInput);
  wrd->add_option("--action", wordAction, "Rotation applied to each 3-tangle letter")
      ->check(CLI::IsMember({"rz", "ry"}));
  wrd->add_flag("--reverse", wordReverse, "Reverse letter orientation after rotating");
  wrd->add_option("--orientation", wordOrientation, "Orientation pattern of random letters")
      ->check(CLI::IsMember({"none", "braid-like", "alternating", "mixed"}));
  wrd->add_option("--length", wordSpec.length);
  wrd->add_option("--three-tangles", wordSpec.threeTangles);
  wrd->add_option("--position", wordSpec.twoTanglePosition, "Strand pair of the 2-tangle letters (0 or 1)");
  wrd->add_option("--max-twists", wordMaxTwists, "Outer full twists for oriented closures (0..k)");
  wrd->add_option("-o,--output", wordOut, "Also write the result here");
  wrd->callback([&] {
    if (wordFile.empty() && !wordSeed) throw CLI::ValidationError("word", "either --input or --seed is required");
    action = [&] {
      const Caps caps = capFlags.apply(suiteCaps());
      CyclicWord w;
      if (wordSeed) {
        static const std::map<std::string, WordOrientation> patterns{{"none", WordOrientation::None},
                                                                     {"braid-like", WordOrientation::BraidLike},
                                                                     {"alternating", WordOrientation::Alternating},
                                                                     {"mixed", WordOrientation::Mixed}};
        wordSpec.orientation = patterns.at(wordOrientation);
        std::mt19937_64 rng(*wordSeed);
        w = randomCyclicWord(rng, wordSpec);
      } else {
        w = wordFromJson(readJson(wordFile));
      }
      const WordAction act = wordAction == "rz" ? WordAction::RzPerLetter : WordAction::RyPerLetter;
      CyclicWord r = rewriteCyclicWord(w, act, wordReverse);
      Json out;
      out["word"] = wordToJson(w);
      out["rewritten"] = wordToJson(r);
      Json certs = Json::array();
      if (!wordTangle(w).oriented()) {
        Certificate c{"word-" + wordAction, "3.4", wordClosure(w, 0), wordClosure(r, 0), {}, wordSeed};
        const AnnulusClass a = wordAnnulusClass(w), b = wordAnnulusClass(r);
        c.checks.emplace_back("annulusClass", a == b);
        Json cj = c.toJson();
        cj["annulus_classes"] = {a.str(), b.str()};
        certs.push_back(cj);
      } else {
        for (int k = 0; k <= wordMaxTwists; ++k) {
          certs.push_back(certify("word-" + wordAction + "-twists" + std::to_string(k), "4.2", wordClosure(w, k),
                                  wordClosure(r, k), {InvariantKind::Homflypt}, caps, wordSeed)
                              .toJson());
        }
      }
      out["certificates"] = certs;
      emit(out, wordOut);
      return 0;
    };
  });

  // spectral
  auto* spec = app.add_subcommand("spectral", "Solve for the spectral parameter P of a 3-strand element");
  std::string specAlgebra = "tl3", specFile, specAxis = "z";
  spec->add_option("--algebra", specAlgebra, "tl3 (bracket) or h3 (braid-like HOMFLYPT)")
      ->check(CLI::IsMember({"tl3", "h3"}));
  spec->add_option("--axis", specAxis, "Rotation for tl3")->check(CLI::IsMember({"y", "z"}));
  spec->add_option("file", specFile, "Element JSON (basis label -> polynomial)")->required();
  spec->callback([&] {
    action = [&] {
      Json j = readJson(specFile);
      if (specAlgebra == "tl3") {
        const TLAlgebra tl3(3), tl2(2);
        SpectralSolution s = spectralSolveTL(tl3, tl2, tl3.fromJson(j), parseAxis(specAxis));
        if (!s.inDense) {
          std::cout << "NOT-IN-DENSE\n";
          return 0;
        }
        std::cout << "P: " << tl2.toJson(s.p).dump() << '\n' << "P^-1: " << tl2.toJson(s.pInverse).dump() << '\n';
      } else {
        const HeckeAlgebra h3(3), h2(2);
        HeckeSpectralSolution s = spectralSolveHecke(h3, h2, h3.fromJson(j));
        if (!s.inDense) {
          std::cout << "NOT-IN-DENSE\n";
          return 0;
        }
        std::cout << "P: " << h2.toJson(s.p).dump() << '\n' << "P^-1: " << h2.toJson(s.pInverse).dump() << '\n';
      }
      return 0;
    };
  });

  // algebra
  auto* alg = app.add_subcommand("algebra", "Arithmetic in TL_n and H_n");
  std::string algName = "tl3", algOp = "mul";
  std::vector<std::string> algFiles;
  std::uint64_t algSeed = 1;
  int algTrials = 100;
  alg->add_option("--algebra", algName, "tl2, tl3, tl4, h2, h3")->check(CLI::IsMember({"tl2", "tl3", "tl4", "h2", "h3"}));
  alg->add_option("--op", algOp, "mul A B | invert A | from-tangle D | density")
      ->check(CLI::IsMember({"mul", "invert", "from-tangle", "density"}));
  alg->add_option("--seed", algSeed, "Seed for density sampling");
  alg->add_option("--trials", algTrials, "Random elements tested for invertibility");
  alg->add_option("files", algFiles, "Operands");
  alg->callback([&] {
    const std::size_t need = algOp == "mul" ? 2 : (algOp == "density" ? 0 : 1);
    if (algFiles.size() != need)
      throw CLI::ValidationError("algebra", "--op " + algOp + " takes " + std::to_string(need) + " file(s)");
    action = [&] {
      const int n = algName.back() - '0';
      const bool tl = algName.rfind("tl", 0) == 0;
      if (algOp == "density") {
        DensityReport r = densityWitness(tl ? "tl" : "hecke", n, algTrials, algSeed, n <= 3);
        Json j{{"algebra", r.algebra}, {"n", r.n}, {"dim", r.dim}, {"x1_degree", r.x1Degree},
               {"x1_leading_monic", r.x1LeadingIsMonic}, {"x1_subleading_vanishes", r.x1SubleadingVanishes},
               {"trials", r.trials}, {"invertible", r.invertible}};
        j["residue"] = r.residue ? Json(r.residue->str()) : Json(nullptr);
        std::cout << j.dump(2) << '\n';
        return 0;
      }
      if (tl) {
        const TLAlgebra a(n);
        auto load = [&](const std::string& f) { return a.fromJson(readJson(f)); };
        if (algOp == "mul") {
          std::cout << a.toJson(a.mul(load(algFiles[0]), load(algFiles[1]))).dump() << '\n';
        } else if (algOp == "invert") {
          auto inv = a.invert(load(algFiles[0]));
          std::cout << (inv ? a.toJson(*inv).dump() : "NOT-INVERTIBLE") << '\n';
        } else {
          std::cout << a.toJson(a.fromTangle(readDiagram(algFiles[0], false))).dump() << '\n';
        }
      } else {
        const HeckeAlgebra a(n);
        auto load = [&](const std::string& f) { return a.fromJson(readJson(f)); };
        if (algOp == "mul") {
          std::cout << a.toJson(a.mul(load(algFiles[0]), load(algFiles[1]))).dump() << '\n';
        } else if (algOp == "invert") {
          auto inv = a.invert(load(algFiles[0]));
          std::cout << (inv ? a.toJson(*inv).dump() : "NOT-INVERTIBLE") << '\n';
        } else {
          std::cout << a.toJson(a.fromTangle(readDiagram(algFiles[0], false))).dump() << '\n';
        }
      }
      return 0;
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Run the seeded suite for one theorem");
  std::string theorem, verifyDir = "skein-failures";
  std::vector<int> orders;
  int trials = 0;
  std::uint64_t verifySeed = 0;
  ver->add_option("--theorem", theorem, "1.1, 1.2, 1.3, 2.2, 2.3, 3.2, 3.4, 4.2 or 5.1")
      ->required()
      ->check(CLI::IsMember({"1.1", "1.2", "1.3", "2.2", "2.3", "3.2", "3.4", "4.2", "5.1"}));
  ver->add_option("--n", orders, "Rotor orders (2.2: default 2..5, 2.3: default 6,7)")->delimiter(',');
  ver->add_option("--trials", trials, "Instances (default per theorem)")->check(CLI::PositiveNumber);
  ver->add_option("--seed", verifySeed, "Seed")->required();
  ver->add_option("--failures-dir", verifyDir, "Where failing certificates are written");
  ver->callback([&] {
    action = [&] {
      const Caps caps = capFlags.apply(suiteCaps());
      auto count = [&](int fallback) { return trials > 0 ? trials : fallback; };
      SuiteReport r;
      if (theorem == "1.1") r = mutationSuite(verifySeed, count(100), caps);
      if (theorem == "1.2") r = cabledMutantSuite(verifySeed, count(10), caps);
      if (theorem == "1.3") r = cabledSumSuite(verifySeed, count(10), caps);
      if (theorem == "2.2")
        r = rotantSuite(verifySeed, orders.empty() ? std::vector<int>{2, 3, 4, 5} : orders, count(25), caps);
      if (theorem == "2.3")
        r = twoArcRotorSuite(verifySeed, orders.empty() ? std::vector<int>{6, 7} : orders, count(10), caps);
      if (theorem == "3.2") r = swappedPairSuite(verifySeed, count(25));
      if (theorem == "3.4") r = annulusWordSuite(verifySeed, count(25));
      if (theorem == "4.2") r = singleLetterWordSuite(verifySeed, count(25), caps);
      if (theorem == "5.1") r = twoLetterWordSuite(verifySeed, count(25), caps);
      return reportSuite(r, verifyDir, theorem == "2.2" || theorem == "2.3");
    };
  });

  // suite
  auto* sui = app.add_subcommand("suite", "Run every property suite");
  std::string suiteName = "all", suiteDir = "skein-failures";
  std::uint64_t suiteSeed = 0;
  sui->add_option("name", suiteName, "Only 'all' is defined")->check(CLI::IsMember({"all"}));
  sui->add_option("--seed", suiteSeed, "Seed")->required();
  sui->add_option("--failures-dir", suiteDir, "Where failing certificates are written");
  sui->callback([&] {
    action = [&] {
      int status = 0;
      for (const SuiteReport& r : allSuites(suiteSeed, capFlags.apply(suiteCaps())))
        status |= reportSuite(r, suiteDir, !r.log.empty());
      return status;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const ContractViolation& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  } catch (const ArithmeticError& e) {
    std::cerr << "arithmetic error: " << e.what() << '\n';
    return 4;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  }
  return 2;
}
