#pragma once

// Diagram-producing constructions (mutation, rotants, cyclic words,
// connected sums, cables) and their certificates.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/diagram_io.hpp"
#include "skein/invariants.hpp"
#include "skein/tl.hpp"

namespace skein {

// ---- mutation ----------------------------------------------------------------

/// A closed diagram split as below (0 -> w), a 2-tangle `inner` sitting on
/// strands position, position+1, and above (w -> 0).
struct MarkedLink {
  TangleDiagram below;
  TangleDiagram inner;
  TangleDiagram above;
  int position = 0;

  TangleDiagram assemble() const;
  /// True when each boundary point of the inner tangle lies on the same
  /// component as its image under the rotation.
  bool componentPreserving(Axis axis) const;
};

TangleDiagram mutate(const MarkedLink& m, Axis axis);

struct RandomMarkedLinkSpec {
  bool oriented = false;
  int innerCrossings = 2;
  int outerCrossings = 3;
  int width = 4;
};
MarkedLink randomMarkedLink(std::mt19937_64& rng, const RandomMarkedLinkSpec& spec);

// ---- rotors ------------------------------------------------------------------

/// Fundamental domain of an n-rotor: `arcs` radial points at the bottom,
/// two outer points followed by `arcs` radial points at the top.
struct Rotor {
  TangleDiagram segment;
  int order = 0;
  int arcs = 0;
};

/// The n segments chained around a center, radial arcs closed on the right:
/// a 0 -> 2n tangle whose top points are the rotor's boundary in order.
TangleDiagram assembleRotor(const Rotor& r);
/// Rotor rotated by pi about an axis in the projection plane, with its
/// orientation reversed when that is needed to match `stator`.
TangleDiagram rotatedRotor(const Rotor& r, const TangleDiagram& stator);
/// (L, r(L)) with L = rotor below stator.
std::pair<TangleDiagram, TangleDiagram> buildRotantPair(const Rotor& r, const TangleDiagram& stator);

struct RandomRotorSpec {
  int order = 3;
  int arcs = 1;
  int segmentCrossings = 2;
  int statorCrossings = 2;
  bool oriented = false;
  /// Segment built from an upward 3-strand tangle whose first strand meets
  /// the outer boundary; requires arcs = 2.
  bool braidLike = false;
};
std::pair<Rotor, TangleDiagram> randomRotorAndStator(std::mt19937_64& rng, const RandomRotorSpec& spec);

// ---- cyclic words -------------------------------------------------------------

struct Letter {
  /// 3 for a 3-tangle letter, 2 for a 2-tangle letter.
  int arity = 3;
  TangleDiagram tangle;
};

/// Letters composed bottom to top and closed around the annulus. Every
/// 2-tangle letter sits on strands twoTanglePosition, twoTanglePosition+1.
struct CyclicWord {
  std::vector<Letter> letters;
  int twoTanglePosition = 0;
};

enum class WordAction { RzPerLetter, RyPerLetter };

/// Replaces every 3-tangle letter by its rotation (then reverses its
/// orientation when `reverseAfterRotation`). RzPerLetter also moves the
/// 2-tangle letters to the mirrored strand pair.
CyclicWord rewriteCyclicWord(const CyclicWord& w, WordAction action, bool reverseAfterRotation);

/// The 3-tangle of the word (letters composed bottom to top).
TangleDiagram wordTangle(const CyclicWord& w);
/// Trace closure of the word with k extra full twists of the three strands.
TangleDiagram wordClosure(const CyclicWord& w, int fullTwists);
/// Skein class of the word in the bracket skein module of the annulus.
AnnulusClass wordAnnulusClass(const CyclicWord& w);

enum class WordOrientation { None, BraidLike, Alternating, Mixed };
/// Boundary directions of a letter for the given pattern (empty for None).
std::vector<int> letterDirections(WordOrientation o);

struct RandomWordSpec {
  int length = 6;
  int letterCrossings = 2;
  WordOrientation orientation = WordOrientation::None;
  /// Number of distinct 3-tangles (X, Y, ...) and 2-tangles used.
  int threeTangles = 1;
  int twoTangles = 2;
  int twoTanglePosition = 0;
};
CyclicWord randomCyclicWord(std::mt19937_64& rng, const RandomWordSpec& spec);

/// T_(1) T'_(2) as one 3-tangle letter, and T'_(2) T_(1).
std::pair<TangleDiagram, TangleDiagram> jonesPair(const TangleDiagram& t, const TangleDiagram& tPrime);

// ---- connected sums and cables ------------------------------------------------

/// (L1 # L2, L1 # -L2), summing component c1 of L1 with component c2 of L2
/// (indices in traced order).
std::pair<TangleDiagram, TangleDiagram> connectedSumPair(const TangleDiagram& l1, int c1, const TangleDiagram& l2,
                                                         int c2);
TangleDiagram connectedSum(const TangleDiagram& l1, int c1, const TangleDiagram& l2, int c2);

// ---- certificates -------------------------------------------------------------

struct Certificate {
  std::string construction;
  std::string theorem;
  TangleDiagram first, second;
  std::vector<EqualityEntry> entries;
  std::optional<std::uint64_t> seed;
  /// Named yes/no checks beyond polynomial equality (e.g. equal Tait numbers).
  std::vector<std::pair<std::string, bool>> checks;

  bool allEqual() const;
  Json toJson() const;
};

Certificate certify(const std::string& construction, const std::string& theorem, const TangleDiagram& first,
                    const TangleDiagram& second, const std::vector<InvariantKind>& kinds, const Caps& caps,
                    std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace skein
