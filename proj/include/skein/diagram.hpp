#pragma once

// Morse-word encoding of framed, optionally oriented tangle diagrams.
//
// A diagram is read bottom to top. Between consecutive events sits a "level"
// of points numbered 0..width-1 from the left; level k lies below event k and
// the last level is the top boundary.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

enum class EventKind : std::uint8_t { Cup, Cap, Cross };

/// Cup(i) creates points i, i+1; Cap(i) joins points i, i+1; Cross(i, sign)
/// swaps them. sign = +1 means the strand from bottom-left to top-right
/// passes over, sign = -1 means it passes under.
struct Event {
  EventKind kind;
  int pos;
  int sign = 0;

  static Event cup(int i) { return {EventKind::Cup, i, 0}; }
  static Event cap(int i) { return {EventKind::Cap, i, 0}; }
  static Event cross(int i, int s) { return {EventKind::Cross, i, s}; }
  bool operator==(const Event&) const = default;
};

struct SliceWord {
  int widthIn = 0;
  std::vector<Event> events;
  int widthOut = 0;

  static SliceWord identity(int n) { return {n, {}, n}; }
  /// Widths of all levels (events.size() + 1 entries). Throws
  /// ContractViolation when an event is out of range or widthOut disagrees.
  std::vector<int> widths() const;
  void validate() const { (void)widths(); }
  int crossingCount() const;
  bool isClosed() const { return widthIn == 0 && widthOut == 0; }
  bool operator==(const SliceWord&) const = default;
};

enum class Axis : std::uint8_t { X, Y, Z };
Axis parseAxis(const std::string& s);
const char* axisName(Axis a);

/// Extra framing twists attached to the strand through point `pos` of
/// level `level`.
struct TwistAnchor {
  int level;
  int pos;
  int count;
  bool operator==(const TwistAnchor&) const = default;
};

/// One crossing passage of a traced strand.
struct CrossingVisit {
  int event;
  bool over;
  bool upward;
};

struct TracedComponent {
  bool closed = false;
  /// (level, pos) of every point on the strand, in traversal order.
  std::vector<std::pair<int, int>> nodes;
  /// +1 when the traversal moves upward through the matching node.
  std::vector<int> nodeDirections;
  std::vector<CrossingVisit> crossings;
};

class TangleDiagram {
 public:
  TangleDiagram() = default;
  /// Unoriented diagram.
  explicit TangleDiagram(SliceWord word);
  /// Oriented diagram: one direction (+1 up, -1 down) per bottom point and
  /// the direction of the left leg of every cup, in event order.
  TangleDiagram(SliceWord word, std::vector<int> bottomDirections, std::vector<int> cupDirections);

  /// n vertical strands, oriented upward when `oriented`.
  static TangleDiagram identity(int n, bool oriented);
  /// Braid-like tangle on n upward strands; generator +k is a positive
  /// crossing between strands k-1 and k (1-based), -k its inverse.
  static TangleDiagram braid(int n, const std::vector<int>& generators);

  const SliceWord& word() const { return word_; }
  int widthIn() const { return word_.widthIn; }
  int widthOut() const { return word_.widthOut; }
  bool oriented() const { return oriented_; }
  bool isClosed() const { return word_.isClosed(); }
  const std::vector<int>& bottomDirections() const { return bottom_; }
  const std::vector<int>& cupDirections() const { return cups_; }
  /// Point directions of every level; empty when unoriented.
  std::vector<std::vector<int>> levelDirections() const;
  std::vector<int> topDirections() const;

  const std::vector<TwistAnchor>& twistAnchors() const { return twists_; }
  void addTwist(int level, int pos, int count);
  /// Adds framing twists to the given component (traced order).
  void addComponentTwist(int component, int count);
  /// Total extra twists per component index.
  std::map<int, int> componentTwists() const;
  int totalTwists() const;
  TangleDiagram withoutTwists() const;

  /// Components in canonical order: ordered by their smallest point id
  /// (level-major, then position). Open strands start at their input end,
  /// closed ones follow the orientation or go upward from the smallest point.
  std::vector<TracedComponent> trace() const;
  int componentCount() const { return static_cast<int>(trace().size()); }
  /// Component index of every point, indexed [level][pos].
  std::vector<std::vector<int>> componentMap() const;

  /// Oriented sign of each event (0 for cups and caps).
  std::vector<int> crossingSigns() const;
  /// Writhe plus framing twists. Requires an oriented diagram.
  int taitNumber() const;

  bool operator==(const TangleDiagram& o) const = default;

 private:
  friend TangleDiagram compose(const TangleDiagram&, const TangleDiagram&);
  friend TangleDiagram tensor(const TangleDiagram&, const TangleDiagram&);
  void checkOrientation() const;

  SliceWord word_;
  bool oriented_ = false;
  std::vector<int> bottom_;
  std::vector<int> cups_;
  std::vector<TwistAnchor> twists_;
};

/// Orientation from per-level directions (as returned by levelDirections()).
TangleDiagram orientFromLevels(const TangleDiagram& d, const std::vector<std::vector<int>>& levels);

/// `bottom` below `top`.
TangleDiagram compose(const TangleDiagram& bottom, const TangleDiagram& top);
/// Side by side, `left` then `right`.
TangleDiagram tensor(const TangleDiagram& left, const TangleDiagram& right);
/// Identity strands left and right so that t occupies strands i..i+k-1 of n.
TangleDiagram placeAt(const TangleDiagram& t, int i, int n);

/// pi rotations. Y: top-bottom flip, X: left-right mirror, Z: both (in the
/// projection plane). Crossing types are preserved by all three; Y reverses
/// point directions.
TangleDiagram rotate(const TangleDiagram& t, Axis axis);
TangleDiagram reverseOrientation(const TangleDiagram& t);
/// Drops orientation data.
TangleDiagram forgetOrientation(const TangleDiagram& t);

/// Trace closure: top point j joined to bottom point j by an arc on the
/// right.
TangleDiagram traceClosure(const TangleDiagram& t);
/// Closure with planar matchings of the bottom and top boundary points.
TangleDiagram matchingClosure(const TangleDiagram& t, const std::vector<std::pair<int, int>>& bottomPairs,
                              const std::vector<std::pair<int, int>>& topPairs);
/// Plat closure: (0,1),(2,3),... at both ends.
TangleDiagram platClosure(const TangleDiagram& t);

/// Replaces every strand by two parallel strands following the blackboard
/// framing; framing twists become full twists of the pair.
TangleDiagram twoCable(const TangleDiagram& d);

// ---- random generation -------------------------------------------------------

struct RandomTangleSpec {
  int widthIn = 0;
  int widthOut = 0;
  bool oriented = false;
  /// Required boundary directions when oriented; empty means "any".
  std::vector<int> dirsIn;
  std::vector<int> dirsOut;
  int crossings = 4;
  /// How far above max(widthIn, widthOut) the width may grow.
  int extraWidth = 2;
  /// Probability that a step is a cup or cap rather than a crossing.
  double turnRate = 0.3;
};

TangleDiagram randomTangle(std::mt19937_64& rng, const RandomTangleSpec& spec);
TangleDiagram randomTangle(std::uint64_t seed, int strands, int crossings, bool oriented);
TangleDiagram randomClosedDiagram(std::mt19937_64& rng, int crossings, bool oriented, int maxWidth = 6);
TangleDiagram randomBraid(std::mt19937_64& rng, int strands, int length);

}  // namespace skein
