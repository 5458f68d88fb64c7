#include "skein/constructions.hpp"

#include <algorithm>
#include <limits>

namespace skein {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
int randomSign(std::mt19937_64& rng) { return pick(rng, 0, 1) ? 1 : -1; }

TangleDiagram identityWithDirections(const std::vector<int>& dirs) {
  return TangleDiagram(SliceWord::identity(static_cast<int>(dirs.size())), dirs, {});
}

// `t` on strands pos.. of a level of the given width. `dirs` are the point
// directions of that level (ignored for unoriented t).
TangleDiagram embed(const TangleDiagram& t, int pos, int width, const std::vector<int>& dirs) {
  if (pos < 0 || pos + t.widthIn() > width) throw ContractViolation("embedding out of range");
  if (!t.oriented()) return placeAt(t, pos, width);
  if (static_cast<int>(dirs.size()) != width) throw ContractViolation("embedding: direction count");
  std::vector<int> left(dirs.begin(), dirs.begin() + pos);
  std::vector<int> mid(dirs.begin() + pos, dirs.begin() + pos + t.widthIn());
  std::vector<int> right(dirs.begin() + pos + t.widthIn(), dirs.end());
  if (mid != t.bottomDirections()) throw ContractViolation("embedding: orientation mismatch");
  return tensor(tensor(identityWithDirections(left), t), identityWithDirections(right));
}

std::vector<int> topDirs(const TangleDiagram& t) { return t.oriented() ? t.topDirections() : std::vector<int>{}; }

TangleDiagram withWord(const TangleDiagram& like, const SliceWord& w, const std::vector<int>& cups) {
  if (!like.oriented()) return TangleDiagram(w);
  return TangleDiagram(w, like.bottomDirections(), cups);
}

// Crossings inserted below event `level`; the cup list is unaffected.
TangleDiagram insertCrossings(const TangleDiagram& d, int level, const std::vector<Event>& crossings) {
  SliceWord w = d.word();
  w.events.insert(w.events.begin() + level, crossings.begin(), crossings.end());
  return withWord(d, w, d.cupDirections());
}

// Splits a closed diagram below event `level` into (0 -> w) and (w -> 0).
std::pair<TangleDiagram, TangleDiagram> splitAt(const TangleDiagram& d, int level) {
  const SliceWord& w = d.word();
  const int width = w.widths()[level];
  SliceWord lower{w.widthIn, std::vector<Event>(w.events.begin(), w.events.begin() + level), width};
  SliceWord upper{width, std::vector<Event>(w.events.begin() + level, w.events.end()), w.widthOut};
  if (!d.oriented()) return {TangleDiagram(lower), TangleDiagram(upper)};
  std::size_t cupsBelow = 0;
  for (int k = 0; k < level; ++k) cupsBelow += w.events[k].kind == EventKind::Cup ? 1 : 0;
  const auto& cups = d.cupDirections();
  std::vector<int> lowCups(cups.begin(), cups.begin() + static_cast<long>(cupsBelow));
  std::vector<int> highCups(cups.begin() + static_cast<long>(cupsBelow), cups.end());
  TangleDiagram a(lower, d.bottomDirections(), lowCups);
  TangleDiagram b(upper, a.topDirections(), highCups);
  return {a, b};
}

struct Candidate {
  int level = 0;
  int pos = 0;
  int dir = 0;
  int cost = 0;
};

std::vector<Candidate> candidates(const TangleDiagram& d, int component, bool towardRight) {
  if (component < 0 || component >= d.componentCount()) throw ContractViolation("component index out of range");
  auto cmap = d.componentMap();
  auto widths = d.word().widths();
  auto dirs = d.levelDirections();
  std::vector<Candidate> out;
  for (std::size_t l = 0; l < widths.size(); ++l) {
    for (int p = 0; p < widths[l]; ++p) {
      if (cmap[l][p] != component) continue;
      int cost = towardRight ? widths[l] - 1 - p : p;
      out.push_back({static_cast<int>(l), p, d.oriented() ? dirs[l][p] : 0, cost});
    }
  }
  return out;
}

// Random tangle whose top directions satisfy `accept`. Rejection sampling
// keeps the requested crossing count; after `attempts` failures the
// directions are forced with `fallback`, which may add crossings.
template <typename Accept>
TangleDiagram randomTangleWithTop(std::mt19937_64& rng, RandomTangleSpec spec, Accept accept,
                                  const std::vector<int>& fallback, int attempts = 200) {
  spec.dirsOut.clear();
  for (int i = 0; i < attempts; ++i) {
    TangleDiagram t = randomTangle(rng, spec);
    if (accept(t.topDirections())) return t;
  }
  spec.dirsOut = fallback;
  return randomTangle(rng, spec);
}

const TLAlgebra& tl3() {
  static const TLAlgebra algebra(3);
  return algebra;
}

TangleDiagram fullTwist(const std::vector<int>& dirs) {
  SliceWord w{3, {}, 3};
  for (int r = 0; r < 3; ++r) {
    w.events.push_back(Event::cross(0, 1));
    w.events.push_back(Event::cross(1, 1));
  }
  if (dirs.empty()) return TangleDiagram(w);
  return TangleDiagram(w, dirs, {});
}

}  // namespace

// ---- mutation -------------------------------------------------------------------

TangleDiagram MarkedLink::assemble() const {
  TangleDiagram mid = embed(inner, position, below.widthOut(), topDirs(below));
  return compose(below, compose(mid, above));
}

bool MarkedLink::componentPreserving(Axis axis) const {
  TangleDiagram d = assemble();
  auto cmap = d.componentMap();
  const int lb = static_cast<int>(below.word().events.size());
  const int lt = lb + static_cast<int>(inner.word().events.size());
  const int b0 = cmap[lb][position], b1 = cmap[lb][position + 1];
  const int t0 = cmap[lt][position], t1 = cmap[lt][position + 1];
  switch (axis) {
    case Axis::X: return b0 == b1 && t0 == t1;
    case Axis::Y: return b0 == t0 && b1 == t1;
    case Axis::Z: return b0 == t1 && b1 == t0;
  }
  return false;
}

TangleDiagram mutate(const MarkedLink& m, Axis axis) {
  if (m.inner.widthIn() != 2 || m.inner.widthOut() != 2) throw ContractViolation("mutation needs a 2-tangle");
  TangleDiagram r = rotate(m.inner, axis);
  if (r.oriented() &&
      (r.bottomDirections() != m.inner.bottomDirections() || r.topDirections() != m.inner.topDirections())) {
    r = reverseOrientation(r);
    if (r.bottomDirections() != m.inner.bottomDirections() || r.topDirections() != m.inner.topDirections())
      throw ContractViolation("rotated tangle cannot be oriented like its hole");
  }
  MarkedLink out = m;
  out.inner = r;
  return out.assemble();
}

MarkedLink randomMarkedLink(std::mt19937_64& rng, const RandomMarkedLinkSpec& spec) {
  if (spec.width < 2 || spec.width % 2) throw ContractViolation("marked link width must be even and >= 2");
  MarkedLink m;
  RandomTangleSpec below;
  below.widthOut = spec.width;
  below.oriented = spec.oriented;
  below.crossings = spec.outerCrossings / 2;
  below.extraWidth = 2;
  m.below = randomTangle(rng, below);
  m.position = pick(rng, 0, spec.width - 2);

  RandomTangleSpec inner;
  inner.widthIn = inner.widthOut = 2;
  inner.oriented = spec.oriented;
  inner.crossings = spec.innerCrossings;
  inner.extraWidth = 2;
  if (spec.oriented) {
    auto dirs = m.below.topDirections();
    inner.dirsIn = {dirs[m.position], dirs[m.position + 1]};
    m.inner = randomTangleWithTop(
        rng, inner, [](const std::vector<int>&) { return true; }, inner.dirsIn, 1);
    inner.dirsOut = m.inner.topDirections();
  } else {
    m.inner = randomTangle(rng, inner);
  }

  RandomTangleSpec above;
  above.widthIn = spec.width;
  above.oriented = spec.oriented;
  above.crossings = spec.outerCrossings - below.crossings;
  above.extraWidth = 2;
  if (spec.oriented) {
    auto dirs = m.below.topDirections();
    dirs[m.position] = inner.dirsOut[0];
    dirs[m.position + 1] = inner.dirsOut[1];
    above.dirsIn = dirs;
  }
  m.above = randomTangle(rng, above);
  return m;
}

// ---- rotors ---------------------------------------------------------------------

TangleDiagram assembleRotor(const Rotor& r) {
  const int n = r.order, k = r.arcs;
  const TangleDiagram& seg = r.segment;
  if (n < 1 || k < 1) throw ContractViolation("rotor needs order >= 1 and at least one arc");
  if (seg.widthIn() != k || seg.widthOut() != k + 2) throw ContractViolation("rotor segment arity mismatch");
  const bool oriented = seg.oriented();
  std::vector<int> radial;
  if (oriented) {
    radial = seg.bottomDirections();
    auto top = seg.topDirections();
    if (!std::equal(radial.begin(), radial.end(), top.begin() + 2))
      throw ContractViolation("rotor segment: radial orientations do not chain");
  }
  TangleDiagram chain = seg;
  for (int j = 1; j < n; ++j) chain = compose(chain, embed(seg, 2 * j, 2 * j + k, topDirs(chain)));

  SliceWord cupWord{0, {}, 2 * k};
  for (int j = 0; j < k; ++j) cupWord.events.push_back(Event::cup(j));
  SliceWord capWord{2 * n + 2 * k, {}, 2 * n};
  for (int i = 0; i < k; ++i) capWord.events.push_back(Event::cap(2 * n + k - 1 - i));
  if (!oriented) {
    TangleDiagram mid = tensor(chain, TangleDiagram::identity(k, false));
    return compose(compose(TangleDiagram(cupWord), mid), TangleDiagram(capWord));
  }
  std::vector<int> returning;
  for (int j = k - 1; j >= 0; --j) returning.push_back(-radial[j]);
  TangleDiagram cups(cupWord, {}, radial);
  TangleDiagram mid = tensor(chain, identityWithDirections(returning));
  TangleDiagram caps(capWord, mid.topDirections(), {});
  return compose(compose(cups, mid), caps);
}

TangleDiagram rotatedRotor(const Rotor& r, const TangleDiagram& stator) {
  TangleDiagram x = rotate(assembleRotor(r), Axis::X);
  if (!x.oriented()) return x;
  if (x.topDirections() == stator.bottomDirections()) return x;
  TangleDiagram reversed = reverseOrientation(x);
  if (reversed.topDirections() == stator.bottomDirections()) return reversed;
  throw ContractViolation("rotated rotor cannot be oriented like the stator");
}

std::pair<TangleDiagram, TangleDiagram> buildRotantPair(const Rotor& r, const TangleDiagram& stator) {
  if (stator.widthIn() != 2 * r.order || stator.widthOut() != 0)
    throw ContractViolation("stator arity does not match the rotor");
  return {compose(assembleRotor(r), stator), compose(rotatedRotor(r, stator), stator)};
}

std::pair<Rotor, TangleDiagram> randomRotorAndStator(std::mt19937_64& rng, const RandomRotorSpec& spec) {
  Rotor r;
  r.order = spec.order;
  r.arcs = spec.arcs;
  if (spec.braidLike) {
    if (spec.arcs != 2) throw ContractViolation("braid-like segments have two arcs");
    RandomTangleSpec g;
    g.widthIn = g.widthOut = 3;
    g.oriented = true;
    g.dirsIn = g.dirsOut = {1, 1, 1};
    g.crossings = spec.segmentCrossings;
    g.extraWidth = 1;
    TangleDiagram braidPart = randomTangleWithTop(
        rng, g, [](const std::vector<int>& top) { return top == std::vector<int>{1, 1, 1}; }, g.dirsOut);
    TangleDiagram cup(SliceWord{2, {Event::cup(0)}, 4}, {1, 1}, {-1});
    r.segment = compose(cup, embed(braidPart, 1, 4, cup.topDirections()));
  } else {
    RandomTangleSpec s;
    s.widthIn = spec.arcs;
    s.widthOut = spec.arcs + 2;
    s.oriented = spec.oriented;
    s.crossings = spec.segmentCrossings;
    s.extraWidth = 2;
    if (spec.oriented) {
      for (int j = 0; j < spec.arcs; ++j) s.dirsIn.push_back(randomSign(rng));
      int o = randomSign(rng);
      std::vector<int> fallback{o, -o};
      fallback.insert(fallback.end(), s.dirsIn.begin(), s.dirsIn.end());
      const std::vector<int> radial = s.dirsIn;
      auto chains = [&radial](const std::vector<int>& top) {
        return top[0] == -top[1] && std::equal(radial.begin(), radial.end(), top.begin() + 2);
      };
      r.segment = randomTangleWithTop(rng, s, chains, fallback);
    } else {
      r.segment = randomTangle(rng, s);
    }
  }
  TangleDiagram rotor = assembleRotor(r);
  RandomTangleSpec st;
  st.widthIn = 2 * spec.order;
  st.oriented = rotor.oriented();
  if (st.oriented) st.dirsIn = rotor.topDirections();
  st.crossings = spec.statorCrossings;
  st.extraWidth = 0;
  st.turnRate = 0.5;
  return {r, randomTangle(rng, st)};
}

// ---- cyclic words ---------------------------------------------------------------

std::vector<int> letterDirections(WordOrientation o) {
  switch (o) {
    case WordOrientation::None: return {};
    case WordOrientation::BraidLike: return {1, 1, 1};
    case WordOrientation::Alternating: return {1, -1, 1};
    case WordOrientation::Mixed: return {1, 1, -1};
  }
  return {};
}

TangleDiagram wordTangle(const CyclicWord& w) {
  if (w.letters.empty()) throw ContractViolation("empty cyclic word");
  if (w.twoTanglePosition < 0 || w.twoTanglePosition > 1) throw ContractViolation("2-tangle position must be 0 or 1");
  // Directions of the level below the first letter, when oriented.
  std::vector<int> base;
  for (const Letter& l : w.letters) {
    if (l.arity == 3 && l.tangle.oriented()) {
      base = l.tangle.bottomDirections();
      break;
    }
  }
  if (base.empty() && w.letters.front().tangle.oriented()) {
    base = w.letters.front().tangle.bottomDirections();
    base.insert(base.begin() + (w.twoTanglePosition == 0 ? 2 : 0), 1);
  }
  TangleDiagram out;
  bool first = true;
  for (const Letter& l : w.letters) {
    TangleDiagram piece;
    if (l.arity == 3) {
      piece = l.tangle;
    } else if (l.arity == 2) {
      std::vector<int> dirs;
      if (l.tangle.oriented()) dirs = first ? base : out.topDirections();
      piece = embed(l.tangle, w.twoTanglePosition, 3, dirs);
    } else {
      throw ContractViolation("letters are 2- or 3-tangles");
    }
    if (piece.widthIn() != 3 || piece.widthOut() != 3) throw ContractViolation("word letters must be 3-strand");
    out = first ? piece : compose(out, piece);
    first = false;
  }
  if (out.oriented() && out.topDirections() != out.bottomDirections())
    throw ContractViolation("cyclic word does not close up consistently");
  return out;
}

TangleDiagram wordClosure(const CyclicWord& w, int fullTwists) {
  TangleDiagram t = wordTangle(w);
  for (int k = 0; k < fullTwists; ++k) t = compose(t, fullTwist(t.oriented() ? t.topDirections() : std::vector<int>{}));
  return traceClosure(t);
}

AnnulusClass wordAnnulusClass(const CyclicWord& w) {
  return tl3().annulusReduce(tl3().fromTangle(forgetOrientation(wordTangle(w))));
}

CyclicWord rewriteCyclicWord(const CyclicWord& w, WordAction action, bool reverseAfterRotation) {
  CyclicWord out = w;
  const Axis axis = action == WordAction::RzPerLetter ? Axis::Z : Axis::Y;
  for (Letter& l : out.letters) {
    if (l.arity == 3) {
      l.tangle = rotate(l.tangle, axis);
      if (reverseAfterRotation) l.tangle = reverseOrientation(l.tangle);
    } else if (action == WordAction::RzPerLetter) {
      l.tangle = rotate(l.tangle, Axis::X);
    }
  }
  if (action == WordAction::RzPerLetter) out.twoTanglePosition = 1 - w.twoTanglePosition;
  (void)wordTangle(out);
  return out;
}

CyclicWord randomCyclicWord(std::mt19937_64& rng, const RandomWordSpec& spec) {
  if (spec.length < 1 || spec.threeTangles < 1) throw ContractViolation("random word needs letters");
  const std::vector<int> dirs = letterDirections(spec.orientation);
  const bool oriented = !dirs.empty();
  std::vector<TangleDiagram> threes, twos;
  for (int i = 0; i < spec.threeTangles; ++i) {
    RandomTangleSpec s;
    s.widthIn = s.widthOut = 3;
    s.oriented = oriented;
    s.dirsIn = s.dirsOut = dirs;
    s.crossings = spec.letterCrossings;
    s.extraWidth = 1;
    if (oriented) {
      threes.push_back(randomTangleWithTop(
          rng, s, [&dirs](const std::vector<int>& top) { return top == dirs; }, dirs));
    } else {
      threes.push_back(randomTangle(rng, s));
    }
  }
  for (int i = 0; i < spec.twoTangles; ++i) {
    RandomTangleSpec s;
    s.widthIn = s.widthOut = 2;
    s.oriented = oriented;
    if (oriented) s.dirsIn = s.dirsOut = {dirs[spec.twoTanglePosition], dirs[spec.twoTanglePosition + 1]};
    s.crossings = std::max(1, spec.letterCrossings / 2);
    s.extraWidth = 2;
    if (oriented) {
      const std::vector<int> want = s.dirsIn;
      twos.push_back(randomTangleWithTop(
          rng, s, [&want](const std::vector<int>& top) { return top == want; }, want));
    } else {
      twos.push_back(randomTangle(rng, s));
    }
  }
  CyclicWord w;
  w.twoTanglePosition = spec.twoTanglePosition;
  const int pool = spec.threeTangles + spec.twoTangles;
  for (int i = 0; i < spec.length; ++i) {
    int c = i == 0 ? pick(rng, 0, spec.threeTangles - 1) : pick(rng, 0, pool - 1);
    if (c < spec.threeTangles) {
      w.letters.push_back({3, threes[c]});
    } else {
      w.letters.push_back({2, twos[c - spec.threeTangles]});
    }
  }
  return w;
}

std::pair<TangleDiagram, TangleDiagram> jonesPair(const TangleDiagram& t, const TangleDiagram& tPrime) {
  TangleDiagram a = placeAt(forgetOrientation(t), 0, 3);
  TangleDiagram b = placeAt(forgetOrientation(tPrime), 1, 3);
  return {compose(a, b), compose(b, a)};
}

// ---- connected sums ---------------------------------------------------------------

namespace {

// Index of component c of d after the rigid rotation `axis`.
int rotatedComponent(const TangleDiagram& d, int c, Axis axis, const TangleDiagram& rotated) {
  auto cmap = d.componentMap();
  const int last = static_cast<int>(d.word().events.size());
  for (int l = 0; l <= last; ++l) {
    for (int p = 0; p < static_cast<int>(cmap[l].size()); ++p) {
      if (cmap[l][p] != c) continue;
      const int w = static_cast<int>(cmap[l].size());
      const int level = axis == Axis::X ? l : last - l;
      const int pos = axis == Axis::Y ? p : w - 1 - p;
      return rotated.componentMap()[level][pos];
    }
  }
  throw ContractViolation("component has no points");
}

struct Band {
  Candidate first, second;
  int cost = std::numeric_limits<int>::max();
};

Band cheapestBand(const TangleDiagram& l1, int c1, const TangleDiagram& l2, int c2) {
  Band best;
  for (const auto& a : candidates(l1, c1, true)) {
    for (const auto& b : candidates(l2, c2, false)) {
      if (l1.oriented() && a.dir != -b.dir) continue;
      if (a.cost + b.cost < best.cost) best = {a, b, a.cost + b.cost};
    }
  }
  return best;
}

}  // namespace

TangleDiagram connectedSum(const TangleDiagram& l1, int c1, const TangleDiagram& l2in, int c2in) {
  if (!l1.isClosed() || !l2in.isClosed()) throw ContractViolation("connected sum needs closed diagrams");
  if (l1.oriented() != l2in.oriented()) throw ContractViolation("connected sum: orientation data on one side only");
  if (l1.totalTwists() != 0 || l2in.totalTwists() != 0)
    throw ContractViolation("connected sum of diagrams with framing twists is not supported");
  if (c2in < 0 || c2in >= l2in.componentCount()) throw ContractViolation("component index out of range");
  const bool oriented = l1.oriented();
  // The second diagram may be turned rigidly in space first, whichever
  // position needs the fewest finger-move crossings.
  TangleDiagram l2 = l2in;
  int c2 = c2in;
  Band band = cheapestBand(l1, c1, l2, c2);
  for (Axis axis : {Axis::Y, Axis::X, Axis::Z}) {
    if (band.cost == 0) break;
    TangleDiagram turned = rotate(l2in, axis);
    int c = rotatedComponent(l2in, c2in, axis, turned);
    Band b = cheapestBand(l1, c1, turned, c);
    if (b.cost < band.cost) {
      band = b;
      l2 = turned;
      c2 = c;
    }
  }
  if (band.cost == std::numeric_limits<int>::max()) throw ContractViolation("no compatible band for the connected sum");
  const Candidate* best1 = &band.first;
  const Candidate* best2 = &band.second;

  // Finger moves bring the two strands to the outer face, passing over
  // everything on the way.
  const int w1 = l1.word().widths()[best1->level];
  std::vector<Event> out1, back1;
  for (int j = best1->pos; j < w1 - 1; ++j) out1.push_back(Event::cross(j, 1));
  for (int j = w1 - 2; j >= best1->pos; --j) back1.push_back(Event::cross(j, -1));
  std::vector<Event> finger1 = out1;
  finger1.insert(finger1.end(), back1.begin(), back1.end());
  TangleDiagram d1 = insertCrossings(l1, best1->level, finger1);
  auto [lower1, upper1] = splitAt(d1, best1->level + static_cast<int>(out1.size()));

  std::vector<Event> out2, back2;
  for (int j = best2->pos - 1; j >= 0; --j) out2.push_back(Event::cross(j, -1));
  for (int j = 0; j < best2->pos; ++j) back2.push_back(Event::cross(j, 1));
  std::vector<Event> finger2 = out2;
  finger2.insert(finger2.end(), back2.begin(), back2.end());
  TangleDiagram d2 = insertCrossings(l2, best2->level, finger2);
  auto [lower2, upper2] = splitAt(d2, best2->level + static_cast<int>(out2.size()));

  const int w2 = lower2.widthOut();
  SliceWord bandWord{w1 + w2, {Event::cap(w1 - 1), Event::cup(w1 - 1)}, w1 + w2};
  TangleDiagram bandPart;
  if (oriented) {
    std::vector<int> dirs = lower1.topDirections();
    auto d2dirs = lower2.topDirections();
    dirs.insert(dirs.end(), d2dirs.begin(), d2dirs.end());
    bandPart = TangleDiagram(bandWord, dirs, {dirs[w1 - 1]});
  } else {
    bandPart = TangleDiagram(bandWord);
  }
  TangleDiagram bottom = tensor(lower1, lower2);
  TangleDiagram top;
  if (oriented) {
    auto dirs = bandPart.topDirections();
    std::vector<int> leftDirs(dirs.begin(), dirs.begin() + w1);
    top = compose(tensor(identityWithDirections(leftDirs), upper2), upper1);
  } else {
    top = compose(tensor(TangleDiagram::identity(w1, false), upper2), upper1);
  }
  return compose(compose(bottom, bandPart), top);
}

std::pair<TangleDiagram, TangleDiagram> connectedSumPair(const TangleDiagram& l1, int c1, const TangleDiagram& l2,
                                                         int c2) {
  if (!l1.oriented() || !l2.oriented()) throw ContractViolation("connected sum pair needs oriented links");
  return {connectedSum(l1, c1, l2, c2), connectedSum(l1, c1, reverseOrientation(l2), c2)};
}

// ---- certificates -------------------------------------------------------------------

bool Certificate::allEqual() const {
  return std::all_of(entries.begin(), entries.end(), [](const EqualityEntry& e) { return e.equal; }) &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

Json Certificate::toJson() const {
  Json j;
  j["construction"] = construction;
  j["theorem"] = theorem;
  j["diagrams"] = Json::array({diagramToJson(first), diagramToJson(second)});
  Json inv = Json::object();
  Json verdicts = Json::object();
  for (const auto& e : entries) {
    inv[invariantName(e.kind)] = Json::array({e.left.str(), e.right.str()});
    verdicts[invariantName(e.kind)] = e.equal;
  }
  for (const auto& [name, ok] : checks) verdicts[name] = ok;
  j["invariants"] = inv;
  j["verdicts"] = verdicts;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

Certificate certify(const std::string& construction, const std::string& theorem, const TangleDiagram& first,
                    const TangleDiagram& second, const std::vector<InvariantKind>& kinds, const Caps& caps,
                    std::optional<std::uint64_t> seed) {
  Certificate c{construction, theorem, first, second, {}, seed};
  c.entries = verifyEqual(first, second, kinds, caps).entries;
  return c;
}

}  // namespace skein
