#include "skein/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace skein {

std::vector<int> SliceWord::widths() const {
  if (widthIn < 0) throw ContractViolation("negative width");
  std::vector<int> w;
  w.reserve(events.size() + 1);
  int cur = widthIn;
  w.push_back(cur);
  for (std::size_t k = 0; k < events.size(); ++k) {
    const Event& e = events[k];
    switch (e.kind) {
      case EventKind::Cup:
        if (e.pos < 0 || e.pos > cur) throw ContractViolation("cup out of range at event " + std::to_string(k));
        cur += 2;
        break;
      case EventKind::Cap:
        if (e.pos < 0 || e.pos + 1 >= cur) throw ContractViolation("cap out of range at event " + std::to_string(k));
        cur -= 2;
        break;
      case EventKind::Cross:
        if (e.pos < 0 || e.pos + 1 >= cur)
          throw ContractViolation("crossing out of range at event " + std::to_string(k));
        if (e.sign != 1 && e.sign != -1) throw ContractViolation("crossing sign must be +1 or -1");
        break;
    }
    w.push_back(cur);
  }
  if (cur != widthOut) throw ContractViolation("final width does not match width_out");
  return w;
}

int SliceWord::crossingCount() const {
  return static_cast<int>(
      std::count_if(events.begin(), events.end(), [](const Event& e) { return e.kind == EventKind::Cross; }));
}

Axis parseAxis(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  throw ContractViolation("unknown axis '" + s + "'");
}

const char* axisName(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

// ---- construction ------------------------------------------------------------

TangleDiagram::TangleDiagram(SliceWord word) : word_(std::move(word)) { word_.validate(); }

TangleDiagram::TangleDiagram(SliceWord word, std::vector<int> bottomDirections, std::vector<int> cupDirections)
    : word_(std::move(word)), oriented_(true), bottom_(std::move(bottomDirections)), cups_(std::move(cupDirections)) {
  word_.validate();
  checkOrientation();
}

void TangleDiagram::checkOrientation() const {
  if (static_cast<int>(bottom_.size()) != word_.widthIn)
    throw ContractViolation("orientation: wrong number of bottom directions");
  std::size_t cupCount = 0;
  for (const auto& e : word_.events) cupCount += e.kind == EventKind::Cup;
  if (cups_.size() != cupCount) throw ContractViolation("orientation: wrong number of cup directions");
  auto unit = [](int d) { return d == 1 || d == -1; };
  if (!std::all_of(bottom_.begin(), bottom_.end(), unit) || !std::all_of(cups_.begin(), cups_.end(), unit))
    throw ContractViolation("orientation: directions must be +1 or -1");
  (void)levelDirections();
}

std::vector<std::vector<int>> TangleDiagram::levelDirections() const {
  if (!oriented_) return {};
  std::vector<std::vector<int>> levels;
  levels.reserve(word_.events.size() + 1);
  std::vector<int> cur = bottom_;
  levels.push_back(cur);
  std::size_t cup = 0;
  for (std::size_t k = 0; k < word_.events.size(); ++k) {
    const Event& e = word_.events[k];
    switch (e.kind) {
      case EventKind::Cup: {
        int f = cups_[cup++];
        cur.insert(cur.begin() + e.pos, {f, -f});
        break;
      }
      case EventKind::Cap:
        if (cur[e.pos] != -cur[e.pos + 1])
          throw ContractViolation("orientation: cap joins equally directed strands at event " + std::to_string(k));
        cur.erase(cur.begin() + e.pos, cur.begin() + e.pos + 2);
        break;
      case EventKind::Cross:
        std::swap(cur[e.pos], cur[e.pos + 1]);
        break;
    }
    levels.push_back(cur);
  }
  return levels;
}

std::vector<int> TangleDiagram::topDirections() const {
  if (!oriented_) return {};
  return levelDirections().back();
}

TangleDiagram TangleDiagram::identity(int n, bool oriented) {
  if (oriented) return TangleDiagram(SliceWord::identity(n), std::vector<int>(n, 1), {});
  return TangleDiagram(SliceWord::identity(n));
}

TangleDiagram TangleDiagram::braid(int n, const std::vector<int>& generators) {
  SliceWord w = SliceWord::identity(n);
  for (int g : generators) {
    if (g == 0 || std::abs(g) >= n) throw ContractViolation("braid generator out of range");
    w.events.push_back(Event::cross(std::abs(g) - 1, g > 0 ? 1 : -1));
  }
  return TangleDiagram(w, std::vector<int>(n, 1), {});
}

// ---- framing -------------------------------------------------------------------

void TangleDiagram::addTwist(int level, int pos, int count) {
  auto w = word_.widths();
  if (level < 0 || level >= static_cast<int>(w.size()) || pos < 0 || pos >= w[level])
    throw ContractViolation("twist anchor out of range");
  if (count == 0) return;
  for (auto& a : twists_) {
    if (a.level == level && a.pos == pos) {
      a.count += count;
      if (a.count == 0) twists_.erase(std::find(twists_.begin(), twists_.end(), a));
      return;
    }
  }
  twists_.push_back({level, pos, count});
}

void TangleDiagram::addComponentTwist(int component, int count) {
  auto comps = trace();
  if (component < 0 || component >= static_cast<int>(comps.size()))
    throw ContractViolation("invalid component index " + std::to_string(component));
  const auto& node = *std::min_element(comps[component].nodes.begin(), comps[component].nodes.end());
  addTwist(node.first, node.second, count);
}

std::map<int, int> TangleDiagram::componentTwists() const {
  std::map<int, int> out;
  if (twists_.empty()) return out;
  auto cmap = componentMap();
  for (const auto& a : twists_) out[cmap[a.level][a.pos]] += a.count;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

int TangleDiagram::totalTwists() const {
  int t = 0;
  for (const auto& a : twists_) t += a.count;
  return t;
}

TangleDiagram TangleDiagram::withoutTwists() const {
  TangleDiagram d = *this;
  d.twists_.clear();
  return d;
}

// ---- tracing ---------------------------------------------------------------------

namespace {

struct WalkState {
  int level;
  int pos;
  int dir;
  bool operator==(const WalkState&) const = default;
};

class Walker {
 public:
  explicit Walker(const SliceWord& w) : word_(w), widths_(w.widths()) {
    offset_.push_back(0);
    for (int x : widths_) offset_.push_back(offset_.back() + x);
  }

  int levels() const { return static_cast<int>(widths_.size()); }
  int width(int k) const { return widths_[k]; }
  int nodeId(int k, int p) const { return offset_[k] + p; }
  int nodeCount() const { return offset_.back(); }

  // Next point along the strand, and the crossing passed on the way if any.
  std::optional<WalkState> next(const WalkState& s, std::optional<CrossingVisit>* visit) const {
    if (visit) visit->reset();
    const int last = static_cast<int>(word_.events.size());
    const int p = s.pos;
    if (s.dir > 0) {
      if (s.level == last) return std::nullopt;
      const Event& e = word_.events[s.level];
      const int i = e.pos;
      switch (e.kind) {
        case EventKind::Cross:
          if (p == i || p == i + 1) {
            if (visit) *visit = CrossingVisit{s.level, p == i ? e.sign > 0 : e.sign < 0, true};
            return WalkState{s.level + 1, p == i ? i + 1 : i, 1};
          }
          return WalkState{s.level + 1, p, 1};
        case EventKind::Cap:
          if (p == i) return WalkState{s.level, i + 1, -1};
          if (p == i + 1) return WalkState{s.level, i, -1};
          return WalkState{s.level + 1, p < i ? p : p - 2, 1};
        case EventKind::Cup:
          return WalkState{s.level + 1, p < i ? p : p + 2, 1};
      }
    } else {
      if (s.level == 0) return std::nullopt;
      const int ev = s.level - 1;
      const Event& e = word_.events[ev];
      const int i = e.pos;
      switch (e.kind) {
        case EventKind::Cross:
          if (p == i || p == i + 1) {
            if (visit) *visit = CrossingVisit{ev, p == i ? e.sign < 0 : e.sign > 0, false};
            return WalkState{ev, p == i ? i + 1 : i, -1};
          }
          return WalkState{ev, p, -1};
        case EventKind::Cup:
          if (p == i) return WalkState{s.level, i + 1, 1};
          if (p == i + 1) return WalkState{s.level, i, 1};
          return WalkState{ev, p < i ? p : p - 2, -1};
        case EventKind::Cap:
          return WalkState{ev, p < i ? p : p + 2, -1};
      }
    }
    return std::nullopt;
  }

  // Walks from `start` until the strand ends or closes up.
  TracedComponent walk(WalkState start) const {
    TracedComponent c;
    WalkState s = start;
    std::optional<CrossingVisit> visit;
    while (true) {
      c.nodes.emplace_back(s.level, s.pos);
      c.nodeDirections.push_back(s.dir);
      auto n = next(s, &visit);
      if (visit) c.crossings.push_back(*visit);
      if (!n) break;
      if (*n == start) {
        c.closed = true;
        break;
      }
      s = *n;
    }
    return c;
  }

 private:
  const SliceWord& word_;
  std::vector<int> widths_;
  std::vector<int> offset_;
};

}  // namespace

std::vector<TracedComponent> TangleDiagram::trace() const {
  Walker walker(word_);
  auto dirs = levelDirections();
  const int last = walker.levels() - 1;
  std::vector<char> seen(walker.nodeCount(), 0);
  std::vector<TracedComponent> out;
  for (int k = 0; k < walker.levels(); ++k) {
    for (int p = 0; p < walker.width(k); ++p) {
      if (seen[walker.nodeId(k, p)]) continue;
      // Discover the whole strand first to pick its canonical start.
      TracedComponent probe = walker.walk({k, p, 1});
      std::vector<std::pair<int, int>> ends;
      if (!probe.closed) {
        ends.push_back(probe.nodes.back());
        TracedComponent back = walker.walk({k, p, -1});
        ends.push_back(back.nodes.back());
      }
      WalkState start{k, p, 1};
      if (probe.closed) {
        if (oriented_) start.dir = dirs[k][p];
      } else {
        std::sort(ends.begin(), ends.end());
        std::pair<int, int> chosen = ends.front();
        if (oriented_) {
          for (const auto& e : ends) {
            int d = dirs[e.first][e.second];
            if ((e.first == 0 && d == 1) || (e.first == last && d == -1)) {
              chosen = e;
              break;
            }
          }
          start = {chosen.first, chosen.second, dirs[chosen.first][chosen.second]};
        } else {
          start = {chosen.first, chosen.second, chosen.first == 0 ? 1 : -1};
        }
      }
      TracedComponent comp = walker.walk(start);
      for (const auto& [lk, lp] : comp.nodes) seen[walker.nodeId(lk, lp)] = 1;
      out.push_back(std::move(comp));
    }
  }
  return out;
}

std::vector<std::vector<int>> TangleDiagram::componentMap() const {
  auto w = word_.widths();
  std::vector<std::vector<int>> map(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) map[k].assign(w[k], -1);
  auto comps = trace();
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto& [k, p] : comps[c].nodes) map[k][p] = static_cast<int>(c);
  return map;
}

std::vector<int> TangleDiagram::crossingSigns() const {
  if (!oriented_) throw ContractViolation("crossing signs need an oriented diagram");
  auto dirs = levelDirections();
  std::vector<int> s(word_.events.size(), 0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Event& e = word_.events[k];
    if (e.kind == EventKind::Cross) s[k] = e.sign * dirs[k][e.pos] * dirs[k][e.pos + 1];
  }
  return s;
}

int TangleDiagram::taitNumber() const {
  auto s = crossingSigns();
  int t = 0;
  for (int x : s) t += x;
  return t + totalTwists();
}

// ---- operations ---------------------------------------------------------------------

TangleDiagram orientFromLevels(const TangleDiagram& d, const std::vector<std::vector<int>>& levels) {
  const SliceWord& w = d.word();
  if (levels.size() != w.events.size() + 1) throw ContractViolation("level directions have wrong length");
  std::vector<int> cups;
  for (std::size_t k = 0; k < w.events.size(); ++k)
    if (w.events[k].kind == EventKind::Cup) cups.push_back(levels[k + 1][w.events[k].pos]);
  TangleDiagram out(w, levels[0], cups);
  if (out.levelDirections() != levels) throw ContractViolation("inconsistent level directions");
  for (const auto& a : d.twistAnchors()) out.addTwist(a.level, a.pos, a.count);
  return out;
}

TangleDiagram compose(const TangleDiagram& bottom, const TangleDiagram& top) {
  if (bottom.widthOut() != top.widthIn()) throw ContractViolation("compose: arity mismatch");
  if (bottom.oriented() != top.oriented()) throw ContractViolation("compose: orientation data on one side only");
  if (bottom.oriented() && bottom.topDirections() != top.bottomDirections())
    throw ContractViolation("compose: orientation mismatch");
  SliceWord w{bottom.widthIn(), bottom.word().events, top.widthOut()};
  w.events.insert(w.events.end(), top.word().events.begin(), top.word().events.end());
  TangleDiagram out;
  if (bottom.oriented()) {
    std::vector<int> cups = bottom.cups_;
    cups.insert(cups.end(), top.cups_.begin(), top.cups_.end());
    out = TangleDiagram(w, bottom.bottom_, cups);
  } else {
    out = TangleDiagram(w);
  }
  const int shift = static_cast<int>(bottom.word().events.size());
  out.twists_ = bottom.twists_;
  for (auto a : top.twists_) out.addTwist(a.level + shift, a.pos, a.count);
  return out;
}

TangleDiagram tensor(const TangleDiagram& left, const TangleDiagram& right) {
  if (left.oriented() != right.oriented()) throw ContractViolation("tensor: orientation data on one side only");
  SliceWord w{left.widthIn() + right.widthIn(), left.word().events, left.widthOut() + right.widthOut()};
  for (Event e : right.word().events) {
    e.pos += left.widthOut();
    w.events.push_back(e);
  }
  TangleDiagram out;
  if (left.oriented()) {
    std::vector<int> bottom = left.bottom_, cups = left.cups_;
    bottom.insert(bottom.end(), right.bottom_.begin(), right.bottom_.end());
    cups.insert(cups.end(), right.cups_.begin(), right.cups_.end());
    out = TangleDiagram(w, bottom, cups);
  } else {
    out = TangleDiagram(w);
  }
  out.twists_ = left.twists_;
  const int shift = static_cast<int>(left.word().events.size());
  for (auto a : right.twists_) {
    // A twist on a bottom point of `right` stays on the same strand once
    // `left`'s events have been played.
    out.addTwist(a.level + shift, a.pos + left.widthOut(), a.count);
  }
  return out;
}

TangleDiagram placeAt(const TangleDiagram& t, int i, int n) {
  const int k = t.widthIn();
  if (i < 0 || i + k > n) throw ContractViolation("placeAt: placement out of range");
  TangleDiagram d = tensor(TangleDiagram::identity(i, t.oriented()), t);
  return tensor(d, TangleDiagram::identity(n - i - k, t.oriented()));
}

TangleDiagram rotate(const TangleDiagram& t, Axis axis) {
  if (axis == Axis::Z) return rotate(rotate(t, Axis::Y), Axis::X);
  const SliceWord& w = t.word();
  const auto widths = w.widths();
  const int last = static_cast<int>(w.events.size());
  auto dirs = t.levelDirections();
  SliceWord out;
  std::vector<std::vector<int>> outDirs;
  std::vector<TwistAnchor> anchors;
  if (axis == Axis::Y) {
    out.widthIn = w.widthOut;
    out.widthOut = w.widthIn;
    for (int j = 0; j < last; ++j) {
      Event e = w.events[last - 1 - j];
      if (e.kind == EventKind::Cup) {
        e.kind = EventKind::Cap;
      } else if (e.kind == EventKind::Cap) {
        e.kind = EventKind::Cup;
      }
      out.events.push_back(e);
    }
    if (t.oriented()) {
      for (int j = 0; j <= last; ++j) {
        std::vector<int> lv = dirs[last - j];
        for (int& d : lv) d = -d;
        outDirs.push_back(std::move(lv));
      }
    }
    for (const auto& a : t.twistAnchors()) anchors.push_back({last - a.level, a.pos, a.count});
  } else {
    out.widthIn = w.widthIn;
    out.widthOut = w.widthOut;
    for (int k = 0; k < last; ++k) {
      Event e = w.events[k];
      e.pos = e.kind == EventKind::Cup ? widths[k] - e.pos : widths[k] - 2 - e.pos;
      out.events.push_back(e);
    }
    if (t.oriented()) {
      for (int k = 0; k <= last; ++k) {
        std::vector<int> lv(dirs[k].rbegin(), dirs[k].rend());
        outDirs.push_back(std::move(lv));
      }
    }
    for (const auto& a : t.twistAnchors()) anchors.push_back({a.level, widths[a.level] - 1 - a.pos, a.count});
  }
  TangleDiagram r = t.oriented() ? orientFromLevels(TangleDiagram(out), outDirs) : TangleDiagram(out);
  for (const auto& a : anchors) r.addTwist(a.level, a.pos, a.count);
  return r;
}

TangleDiagram reverseOrientation(const TangleDiagram& t) {
  if (!t.oriented()) throw ContractViolation("reverseOrientation: diagram is unoriented");
  auto neg = [](std::vector<int> v) {
    for (int& x : v) x = -x;
    return v;
  };
  TangleDiagram r(t.word(), neg(t.bottomDirections()), neg(t.cupDirections()));
  for (const auto& a : t.twistAnchors()) r.addTwist(a.level, a.pos, a.count);
  return r;
}

TangleDiagram forgetOrientation(const TangleDiagram& t) {
  TangleDiagram r(t.word());
  for (const auto& a : t.twistAnchors()) r.addTwist(a.level, a.pos, a.count);
  return r;
}

TangleDiagram traceClosure(const TangleDiagram& t) {
  const int n = t.widthIn();
  if (t.widthOut() != n) throw ContractViolation("trace closure needs equal bottom and top arity");
  SliceWord w{0, {}, 0};
  for (int j = 0; j < n; ++j) w.events.push_back(Event::cup(j));
  w.events.insert(w.events.end(), t.word().events.begin(), t.word().events.end());
  for (int j = n - 1; j >= 0; --j) w.events.push_back(Event::cap(j));
  TangleDiagram out;
  if (t.oriented()) {
    if (t.topDirections() != t.bottomDirections())
      throw ContractViolation("trace closure: top and bottom orientations differ");
    std::vector<int> cups = t.bottomDirections();
    cups.insert(cups.end(), t.cupDirections().begin(), t.cupDirections().end());
    out = TangleDiagram(w, {}, cups);
  } else {
    out = TangleDiagram(w);
  }
  for (const auto& a : t.twistAnchors()) out.addTwist(a.level + n, a.pos, a.count);
  return out;
}

namespace {

void checkMatching(const std::vector<std::pair<int, int>>& pairs, int n) {
  if (static_cast<int>(pairs.size()) * 2 != n) throw ContractViolation("closure matching does not cover all points");
  std::vector<int> mate(n, -1);
  for (auto [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n || a == b || mate[a] >= 0 || mate[b] >= 0)
      throw ContractViolation("closure matching is not a perfect matching");
    mate[a] = b;
    mate[b] = a;
  }
  for (auto [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    for (int c = a + 1; c < b; ++c)
      if (mate[c] < a || mate[c] > b) throw ContractViolation("closure matching is not planar");
  }
}

std::vector<std::pair<int, int>> sortedPairs(std::vector<std::pair<int, int>> pairs) {
  for (auto& [a, b] : pairs)
    if (a > b) std::swap(a, b);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

TangleDiagram matchingClosure(const TangleDiagram& t, const std::vector<std::pair<int, int>>& bottomPairs,
                              const std::vector<std::pair<int, int>>& topPairs) {
  checkMatching(bottomPairs, t.widthIn());
  checkMatching(topPairs, t.widthOut());
  auto bottom = sortedPairs(bottomPairs);
  auto top = sortedPairs(topPairs);
  SliceWord w{0, {}, 0};
  std::vector<int> cups;
  std::vector<char> present(t.widthIn(), 0);
  const auto& bdirs = t.bottomDirections();
  for (auto [a, b] : bottom) {
    int pos = static_cast<int>(std::count(present.begin(), present.begin() + a, 1));
    w.events.push_back(Event::cup(pos));
    present[a] = present[b] = 1;
    if (t.oriented()) {
      if (bdirs[a] != -bdirs[b]) throw ContractViolation("closure pairing is inconsistent with the orientation");
      cups.push_back(bdirs[a]);
    }
  }
  const int shift = static_cast<int>(w.events.size());
  w.events.insert(w.events.end(), t.word().events.begin(), t.word().events.end());
  std::vector<char> remaining(t.widthOut(), 1);
  for (auto it = top.rbegin(); it != top.rend(); ++it) {
    auto [a, b] = *it;
    int pos = static_cast<int>(std::count(remaining.begin(), remaining.begin() + a, 1));
    w.events.push_back(Event::cap(pos));
    remaining[a] = remaining[b] = 0;
  }
  TangleDiagram out;
  if (t.oriented()) {
    cups.insert(cups.end(), t.cupDirections().begin(), t.cupDirections().end());
    try {
      out = TangleDiagram(w, {}, cups);
    } catch (const ContractViolation&) {
      throw ContractViolation("closure pairing is inconsistent with the orientation");
    }
  } else {
    out = TangleDiagram(w);
  }
  for (const auto& a : t.twistAnchors()) out.addTwist(a.level + shift, a.pos, a.count);
  return out;
}

TangleDiagram platClosure(const TangleDiagram& t) {
  auto pairsOf = [](int n) {
    if (n % 2) throw ContractViolation("plat closure needs an even number of points");
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; i += 2) p.emplace_back(i, i + 1);
    return p;
  };
  return matchingClosure(t, pairsOf(t.widthIn()), pairsOf(t.widthOut()));
}

TangleDiagram twoCable(const TangleDiagram& d) {
  const SliceWord& w = d.word();
  const int last = static_cast<int>(w.events.size());
  std::vector<std::vector<TwistAnchor>> byLevel(last + 1);
  for (const auto& a : d.twistAnchors()) byLevel[a.level].push_back(a);
  SliceWord out{2 * w.widthIn, {}, 2 * w.widthOut};
  auto emitTwists = [&](int level) {
    for (const auto& a : byLevel[level]) {
      int s = a.count > 0 ? 1 : -1;
      for (int r = 0; r < 2 * std::abs(a.count); ++r) out.events.push_back(Event::cross(2 * a.pos, s));
    }
  };
  for (int k = 0; k < last; ++k) {
    emitTwists(k);
    const Event& e = w.events[k];
    const int i = e.pos;
    switch (e.kind) {
      case EventKind::Cross:
        out.events.push_back(Event::cross(2 * i + 1, e.sign));
        out.events.push_back(Event::cross(2 * i, e.sign));
        out.events.push_back(Event::cross(2 * i + 2, e.sign));
        out.events.push_back(Event::cross(2 * i + 1, e.sign));
        break;
      case EventKind::Cup:
        out.events.push_back(Event::cup(2 * i));
        out.events.push_back(Event::cup(2 * i + 1));
        break;
      case EventKind::Cap:
        out.events.push_back(Event::cap(2 * i + 1));
        out.events.push_back(Event::cap(2 * i));
        break;
    }
  }
  emitTwists(last);
  if (!d.oriented()) return TangleDiagram(out);
  std::vector<int> bottom, cups;
  for (int x : d.bottomDirections()) bottom.insert(bottom.end(), {x, x});
  for (int x : d.cupDirections()) cups.insert(cups.end(), {x, x});
  return TangleDiagram(out, bottom, cups);
}

// ---- random generation ---------------------------------------------------------------

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
int randomSign(std::mt19937_64& rng) { return pick(rng, 0, 1) ? 1 : -1; }

}  // namespace

TangleDiagram randomTangle(std::mt19937_64& rng, const RandomTangleSpec& spec) {
  if (spec.widthIn < 0 || spec.widthOut < 0 || (spec.widthIn + spec.widthOut) % 2)
    throw ContractViolation("randomTangle: incompatible widths");
  std::vector<int> dirs;
  if (spec.oriented) {
    if (!spec.dirsIn.empty()) {
      if (static_cast<int>(spec.dirsIn.size()) != spec.widthIn) throw ContractViolation("randomTangle: dirsIn size");
      dirs = spec.dirsIn;
    } else {
      for (int i = 0; i < spec.widthIn; ++i) dirs.push_back(randomSign(rng));
    }
    if (!spec.dirsOut.empty()) {
      if (static_cast<int>(spec.dirsOut.size()) != spec.widthOut) throw ContractViolation("randomTangle: dirsOut size");
      int a = 0, b = 0;
      for (int x : dirs) a += x;
      for (int x : spec.dirsOut) b += x;
      if (a != b) throw ContractViolation("randomTangle: boundary orientations cannot be connected");
    }
  }
  const int maxWidth = std::max({spec.widthIn, spec.widthOut, 2}) + spec.extraWidth;
  SliceWord w{spec.widthIn, {}, 0};
  std::vector<int> cups;
  const std::vector<int> bottom = dirs;
  int width = spec.widthIn;

  auto capChoices = [&]() {
    std::vector<int> c;
    for (int i = 0; i + 1 < width; ++i)
      if (!spec.oriented || dirs[i] == -dirs[i + 1]) c.push_back(i);
    return c;
  };
  auto doCup = [&](int pos) {
    w.events.push_back(Event::cup(pos));
    width += 2;
    if (spec.oriented) {
      int f = randomSign(rng);
      cups.push_back(f);
      dirs.insert(dirs.begin() + pos, {f, -f});
    }
  };
  auto doCap = [&](int pos) {
    w.events.push_back(Event::cap(pos));
    width -= 2;
    if (spec.oriented) dirs.erase(dirs.begin() + pos, dirs.begin() + pos + 2);
  };
  auto doCross = [&](int pos, int sign) {
    w.events.push_back(Event::cross(pos, sign));
    if (spec.oriented) std::swap(dirs[pos], dirs[pos + 1]);
  };

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int placed = 0;
  while (placed < spec.crossings) {
    bool turn = width < 2 || unit(rng) < spec.turnRate;
    if (turn) {
      auto caps = capChoices();
      bool canCup = width + 2 <= maxWidth;
      bool canCap = !caps.empty() && width - 2 >= 2;
      if (canCup && (!canCap || pick(rng, 0, 1))) {
        doCup(pick(rng, 0, width));
        continue;
      }
      if (canCap) {
        doCap(caps[pick(rng, 0, static_cast<int>(caps.size()) - 1)]);
        continue;
      }
      if (width < 2) {
        doCup(pick(rng, 0, width));
        continue;
      }
    }
    doCross(pick(rng, 0, width - 2), randomSign(rng));
    ++placed;
  }
  while (width > spec.widthOut) {
    auto caps = capChoices();
    doCap(caps[pick(rng, 0, static_cast<int>(caps.size()) - 1)]);
  }
  while (width < spec.widthOut) doCup(pick(rng, 0, width));
  if (spec.oriented && !spec.dirsOut.empty()) {
    // Move matching directions into place with extra crossings.
    for (int i = 0; i < width; ++i) {
      int j = i;
      while (dirs[j] != spec.dirsOut[i]) ++j;
      for (int q = j - 1; q >= i; --q) doCross(q, randomSign(rng));
    }
  }
  w.widthOut = width;
  if (spec.oriented) return TangleDiagram(w, bottom, cups);
  return TangleDiagram(w);
}

TangleDiagram randomTangle(std::uint64_t seed, int strands, int crossings, bool oriented) {
  std::mt19937_64 rng(seed);
  RandomTangleSpec spec;
  spec.widthIn = spec.widthOut = strands;
  spec.oriented = oriented;
  spec.crossings = crossings;
  if (oriented) {
    for (int i = 0; i < strands; ++i) spec.dirsIn.push_back(randomSign(rng));
    spec.dirsOut = spec.dirsIn;
  }
  return randomTangle(rng, spec);
}

TangleDiagram randomClosedDiagram(std::mt19937_64& rng, int crossings, bool oriented, int maxWidth) {
  RandomTangleSpec spec;
  spec.oriented = oriented;
  spec.crossings = crossings;
  spec.extraWidth = std::max(0, maxWidth - 2);
  return randomTangle(rng, spec);
}

TangleDiagram randomBraid(std::mt19937_64& rng, int strands, int length) {
  std::vector<int> gens;
  for (int i = 0; i < length; ++i) gens.push_back(pick(rng, 1, strands - 1) * randomSign(rng));
  return TangleDiagram::braid(strands, gens);
}

}  // namespace skein
