#include "skein/diagram_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

namespace skein {

// ---- JSON ----------------------------------------------------------------------

Json diagramToJson(const TangleDiagram& d) {
  Json j;
  j["width_in"] = d.widthIn();
  Json ev = Json::array();
  for (const auto& e : d.word().events) {
    const char* tag = e.kind == EventKind::Cup ? "cup" : e.kind == EventKind::Cap ? "cap" : e.sign > 0 ? "x+" : "x-";
    ev.push_back(Json::array({tag, e.pos}));
  }
  j["events"] = ev;
  j["width_out"] = d.widthOut();
  if (d.oriented()) {
    std::vector<int> o = d.bottomDirections();
    o.insert(o.end(), d.cupDirections().begin(), d.cupDirections().end());
    j["orient"] = o;
  }
  auto tw = d.componentTwists();
  if (!tw.empty()) {
    Json t = Json::object();
    for (const auto& [c, n] : tw) t[std::to_string(c)] = n;
    j["twists"] = t;
  }
  return j;
}

TangleDiagram diagramFromJson(const Json& j) {
  try {
    SliceWord w;
    w.widthIn = j.at("width_in").get<int>();
    w.widthOut = j.at("width_out").get<int>();
    for (const auto& e : j.at("events")) {
      if (!e.is_array() || e.size() != 2) throw ContractViolation("event must be a [kind, position] pair");
      std::string tag = e[0].get<std::string>();
      int pos = e[1].get<int>();
      if (tag == "cup") {
        w.events.push_back(Event::cup(pos));
      } else if (tag == "cap") {
        w.events.push_back(Event::cap(pos));
      } else if (tag == "x+") {
        w.events.push_back(Event::cross(pos, 1));
      } else if (tag == "x-") {
        w.events.push_back(Event::cross(pos, -1));
      } else {
        throw ContractViolation("unknown event kind '" + tag + "'");
      }
    }
    TangleDiagram d;
    if (j.contains("orient") && !j["orient"].is_null()) {
      auto o = j["orient"].get<std::vector<int>>();
      if (static_cast<int>(o.size()) < w.widthIn) throw ContractViolation("orient array too short");
      std::vector<int> bottom(o.begin(), o.begin() + w.widthIn), cups(o.begin() + w.widthIn, o.end());
      d = TangleDiagram(w, bottom, cups);
    } else {
      d = TangleDiagram(w);
    }
    if (j.contains("twists")) {
      for (const auto& [key, val] : j["twists"].items()) d.addComponentTwist(std::stoi(key), val.get<int>());
    }
    return d;
  } catch (const Json::exception& e) {
    throw ContractViolation(std::string("malformed diagram JSON: ") + e.what());
  }
}

Json parseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TangleDiagram loadDiagram(const std::string& path) { return diagramFromJson(parseJsonText(readFile(path))); }

void saveDiagram(const TangleDiagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ContractViolation("cannot write " + path);
  out << diagramToJson(d).dump() << '\n';
}

// ---- PD text ------------------------------------------------------------------

std::vector<PDCrossing> parsePD(const std::string& text) {
  std::vector<PDCrossing> pd;
  std::string t = text;
  auto first = t.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && t[first] == '[' && t.find('(') == std::string::npos &&
      t.find('X') == std::string::npos) {
    for (const auto& q : parseJsonText(t)) {
      auto v = q.get<std::vector<int>>();
      if (v.size() != 4) throw ParseError("PD crossing must have four labels", 0);
      pd.push_back({v[0], v[1], v[2], v[3]});
    }
    return pd;
  }
  static const std::regex quad(R"([\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]])");
  for (auto it = std::sregex_iterator(t.begin(), t.end(), quad); it != std::sregex_iterator(); ++it)
    pd.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
  if (pd.empty()) throw ParseError("no PD crossings found", 0);
  return pd;
}

std::string formatPD(const std::vector<PDCrossing>& pd) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < pd.size(); ++i) {
    if (i) os << ", ";
    os << '(' << pd[i][0] << ", " << pd[i][1] << ", " << pd[i][2] << ", " << pd[i][3] << ')';
  }
  os << ']';
  return os.str();
}

// ---- PD import ------------------------------------------------------------------

namespace {

// Where a placed crossing's incoming under-strand sits and which way it runs.
struct KnownDirection {
  int level;
  int pos;
  int dir;
};

struct Sweep {
  const std::vector<PDCrossing>& pd;
  std::vector<int> front;
  SliceWord word{0, {}, 0};
  std::vector<char> done;
  std::vector<KnownDirection> known;
  // For crossings whose component never passes under: over-strand entry.
  std::vector<KnownDirection> overHints;

  explicit Sweep(const std::vector<PDCrossing>& code) : pd(code), done(code.size(), 0) {}

  int width() const { return static_cast<int>(front.size()); }

  void emit(Event e) { word.events.push_back(e); }

  void capAdjacent() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i + 1 < width(); ++i) {
        if (front[i] == front[i + 1]) {
          emit(Event::cap(i));
          front.erase(front.begin() + i, front.begin() + i + 2);
          changed = true;
          break;
        }
      }
    }
  }

  static int overIncomingSlot(const PDCrossing& c) {
    int j = c[1], l = c[3];
    if (l == j + 1) return 1;
    if (j == l + 1) return 3;
    return j > l ? 1 : 3;  // wrap-around from the largest label
  }

  // Places crossing c with slot s at the bottom-left corner, its crossing
  // event at position q, after the preparatory cups.
  void place(int c, int s, int q) {
    const PDCrossing& x = pd[c];
    const int ev = static_cast<int>(word.events.size());
    emit(Event::cross(q, s % 2 == 0 ? -1 : 1));
    auto corner = [&](int slot) {
      int r = ((slot - s) % 4 + 4) % 4;
      switch (r) {
        case 0: return KnownDirection{ev, q, 1};
        case 1: return KnownDirection{ev, q + 1, 1};
        case 2: return KnownDirection{ev + 1, q + 1, -1};
        default: return KnownDirection{ev + 1, q, -1};
      }
    };
    known.push_back(corner(0));
    overHints.push_back(corner(overIncomingSlot(x)));
    done[c] = 1;
  }

  bool step() {
    struct Candidate {
      int k, c, s, p;
    };
    std::optional<Candidate> best;
    bool anyTouched = false;
    int untouched = -1;
    for (int c = 0; c < static_cast<int>(pd.size()); ++c) {
      if (done[c]) continue;
      const PDCrossing& x = pd[c];
      int m = 0;
      for (int slot = 0; slot < 4; ++slot) m += std::count(front.begin(), front.end(), x[slot]) > 0;
      if (m == 0) {
        if (untouched < 0) untouched = c;
        continue;
      }
      anyTouched = true;
      for (int s = 0; s < 4; ++s) {
        for (int p = 0; p + m <= width(); ++p) {
          bool ok = true;
          for (int t = 0; t < m && ok; ++t) ok = front[p + t] == x[(s + t) % 4];
          if (ok && (!best || m > best->k)) best = Candidate{m, c, s, p};
        }
      }
    }
    if (!best) {
      if (anyTouched || untouched < 0) return false;
      // A new split piece starts at the right end of the front.
      const PDCrossing& x = pd[untouched];
      const int p = width();
      emit(Event::cup(p));
      emit(Event::cup(p + 2));
      place(untouched, 0, p + 1);
      front.insert(front.end(), {x[0], x[3], x[2], x[1]});
      capAdjacent();
      return true;
    }
    const auto [k, c, s, p] = *best;
    const PDCrossing& x = pd[c];
    auto lab = [&](int t) { return x[(s + t) % 4]; };
    switch (k) {
      case 1:
        emit(Event::cup(p + 1));
        place(c, s, p);
        front.erase(front.begin() + p);
        front.insert(front.begin() + p, {lab(3), lab(2), lab(1)});
        break;
      case 2:
        place(c, s, p);
        front[p] = lab(3);
        front[p + 1] = lab(2);
        break;
      case 3:
        place(c, s, p);
        front[p] = lab(3);
        front[p + 1] = lab(2);
        emit(Event::cap(p + 1));
        front.erase(front.begin() + p + 1, front.begin() + p + 3);
        break;
      case 4:
        place(c, s, p);
        emit(Event::cap(p + 1));
        emit(Event::cap(p));
        front.erase(front.begin() + p, front.begin() + p + 4);
        break;
      default:
        return false;
    }
    capAdjacent();
    return true;
  }
};

std::optional<TangleDiagram> sweepFrom(const std::vector<PDCrossing>& pd, int start, int slot) {
  Sweep sw(pd);
  const PDCrossing& x = pd[start];
  sw.emit(Event::cup(0));
  sw.emit(Event::cup(2));
  sw.place(start, slot, 1);
  auto lab = [&](int t) { return x[(slot + t) % 4]; };
  sw.front = {lab(0), lab(3), lab(2), lab(1)};
  sw.capAdjacent();
  while (std::any_of(sw.done.begin(), sw.done.end(), [](char d) { return !d; }))
    if (!sw.step()) return std::nullopt;
  if (!sw.front.empty()) return std::nullopt;
  TangleDiagram plain;
  try {
    plain = TangleDiagram(sw.word);
  } catch (const ContractViolation&) {
    return std::nullopt;
  }
  // Orient every component from a known under-strand (or over-strand) entry.
  auto widths = sw.word.widths();
  std::vector<std::vector<int>> levels(widths.size());
  for (std::size_t k = 0; k < widths.size(); ++k) levels[k].assign(widths[k], 0);
  for (const auto& comp : plain.trace()) {
    std::optional<int> flip;
    for (const auto* hints : {&sw.known, &sw.overHints}) {
      for (const auto& h : *hints) {
        for (std::size_t n = 0; n < comp.nodes.size() && !flip; ++n)
          if (comp.nodes[n] == std::make_pair(h.level, h.pos)) flip = comp.nodeDirections[n] == h.dir ? 1 : -1;
        if (flip) break;
      }
      if (flip) break;
    }
    if (!flip) throw ContractViolation("PD component without crossings");
    for (std::size_t n = 0; n < comp.nodes.size(); ++n)
      levels[comp.nodes[n].first][comp.nodes[n].second] = *flip * comp.nodeDirections[n];
  }
  try {
    return orientFromLevels(plain, levels);
  } catch (const ContractViolation&) {
    return std::nullopt;
  }
}

}  // namespace

TangleDiagram fromPD(const std::vector<PDCrossing>& pd) {
  if (pd.empty()) throw ContractViolation("empty PD code");
  std::map<int, int> count;
  for (const auto& x : pd)
    for (int l : x) ++count[l];
  for (const auto& [l, n] : count)
    if (n != 2) throw ContractViolation("PD label " + std::to_string(l) + " does not occur exactly twice");
  for (int start = 0; start < static_cast<int>(pd.size()); ++start)
    for (int slot = 0; slot < 4; ++slot)
      if (auto d = sweepFrom(pd, start, slot)) return *d;
  throw ContractViolation("PD code could not be swept into a planar diagram");
}

// ---- PD export -----------------------------------------------------------------

std::vector<PDCrossing> toPD(const TangleDiagram& d) {
  if (!d.isClosed() || !d.oriented()) throw ContractViolation("PD export needs a closed oriented diagram");
  const auto& events = d.word().events;
  // corner labels (BL, BR, TR, TL) and the incoming under corner per event
  std::map<int, std::array<int, 4>> corners;
  std::map<int, int> underIn;
  int base = 0;
  for (const auto& comp : d.trace()) {
    const int m = static_cast<int>(comp.crossings.size());
    if (m == 0) throw ContractViolation("PD export: a component has no crossings");
    for (int j = 0; j < m; ++j) {
      const auto& v = comp.crossings[j];
      const int sign = events[v.event].sign;
      const bool strandA = v.over == (sign > 0);
      int in, out;
      if (strandA) {
        in = v.upward ? 0 : 2;
        out = v.upward ? 2 : 0;
      } else {
        in = v.upward ? 1 : 3;
        out = v.upward ? 3 : 1;
      }
      auto& c = corners[v.event];
      c[in] = base + j;
      c[out] = base + (j + 1) % m;
      if (!v.over) underIn[v.event] = in;
    }
    base += m;
  }
  std::vector<PDCrossing> pd;
  for (const auto& [ev, c] : corners) {
    int c0 = underIn.at(ev);
    pd.push_back({c[c0], c[(c0 + 1) % 4], c[(c0 + 2) % 4], c[(c0 + 3) % 4]});
  }
  return pd;
}

}  // namespace skein
