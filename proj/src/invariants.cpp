#include "skein/invariants.hpp"

#include <cstdlib>
#include <set>
#include <unordered_map>

#include "skein/tl.hpp"

namespace skein {

namespace {

struct Ev {
  EventKind kind;
  int pos;
  int sign;
  int dir;  // left-leg direction of a cup in oriented words, else 0
};
using Word = std::vector<Ev>;

Word toWord(const TangleDiagram& d) {
  Word w;
  const auto& cups = d.cupDirections();
  std::size_t c = 0;
  for (const Event& e : d.word().events) {
    int dir = 0;
    if (e.kind == EventKind::Cup && d.oriented()) dir = cups[c++];
    w.push_back({e.kind, e.pos, e.sign, dir});
  }
  return w;
}

TangleDiagram toDiagram(const Word& w, bool oriented) {
  SliceWord s;
  std::vector<int> cups;
  for (const Ev& e : w) {
    s.events.push_back({e.kind, e.pos, e.sign});
    if (e.kind == EventKind::Cup) cups.push_back(e.dir);
  }
  if (!oriented) return TangleDiagram(s);
  return TangleDiagram(s, {}, cups);
}

std::string keyOf(const Word& w) {
  std::string k;
  k.reserve(w.size() * 4);
  for (const Ev& e : w) {
    k.push_back(static_cast<char>(e.kind));
    k.push_back(static_cast<char>(e.pos));
    k.push_back(static_cast<char>(e.sign));
    k.push_back(static_cast<char>(e.dir));
  }
  return k;
}

// Local moves that never increase the number of events: free loops, zig-zags,
// curls and cancelling crossing pairs.
struct Simplified {
  int loops = 0;
  int curlWrithe = 0;
};

Simplified simplify(Word& w) {
  Simplified out;
  std::size_t k = 0;
  while (k + 1 < w.size()) {
    const Ev& e = w[k];
    const Ev& f = w[k + 1];
    bool changed = true;
    if (e.kind == EventKind::Cup && f.kind == EventKind::Cap && f.pos == e.pos) {
      ++out.loops;
      w.erase(w.begin() + k, w.begin() + k + 2);
    } else if (e.kind == EventKind::Cup && f.kind == EventKind::Cap && std::abs(f.pos - e.pos) == 1) {
      w.erase(w.begin() + k, w.begin() + k + 2);
    } else if (e.kind == EventKind::Cross && f.kind == EventKind::Cap && f.pos == e.pos) {
      out.curlWrithe -= e.sign;
      w.erase(w.begin() + k);
    } else if (e.kind == EventKind::Cup && f.kind == EventKind::Cross && f.pos == e.pos) {
      out.curlWrithe -= f.sign;
      w[k].dir = -w[k].dir;
      w.erase(w.begin() + k + 1);
    } else if (e.kind == EventKind::Cross && f.kind == EventKind::Cross && f.pos == e.pos && f.sign == -e.sign) {
      w.erase(w.begin() + k, w.begin() + k + 2);
    } else {
      changed = false;
    }
    if (changed) {
      k = k > 0 ? k - 1 : 0;
    } else {
      ++k;
    }
  }
  return out;
}

// Index of the first crossing met from below along the canonical traversal,
// or -1 when the diagram is descending (hence a stacked unlink).
int firstAscending(const std::vector<TracedComponent>& comps) {
  std::set<int> seen;
  for (const auto& c : comps) {
    for (const auto& v : c.crossings) {
      if (seen.insert(v.event).second && !v.over) return v.event;
    }
  }
  return -1;
}

// Writhe of an unoriented diagram after orienting every component along its
// canonical traversal.
int traversalWrithe(const TangleDiagram& d, const std::vector<TracedComponent>& comps) {
  auto widths = d.word().widths();
  std::vector<std::vector<int>> levels(widths.size());
  for (std::size_t l = 0; l < widths.size(); ++l) levels[l].assign(widths[l], 0);
  for (const auto& c : comps) {
    for (std::size_t i = 0; i < c.nodes.size(); ++i) levels[c.nodes[i].first][c.nodes[i].second] = c.nodeDirections[i];
  }
  return orientFromLevels(d, levels).taitNumber();
}

class SkeinEngine {
 public:
  explicit SkeinEngine(bool oriented) : oriented_(oriented) {
    if (oriented_) {
      vars_ = homflyptVariables();
      loop_ = homflyptLoop();
    } else {
      vars_ = kauffmanVariables();
      loop_ = kauffmanLoop();
    }
  }

  MultiLaurent evaluate(Word w) {
    Simplified s = simplify(w);
    MultiLaurent frame = oriented_ ? MultiLaurent(vars_, 1) : MultiLaurent::variable(vars_, "a", s.curlWrithe);
    if (w.empty()) {
      if (s.loops == 0) throw ContractViolation("empty diagram has no skein value");
      return frame * loop_.pow(s.loops - 1);
    }
    return frame * loop_.pow(s.loops) * core(w);
  }

 private:
  MultiLaurent core(const Word& w) {
    std::string key = keyOf(w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    MultiLaurent value = branch(w);
    memo_.emplace(std::move(key), value);
    return value;
  }

  MultiLaurent branch(const Word& w) {
    TangleDiagram d = toDiagram(w, oriented_);
    auto comps = d.trace();
    int k = firstAscending(comps);
    int c = static_cast<int>(comps.size());
    if (k < 0) {
      MultiLaurent leaf = loop_.pow(c - 1);
      if (!oriented_) leaf *= MultiLaurent::variable(vars_, "a", traversalWrithe(d, comps));
      return leaf;
    }
    Word switched = w;
    switched[k].sign = -switched[k].sign;
    const int i = w[k].pos;
    Word vertical = w;
    vertical.erase(vertical.begin() + k);
    Word horizontal = w;
    horizontal[k] = {EventKind::Cap, i, 0, 0};
    horizontal.insert(horizontal.begin() + k + 1, Ev{EventKind::Cup, i, 0, 0});

    if (!oriented_) {
      MultiLaurent x = MultiLaurent::variable(vars_, "x");
      return x * (evaluate(vertical) + evaluate(horizontal)) - evaluate(switched);
    }

    auto dirs = d.levelDirections();
    const int left = dirs[k][i];
    const int right = dirs[k][i + 1];
    Word smoothed;
    if (left == right) {
      smoothed = vertical;
    } else {
      smoothed = horizontal;
      smoothed[k + 1].dir = right;
    }
    const int sign = d.crossingSigns()[k];
    MultiLaurent v = MultiLaurent::variable(vars_, "v", sign > 0 ? 1 : -1);
    MultiLaurent z = MultiLaurent::variable(vars_, "z");
    // v^-1 P(+) - v P(-) = z P(0), solved for the current crossing.
    if (sign > 0) return v * v * evaluate(switched) + v * z * evaluate(smoothed);
    return v * v * evaluate(switched) - v * z * evaluate(smoothed);
  }

  bool oriented_;
  Vars vars_;
  MultiLaurent loop_;
  std::unordered_map<std::string, MultiLaurent> memo_;
};

int envCap(const char* name, int fallback) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') return fallback;
  char* end = nullptr;
  long value = std::strtol(text, &end, 10);
  if (*end != '\0' || value < 0) throw ContractViolation(std::string("invalid value for ") + name);
  return static_cast<int>(value);
}

void requireClosed(const TangleDiagram& d) {
  if (!d.isClosed()) throw ContractViolation("invariants need a closed diagram");
  if (d.word().events.empty()) throw ContractViolation("invariants need a nonempty diagram");
}

void checkCap(const TangleDiagram& d, int cap, const char* what) {
  int n = d.word().crossingCount();
  if (n > cap) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n) + " crossings exceed the cap of " +
                        std::to_string(cap));
  }
}

}  // namespace

InvariantKind parseInvariantKind(const std::string& name) {
  for (InvariantKind k : allInvariantKinds()) {
    if (invariantName(k) == name) return k;
  }
  throw ContractViolation("unknown invariant: " + name);
}

std::string invariantName(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::Bracket: return "bracket";
    case InvariantKind::Jones: return "jones";
    case InvariantKind::Homflypt: return "homflypt";
    case InvariantKind::KauffmanF: return "kauffmanF";
    case InvariantKind::KauffmanLambda: return "kauffmanLambda";
    case InvariantKind::Alexander: return "alexander";
    case InvariantKind::Determinant: return "determinant";
  }
  return "?";
}

const std::vector<InvariantKind>& allInvariantKinds() {
  static const std::vector<InvariantKind> kinds{InvariantKind::Bracket,        InvariantKind::Jones,
                                                InvariantKind::Homflypt,       InvariantKind::KauffmanF,
                                                InvariantKind::KauffmanLambda, InvariantKind::Alexander,
                                                InvariantKind::Determinant};
  return kinds;
}

Caps Caps::fromEnvironment() {
  Caps c;
  c.bracket = envCap("SKEIN_BRACKET_CAP", c.bracket);
  c.skein = envCap("SKEIN_SKEIN_CAP", c.skein);
  return c;
}

const Vars& bracketVariables() {
  static const Vars v{"A"};
  return v;
}
const Vars& jonesVariables() {
  static const Vars v{"s"};
  return v;
}
const Vars& homflyptVariables() {
  static const Vars v{"v", "z"};
  return v;
}
const Vars& kauffmanVariables() {
  static const Vars v{"a", "x"};
  return v;
}

MultiLaurent homflyptLoop() {
  const Vars& vars = homflyptVariables();
  MultiLaurent v = MultiLaurent::variable(vars, "v");
  return (MultiLaurent::variable(vars, "v", -1) - v) * MultiLaurent::variable(vars, "z", -1);
}

MultiLaurent kauffmanLoop() {
  const Vars& vars = kauffmanVariables();
  MultiLaurent a = MultiLaurent::variable(vars, "a") + MultiLaurent::variable(vars, "a", -1);
  return a * MultiLaurent::variable(vars, "x", -1) - MultiLaurent(vars, 1);
}

MultiLaurent bracketPolynomial(const TangleDiagram& d, const Caps& caps) {
  requireClosed(d);
  checkCap(d, caps.bracket, "bracket");
  return bracket(d).embed(bracketVariables());
}

MultiLaurent jonesFromBracket(const MultiLaurent& b, int tait) {
  MultiLaurent p = b.embed(bracketVariables());
  MultiLaurent framing = MultiLaurent::variable(bracketVariables(), "A", -3 * tait) * Integer(tait % 2 == 0 ? 1 : -1);
  return mapExponents(framing * p, jonesVariables(), {{Rational(-1, 2)}});
}

MultiLaurent jones(const TangleDiagram& d, const Caps& caps) {
  if (!d.oriented()) throw ContractViolation("the Jones polynomial needs an oriented diagram");
  return jonesFromBracket(bracketPolynomial(d, caps), d.taitNumber());
}

MultiLaurent homflypt(const TangleDiagram& d, const Caps& caps) {
  requireClosed(d);
  if (!d.oriented()) throw ContractViolation("HOMFLYPT needs an oriented diagram");
  checkCap(d, caps.skein, "HOMFLYPT");
  SkeinEngine engine(true);
  return engine.evaluate(toWord(d.withoutTwists()));
}

MultiLaurent jonesFromHomflypt(const MultiLaurent& p) {
  const Vars& s = jonesVariables();
  MultiLaurent sv = MultiLaurent::variable(s, "s");
  return substitute(p, {{"v", sv * sv}, {"z", sv - MultiLaurent::variable(s, "s", -1)}}, s).toLaurent();
}

MultiLaurent alexanderFromHomflypt(const MultiLaurent& p) {
  const Vars& s = jonesVariables();
  MultiLaurent z = MultiLaurent::variable(s, "s") - MultiLaurent::variable(s, "s", -1);
  return substitute(p, {{"v", MultiLaurent(s, 1)}, {"z", z}}, s).toLaurent();
}

MultiLaurent kauffmanLambda(const TangleDiagram& d, const Caps& caps) {
  requireClosed(d);
  checkCap(d, caps.skein, "Kauffman polynomial");
  SkeinEngine engine(false);
  MultiLaurent value = engine.evaluate(toWord(forgetOrientation(d.withoutTwists())));
  return value * MultiLaurent::variable(kauffmanVariables(), "a", d.totalTwists());
}

MultiLaurent kauffmanF(const TangleDiagram& d, const Caps& caps) {
  if (!d.oriented()) throw ContractViolation("the Kauffman F polynomial needs an oriented diagram");
  return MultiLaurent::variable(kauffmanVariables(), "a", -d.taitNumber()) * kauffmanLambda(d, caps);
}

MultiLaurent alexander(const TangleDiagram& d, const Caps& caps) { return alexanderFromHomflypt(homflypt(d, caps)); }

Integer determinantFromAlexander(const MultiLaurent& p) {
  // Evaluate at s = i.
  Integer re = 0, im = 0;
  for (const auto& [e, c] : p.terms()) {
    switch (((e[0] % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      default: im -= c; break;
    }
  }
  Integer norm = re * re + im * im;
  if (mpz_perfect_square_p(norm.get_mpz_t()) == 0) throw ArithmeticError("|Alexander(i)| is not an integer");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm.get_mpz_t());
  return root;
}

Integer determinant(const TangleDiagram& d, const Caps& caps) { return determinantFromAlexander(alexander(d, caps)); }

std::string InvariantValue::str() const {
  if (kind == InvariantKind::Determinant) return integer.get_str();
  return polynomial.str();
}

InvariantValue computeInvariant(InvariantKind kind, const TangleDiagram& d, const Caps& caps) {
  InvariantValue out{kind, MultiLaurent(), Integer(0)};
  switch (kind) {
    case InvariantKind::Bracket: out.polynomial = bracketPolynomial(d, caps); break;
    case InvariantKind::Jones: out.polynomial = jones(d, caps); break;
    case InvariantKind::Homflypt: out.polynomial = homflypt(d, caps); break;
    case InvariantKind::KauffmanF: out.polynomial = kauffmanF(d, caps); break;
    case InvariantKind::KauffmanLambda: out.polynomial = kauffmanLambda(d, caps); break;
    case InvariantKind::Alexander: out.polynomial = alexander(d, caps); break;
    case InvariantKind::Determinant: out.integer = determinant(d, caps); break;
  }
  return out;
}

bool EqualityReport::allEqual() const {
  for (const auto& e : entries) {
    if (!e.equal) return false;
  }
  return true;
}

EqualityReport verifyEqual(const TangleDiagram& d1, const TangleDiagram& d2, const std::vector<InvariantKind>& kinds,
                           const Caps& caps) {
  EqualityReport r;
  for (InvariantKind k : kinds) {
    InvariantValue a = computeInvariant(k, d1, caps);
    InvariantValue b = computeInvariant(k, d2, caps);
    bool eq = a == b;
    r.entries.push_back({k, std::move(a), std::move(b), eq});
  }
  return r;
}

}  // namespace skein
