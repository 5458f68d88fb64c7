#include "skein/tl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace skein {

namespace {

// Position of a boundary point when walking counterclockwise around the
// rectangle: bottom left to right, then top right to left.
int circularPosition(int point, int n) { return point < n ? point : 2 * n - 1 - (point - n); }

// Walks a graph in which every vertex has degree 1 (outer) or 2 (inner),
// given as two perfect partial matchings `first` and `second` over the same
// vertex ids. Returns the pairing of outer vertices and the number of cycles.
std::pair<std::vector<int>, int> glue(const std::vector<int>& first, const std::vector<int>& second,
                                      const std::vector<int>& outer) {
  const std::size_t size = first.size();
  std::vector<char> seen(size, 0);
  std::vector<int> ends(size, -1);
  for (int start : outer) {
    if (seen[start]) continue;
    int v = start;
    bool useFirst = first[v] >= 0;
    seen[v] = 1;
    while (true) {
      v = useFirst ? first[v] : second[v];
      seen[v] = 1;
      if ((useFirst ? second[v] : first[v]) < 0) break;
      useFirst = !useFirst;
    }
    ends[start] = v;
    ends[v] = start;
  }
  int loops = 0;
  for (std::size_t v = 0; v < size; ++v) {
    if (seen[v]) continue;
    ++loops;
    int w = static_cast<int>(v);
    bool useFirst = true;
    do {
      seen[w] = 1;
      w = useFirst ? first[w] : second[w];
      useFirst = !useFirst;
    } while (!seen[w]);
  }
  return {ends, loops};
}

void enumerateRange(std::vector<int>& circle, int lo, int hi, const std::function<void()>& done) {
  if (lo > hi) {
    done();
    return;
  }
  for (int partner = lo + 1; partner <= hi; partner += 2) {
    circle[lo] = partner;
    circle[partner] = lo;
    enumerateRange(circle, lo + 1, partner - 1, [&] { enumerateRange(circle, partner + 1, hi, done); });
  }
}

// ---- bracket transfer sweep -------------------------------------------------
//
// A state is the pairing of the n bottom points (ids 0..n-1) and the points of
// the current level (ids n..n+w-1).

using SweepState = std::map<std::vector<int>, MultiLaurent>;

const Vars& bracketVars() {
  static const Vars vars{"A"};
  return vars;
}

std::vector<int> insertCup(const std::vector<int>& mate, int n, int i) {
  std::vector<int> out(mate.size() + 2);
  auto shift = [&](int p) { return p < n + i ? p : p + 2; };
  for (std::size_t p = 0; p < mate.size(); ++p) out[shift(static_cast<int>(p))] = shift(mate[p]);
  out[n + i] = n + i + 1;
  out[n + i + 1] = n + i;
  return out;
}

// Returns the new pairing and whether a closed loop was formed.
std::pair<std::vector<int>, bool> applyCap(std::vector<int> mate, int n, int i) {
  const int a = n + i;
  const int b = a + 1;
  bool loop = mate[a] == b;
  if (!loop) {
    int ma = mate[a];
    int mb = mate[b];
    mate[ma] = mb;
    mate[mb] = ma;
  }
  std::vector<int> out;
  out.reserve(mate.size() - 2);
  auto shift = [&](int p) { return p < a ? p : p - 2; };
  for (std::size_t p = 0; p < mate.size(); ++p) {
    if (static_cast<int>(p) == a || static_cast<int>(p) == b) continue;
    out.push_back(shift(mate[p]));
  }
  return {out, loop};
}

void accumulate(SweepState& states, std::vector<int> key, const MultiLaurent& value) {
  if (value.isZero()) return;
  auto [it, inserted] = states.try_emplace(std::move(key), value);
  if (!inserted) {
    it->second += value;
    if (it->second.isZero()) states.erase(it);
  }
}

SweepState sweep(const TangleDiagram& d, int n) {
  const Vars& vars = bracketVars();
  const MultiLaurent mu = bracketLoop(vars);
  const SliceWord& word = d.word();
  word.validate();
  SweepState states;
  std::vector<int> start(2 * n);
  for (int j = 0; j < n; ++j) {
    start[j] = n + j;
    start[n + j] = j;
  }
  states.emplace(start, MultiLaurent(vars, 1));
  for (const Event& e : word.events) {
    SweepState next;
    for (const auto& [mate, value] : states) {
      switch (e.kind) {
        case EventKind::Cup:
          accumulate(next, insertCup(mate, n, e.pos), value);
          break;
        case EventKind::Cap: {
          auto [out, loop] = applyCap(mate, n, e.pos);
          accumulate(next, std::move(out), loop ? value * mu : value);
          break;
        }
        case EventKind::Cross: {
          accumulate(next, mate, value * MultiLaurent::variable(vars, "A", e.sign));
          const int a = n + e.pos;
          const int b = a + 1;
          MultiLaurent turned = value * MultiLaurent::variable(vars, "A", -e.sign);
          if (mate[a] == b) {
            accumulate(next, mate, turned * mu);
          } else {
            std::vector<int> hooked = mate;
            int ma = mate[a];
            int mb = mate[b];
            hooked[ma] = mb;
            hooked[mb] = ma;
            hooked[a] = b;
            hooked[b] = a;
            accumulate(next, std::move(hooked), turned);
          }
          break;
        }
      }
    }
    states = std::move(next);
  }
  int twists = d.totalTwists();
  if (twists != 0) {
    MultiLaurent factor = MultiLaurent::variable(vars, "A", 3 * twists) * Integer(twists % 2 == 0 ? 1 : -1);
    for (auto& [mate, value] : states) value *= factor;
  }
  return states;
}

}  // namespace

// ---- matchings -----------------------------------------------------------------

std::string PlanarMatching::str() const {
  std::ostringstream os;
  for (int p = 0; p < 2 * n; ++p)
    if (p < mate[p]) os << '(' << p << ',' << mate[p] << ')';
  return os.str();
}

PlanarMatching PlanarMatching::parse(const std::string& text, int n) {
  PlanarMatching m{n, std::vector<int>(2 * n, -1)};
  std::size_t i = 0;
  auto number = [&]() {
    std::size_t begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (begin == i) throw ParseError("expected a point index", begin);
    return std::stoi(text.substr(begin, i - begin));
  };
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  while (i < text.size()) {
    expect('(');
    int a = number();
    expect(',');
    int b = number();
    expect(')');
    if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || a == b || m.mate[a] >= 0 || m.mate[b] >= 0)
      throw ParseError("invalid pair in matching", i);
    m.mate[a] = b;
    m.mate[b] = a;
  }
  if (std::find(m.mate.begin(), m.mate.end(), -1) != m.mate.end()) throw ParseError("matching is not perfect", i);
  if (!isPlanar(m)) throw ParseError("matching is not planar", i);
  return m;
}

bool isPlanar(const PlanarMatching& m) {
  if (static_cast<int>(m.mate.size()) != 2 * m.n) return false;
  std::vector<std::pair<int, int>> arcs;
  for (int p = 0; p < 2 * m.n; ++p) {
    int q = m.mate[p];
    if (q < 0 || q >= 2 * m.n || q == p || m.mate[q] != p) return false;
    if (p < q) {
      int a = circularPosition(p, m.n);
      int b = circularPosition(q, m.n);
      arcs.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  for (const auto& [a, b] : arcs)
    for (const auto& [c, d] : arcs)
      if (a < c && c < b && b < d) return false;
  return true;
}

std::vector<PlanarMatching> enumerateMatchings(int n) {
  if (n < 0) throw ContractViolation("negative strand count");
  std::vector<int> circle(2 * n, -1);
  std::vector<PlanarMatching> out;
  std::vector<int> pointAt(2 * n);
  for (int p = 0; p < 2 * n; ++p) pointAt[circularPosition(p, n)] = p;
  enumerateRange(circle, 0, 2 * n - 1, [&] {
    PlanarMatching m{n, std::vector<int>(2 * n)};
    for (int c = 0; c < 2 * n; ++c) m.mate[pointAt[c]] = pointAt[circle[c]];
    out.push_back(std::move(m));
  });
  return out;
}

std::size_t catalan(int n) {
  std::size_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::pair<PlanarMatching, int> stack(const PlanarMatching& below, const PlanarMatching& above) {
  if (below.n != above.n) throw ContractViolation("matchings of different sizes");
  const int n = below.n;
  // Vertex ids: bottom j -> j, middle j -> n + j, top j -> 2n + j.
  std::vector<int> first(3 * n, -1);
  std::vector<int> second(3 * n, -1);
  for (int p = 0; p < 2 * n; ++p) {
    first[p] = below.mate[p];
    second[n + p] = n + above.mate[p];
  }
  std::vector<int> outer;
  for (int j = 0; j < n; ++j) outer.push_back(j);
  for (int j = 0; j < n; ++j) outer.push_back(2 * n + j);
  auto [ends, loops] = glue(first, second, outer);
  PlanarMatching result{n, std::vector<int>(2 * n)};
  auto toResult = [&](int v) { return v < n ? v : v - n; };
  for (int v : outer) result.mate[toResult(v)] = toResult(ends[v]);
  return {result, loops};
}

std::string AnnulusClass::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool firstTerm = true;
  for (const auto& [k, c] : coeffs) {
    if (!firstTerm) os << " + ";
    firstTerm = false;
    os << '(' << c.str() << ")*core^" << k;
  }
  return os.str();
}

MultiLaurent bracketLoop(const Vars& vars) {
  if (vars.index("A") < 0) throw ContractViolation("bracket loop needs the variable A");
  return -(MultiLaurent::variable(vars, "A", 2) + MultiLaurent::variable(vars, "A", -2));
}

// ---- algebra ---------------------------------------------------------------------

TLAlgebra::TLAlgebra(int n, Vars vars) : TLAlgebra(n, vars, RationalFunction(bracketLoop(vars))) {}

TLAlgebra::TLAlgebra(int n, Vars vars, RationalFunction loop)
    : n_(n), vars_(vars), loop_(loop.embed(vars)), standardLoop_(false) {
  if (n < 0) throw ContractViolation("negative strand count");
  standardLoop_ = vars_.index("A") >= 0 && loop_ == RationalFunction(bracketLoop(vars_));
  std::vector<PlanarMatching> all = enumerateMatchings(n);
  PlanarMatching id{n, std::vector<int>(2 * n)};
  for (int j = 0; j < n; ++j) {
    id.mate[j] = n + j;
    id.mate[n + j] = j;
  }
  auto hookMatching = [&](int i) {
    PlanarMatching h = id;
    h.mate[i] = i + 1;
    h.mate[i + 1] = i;
    h.mate[n + i] = n + i + 1;
    h.mate[n + i + 1] = n + i;
    return h;
  };
  if (n == 3) {
    PlanarMatching u1 = hookMatching(0);
    PlanarMatching u2 = hookMatching(1);
    basis_ = {id, u2, u1, stack(u1, u2).first, stack(u2, u1).first};
  } else {
    basis_.push_back(id);
    for (auto& m : all)
      if (m != id) basis_.push_back(m);
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
  table_.assign(basis_.size(), std::vector<std::pair<int, int>>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      auto [m, loops] = stack(basis_[i], basis_[j]);
      table_[i][j] = {index_.at(m), loops};
    }
}

int TLAlgebra::indexOf(const PlanarMatching& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw ContractViolation("matching is not a basis element of this algebra");
  return it->second;
}

TLElement TLAlgebra::zero() const { return TLElement{std::vector<RationalFunction>(dim(), RationalFunction(vars_, 0))}; }

TLElement TLAlgebra::unit() const { return basisElement(0); }

TLElement TLAlgebra::basisElement(std::size_t i) const {
  if (i >= dim()) throw ContractViolation("basis index out of range");
  TLElement x = zero();
  x.coeffs[i] = RationalFunction(vars_, 1);
  return x;
}

TLElement TLAlgebra::hook(int i) const {
  if (i < 0 || i + 1 >= n_) throw ContractViolation("hook position out of range");
  PlanarMatching h = basis_[0];
  h.mate[i] = i + 1;
  h.mate[i + 1] = i;
  h.mate[n_ + i] = n_ + i + 1;
  h.mate[n_ + i + 1] = n_ + i;
  return basisElement(indexOf(h));
}

TLElement TLAlgebra::element(const std::vector<RationalFunction>& coeffs) const {
  if (coeffs.size() != dim()) throw ContractViolation("coefficient count differs from the dimension");
  TLElement x;
  for (const auto& c : coeffs) x.coeffs.push_back(c.embed(vars_));
  return x;
}

TLElement TLAlgebra::add(const TLElement& x, const TLElement& y) const {
  if (x.coeffs.size() != dim() || y.coeffs.size() != dim()) throw ContractViolation("element of another algebra");
  TLElement r = x;
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] += y.coeffs[i];
  return r;
}

TLElement TLAlgebra::scale(const TLElement& x, const RationalFunction& c) const {
  if (x.coeffs.size() != dim()) throw ContractViolation("element of another algebra");
  TLElement r = x;
  RationalFunction factor = c.embed(vars_);
  for (auto& coeff : r.coeffs) coeff *= factor;
  return r;
}

TLElement TLAlgebra::mul(const TLElement& x, const TLElement& y) const {
  if (x.coeffs.size() != dim() || y.coeffs.size() != dim()) throw ContractViolation("element of another algebra");
  TLElement r = zero();
  std::vector<RationalFunction> loopPowers{RationalFunction(vars_, 1)};
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x.coeffs[i].isZero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y.coeffs[j].isZero()) continue;
      auto [k, loops] = table_[i][j];
      while (static_cast<int>(loopPowers.size()) <= loops) loopPowers.push_back(loopPowers.back() * loop_);
      r.coeffs[k] += x.coeffs[i] * y.coeffs[j] * loopPowers[loops];
    }
  }
  return r;
}

TLElement TLAlgebra::fromTangle(const TangleDiagram& t) const {
  if (!standardLoop_) throw ContractViolation("tangle evaluation needs the bracket loop value");
  if (t.widthIn() != n_ || t.widthOut() != n_) throw ContractViolation("tangle arity differs from the algebra");
  SweepState states = sweep(t, n_);
  TLElement r = zero();
  for (const auto& [mate, value] : states) {
    PlanarMatching m{n_, mate};
    r.coeffs[indexOf(m)] += RationalFunction(value.embed(vars_));
  }
  return r;
}

Matrix<RationalFunction> TLAlgebra::multiplicationMatrix(const TLElement& x, bool left) const {
  Matrix<RationalFunction> m(dim(), dim(), RationalFunction(vars_, 0));
  for (std::size_t j = 0; j < dim(); ++j) {
    TLElement b = basisElement(j);
    TLElement image = left ? mul(x, b) : mul(b, x);
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = image.coeffs[i];
  }
  return m;
}

std::optional<TLElement> TLAlgebra::invert(const TLElement& x) const {
  auto inv = inverse(multiplicationMatrix(x, true), RationalFunction(vars_, 1));
  if (!inv) return std::nullopt;
  TLElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = (*inv)(i, 0);
  if (mul(r, x) != unit()) throw ArithmeticError("left inverse is not a right inverse");
  return r;
}

TLElement TLAlgebra::rotate(const TLElement& x, Axis axis) const {
  const int n = n_;
  auto image = [&](int p) {
    bool top = p >= n;
    int j = top ? p - n : p;
    switch (axis) {
      case Axis::Y:
        return top ? j : n + j;
      case Axis::X:
        return top ? n + (n - 1 - j) : n - 1 - j;
      case Axis::Z:
        return top ? n - 1 - j : n + (n - 1 - j);
    }
    return p;
  };
  TLElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x.coeffs[i].isZero()) continue;
    PlanarMatching m{n, std::vector<int>(2 * n)};
    for (int p = 0; p < 2 * n; ++p) m.mate[image(p)] = image(basis_[i].mate[p]);
    r.coeffs[indexOf(m)] += x.coeffs[i];
  }
  return r;
}

TLElement TLAlgebra::place(const TLAlgebra& small, const TLElement& x, int i) const {
  const int k = small.n();
  if (i < 0 || i + k > n_) throw ContractViolation("placement out of range");
  auto lift = [&](int p) { return p < k ? i + p : n_ + i + (p - k); };
  TLElement r = zero();
  for (std::size_t b = 0; b < small.dim(); ++b) {
    if (x.coeffs[b].isZero()) continue;
    PlanarMatching m = basis_[0];
    const PlanarMatching& s = small.basis()[b];
    for (int p = 0; p < 2 * k; ++p) m.mate[lift(p)] = lift(s.mate[p]);
    r.coeffs[indexOf(m)] += x.coeffs[b].embed(vars_);
  }
  return r;
}

AnnulusClass TLAlgebra::annulusReduce(const TLElement& x) const {
  const int n = n_;
  AnnulusClass out;
  for (std::size_t b = 0; b < dim(); ++b) {
    if (x.coeffs[b].isZero()) continue;
    const auto& mate = basis_[b].mate;
    std::vector<char> seen(2 * n, 0);
    int core = 0;
    int contractible = 0;
    for (int s = 0; s < 2 * n; ++s) {
      if (seen[s]) continue;
      int winding = 0;
      int p = s;
      do {
        seen[p] = 1;
        int q = mate[p];
        seen[q] = 1;
        // Closing arc: top j leads down around the core to bottom j.
        if (q >= n) {
          winding += 1;
          p = q - n;
        } else {
          winding -= 1;
          p = q + n;
        }
      } while (p != s);
      if (winding == 0)
        ++contractible;
      else
        ++core;
    }
    RationalFunction c = x.coeffs[b];
    for (int i = 0; i < contractible; ++i) c *= loop_;
    auto [it, inserted] = out.coeffs.try_emplace(core, c);
    if (!inserted) it->second += c;
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();) it = it->second.isZero() ? out.coeffs.erase(it) : std::next(it);
  return out;
}

Json TLAlgebra::toJson(const TLElement& x) const {
  Json j = Json::object();
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x.coeffs[i].isZero()) j[basis_[i].str()] = x.coeffs[i].str();
  return j;
}

TLElement TLAlgebra::fromJson(const Json& j) const {
  if (!j.is_object()) throw ParseError("TL element must be a JSON object", 0);
  TLElement r = zero();
  for (const auto& [key, value] : j.items()) {
    int index;
    if (!key.empty() && key[0] == 'e') {
      index = std::stoi(key.substr(1)) - 1;
      if (index < 0 || index >= static_cast<int>(dim())) throw ParseError("basis label out of range: " + key, 0);
    } else {
      index = indexOf(PlanarMatching::parse(key, n_));
    }
    if (!value.is_string()) throw ParseError("coefficient must be a string", 0);
    r.coeffs[index] += RationalFunction::parse(value.get<std::string>(), vars_);
  }
  return r;
}

MultiLaurent bracket(const TangleDiagram& d) {
  if (!d.isClosed()) throw ContractViolation("bracket needs a closed diagram");
  if (d.word().events.empty()) throw ContractViolation("bracket of the empty diagram is undefined");
  SweepState states = sweep(d, 0);
  MultiLaurent total(bracketVars(), 0);
  for (const auto& [mate, value] : states) total += value;
  auto q = exactDivide(total, bracketLoop(bracketVars()));
  if (!q) throw ArithmeticError("bracket state sum is not divisible by the loop value");
  return *q;
}

// ---- spectral parameter ------------------------------------------------------------

TLElement tl2Inverse(const TLAlgebra& tl2, const RationalFunction& x, const RationalFunction& y) {
  if (tl2.n() != 2) throw ContractViolation("closed-form inverse lives in TL_2");
  const RationalFunction& mu = tl2.loop();
  RationalFunction shifted = x + mu * y;
  if (x.isZero() || shifted.isZero()) throw ArithmeticError("x + y*hook is not invertible");
  RationalFunction one(tl2.vars(), 1);
  return tl2.element({one / x, -(y / (x * shifted))});
}

SpectralSolution spectralSolveTL(const TLAlgebra& tl3, const TLAlgebra& tl2, const TLElement& l, Axis axis) {
  if (tl3.n() != 3 || tl2.n() != 2) throw ContractViolation("spectral solver works on TL_3 and TL_2");
  if (axis == Axis::X) throw ContractViolation("spectral solver supports the y and z axes");
  if (l.coeffs.size() != 5) throw ContractViolation("element of another algebra");
  const auto& a = l.coeffs;
  const RationalFunction& mu = tl3.loop();
  SpectralSolution s;
  RationalFunction one(tl2.vars(), 1);
  RationalFunction zero(tl2.vars(), 0);
  bool trivial = axis == Axis::Y ? a[3] == a[4] : a[1] == a[2];
  if (trivial) {
    s.x = one;
    s.y = zero;
  } else if (axis == Axis::Y) {
    s.x = a[1] + mu * a[4];
    s.y = a[3] - a[4];
  } else {
    s.x = a[0] + mu * a[2] + a[3];
    s.y = a[1] - a[2];
  }
  s.p = tl2.element({s.x, s.y});
  s.inDense = !s.x.isZero() && !(s.x + mu * s.y).isZero();
  if (s.inDense) s.pInverse = tl2Inverse(tl2, s.x, s.y);
  return s;
}

}  // namespace skein
