#include "skein/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "skein/tl.hpp"

namespace skein {

namespace {

Permutation identityPermutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation permutationOfWord(int n, const std::vector<int>& word) {
  Permutation p = identityPermutation(n);
  for (int i : word) std::swap(p[i], p[i + 1]);
  return p;
}

RationalFunction var(const Vars& vars, const char* name, int power = 1) {
  return RationalFunction(MultiLaurent::variable(vars, name, power));
}

void requireVariables(const Vars& vars, std::initializer_list<const char*> names) {
  for (const char* name : names)
    if (vars.index(name) < 0) throw ContractViolation(std::string("coefficient ring lacks the variable ") + name);
}

}  // namespace

std::vector<int> reducedWord(const Permutation& w) {
  Permutation p = w;
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(static_cast<int>(i));
        changed = true;
        break;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

int permutationLength(const Permutation& w) {
  int inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inversions;
  return inversions;
}

// ---- H_n -------------------------------------------------------------------------------

HeckeAlgebra::HeckeAlgebra(int n, Vars vars) : n_(n), vars_(vars) {
  if (n < 1) throw ContractViolation("Hecke algebra needs at least one strand");
  requireVariables(vars_, {"v", "z"});
  if (n == 3) {
    for (const auto& word : std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1, 0}, {0, 1}, {1, 0}})
      basis_.push_back(permutationOfWord(3, word));
  } else {
    Permutation p = identityPermutation(n);
    do basis_.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::stable_sort(basis_.begin(), basis_.end(), [](const Permutation& a, const Permutation& b) {
      int la = permutationLength(a), lb = permutationLength(b);
      if (la != lb) return la < lb;
      return reducedWord(a) < reducedWord(b);
    });
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    index_[basis_[i]] = static_cast<int>(i);
    words_.push_back(reducedWord(basis_[i]));
  }
}

int HeckeAlgebra::indexOf(const Permutation& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw ContractViolation("not a permutation of this algebra's strands");
  return it->second;
}

HeckeElement HeckeAlgebra::zero() const {
  return HeckeElement{std::vector<RationalFunction>(dim(), RationalFunction(vars_, 0))};
}

HeckeElement HeckeAlgebra::unit() const { return basisElement(0); }

HeckeElement HeckeAlgebra::basisElement(std::size_t i) const {
  if (i >= dim()) throw ContractViolation("basis index out of range");
  HeckeElement x = zero();
  x.coeffs[i] = RationalFunction(vars_, 1);
  return x;
}

HeckeElement HeckeAlgebra::generator(int i) const {
  if (i < 0 || i + 1 >= n_) throw ContractViolation("generator out of range");
  return basisElement(indexOf(permutationOfWord(n_, {i})));
}

HeckeElement HeckeAlgebra::element(const std::vector<RationalFunction>& coeffs) const {
  if (coeffs.size() != dim()) throw ContractViolation("coefficient count differs from the dimension");
  HeckeElement x;
  for (const auto& c : coeffs) x.coeffs.push_back(c.embed(vars_));
  return x;
}

HeckeElement HeckeAlgebra::add(const HeckeElement& x, const HeckeElement& y) const {
  if (x.coeffs.size() != dim() || y.coeffs.size() != dim()) throw ContractViolation("element of another algebra");
  HeckeElement r = x;
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] += y.coeffs[i];
  return r;
}

HeckeElement HeckeAlgebra::scale(const HeckeElement& x, const RationalFunction& c) const {
  HeckeElement r = x;
  RationalFunction factor = c.embed(vars_);
  for (auto& coeff : r.coeffs) coeff *= factor;
  return r;
}

HeckeElement HeckeAlgebra::mulGenerator(const HeckeElement& x, int i, bool inverse) const {
  if (x.coeffs.size() != dim()) throw ContractViolation("element of another algebra");
  if (i < 0 || i + 1 >= n_) throw ContractViolation("generator out of range");
  const RationalFunction vz = var(vars_, "v") * var(vars_, "z");
  const RationalFunction v2 = var(vars_, "v", 2);
  HeckeElement r = zero();
  for (std::size_t b = 0; b < dim(); ++b) {
    if (x.coeffs[b].isZero()) continue;
    Permutation shifted = basis_[b];
    std::swap(shifted[i], shifted[i + 1]);
    int target = indexOf(shifted);
    if (basis_[b][i] < basis_[b][i + 1]) {
      r.coeffs[target] += x.coeffs[b];
    } else {
      r.coeffs[b] += x.coeffs[b] * vz;
      r.coeffs[target] += x.coeffs[b] * v2;
    }
  }
  if (!inverse) return r;
  // s^-1 = v^-2 s - v^-1 z
  return add(scale(r, var(vars_, "v", -2)), scale(x, -(var(vars_, "v", -1) * var(vars_, "z"))));
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& x, const HeckeElement& y) const {
  if (y.coeffs.size() != dim()) throw ContractViolation("element of another algebra");
  HeckeElement r = zero();
  for (std::size_t j = 0; j < dim(); ++j) {
    if (y.coeffs[j].isZero()) continue;
    HeckeElement t = x;
    for (int g : words_[j]) t = mulGenerator(t, g);
    r = add(r, scale(t, y.coeffs[j]));
  }
  return r;
}

HeckeElement HeckeAlgebra::fromBraid(const std::vector<int>& generators) const {
  HeckeElement r = unit();
  for (int g : generators) {
    if (g == 0 || std::abs(g) >= n_) throw ContractViolation("braid generator out of range");
    r = mulGenerator(r, std::abs(g) - 1, g < 0);
  }
  return r;
}

HeckeElement HeckeAlgebra::fromTangle(const TangleDiagram& t) const {
  if (!t.oriented()) throw ContractViolation("Hecke evaluation needs an oriented tangle");
  if (t.widthIn() != n_ || t.widthOut() != n_) throw ContractViolation("tangle arity differs from the algebra");
  for (int d : t.bottomDirections())
    if (d != 1) throw ContractViolation("Hecke evaluation needs every strand oriented upward");
  std::vector<int> generators;
  for (const Event& e : t.word().events) {
    if (e.kind != EventKind::Cross) throw ContractViolation("Hecke evaluation needs a braid-like tangle");
    generators.push_back(e.sign * (e.pos + 1));
  }
  HeckeElement r = fromBraid(generators);
  int twists = t.totalTwists();
  if (twists != 0) throw ContractViolation("framing twists are not defined for the Hecke algebra");
  return r;
}

HeckeElement HeckeAlgebra::transposeRy(const HeckeElement& x) const {
  HeckeElement r = zero();
  for (std::size_t b = 0; b < dim(); ++b) {
    if (x.coeffs[b].isZero()) continue;
    Permutation inv(n_);
    for (int i = 0; i < n_; ++i) inv[basis_[b][i]] = i;
    r.coeffs[indexOf(inv)] += x.coeffs[b];
  }
  return r;
}

HeckeElement HeckeAlgebra::place(const HeckeAlgebra& small, const HeckeElement& x, int i) const {
  const int k = small.n();
  if (i < 0 || i + k > n_) throw ContractViolation("placement out of range");
  HeckeElement r = zero();
  for (std::size_t b = 0; b < small.dim(); ++b) {
    if (x.coeffs[b].isZero()) continue;
    Permutation w = identityPermutation(n_);
    for (int j = 0; j < k; ++j) w[i + j] = i + small.basis()[b][j];
    r.coeffs[indexOf(w)] += x.coeffs[b].embed(vars_);
  }
  return r;
}

Matrix<RationalFunction> HeckeAlgebra::multiplicationMatrix(const HeckeElement& x, bool left) const {
  Matrix<RationalFunction> m(dim(), dim(), RationalFunction(vars_, 0));
  for (std::size_t j = 0; j < dim(); ++j) {
    HeckeElement b = basisElement(j);
    HeckeElement image = left ? mul(x, b) : mul(b, x);
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = image.coeffs[i];
  }
  return m;
}

Matrix<MultiLaurent> HeckeAlgebra::laurentMultiplicationMatrix(const HeckeElement& x, bool left) const {
  Matrix<RationalFunction> m = multiplicationMatrix(x, left);
  Matrix<MultiLaurent> out(dim(), dim(), MultiLaurent(vars_, 0));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out(i, j) = m(i, j).toLaurent();
  return out;
}

std::optional<HeckeElement> HeckeAlgebra::invert(const HeckeElement& x) const {
  bool laurent = true;
  for (const auto& c : x.coeffs) laurent = laurent && c.isLaurent();
  if (!laurent) {
    auto inv = inverse(multiplicationMatrix(x, true), RationalFunction(vars_, 1));
    if (!inv) return std::nullopt;
    HeckeElement r = zero();
    for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = (*inv)(i, 0);
    return r;
  }
  // Polynomial entries: Cramer's rule with fraction-free determinants keeps
  // intermediate expressions small, unlike elimination over the fraction field.
  const Matrix<MultiLaurent> m = laurentMultiplicationMatrix(x, true);
  const MultiLaurent det = determinant(m);
  if (det.isZero()) return std::nullopt;
  HeckeElement r = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    Matrix<MultiLaurent> replaced = m;
    for (std::size_t row = 0; row < dim(); ++row) replaced(row, i) = MultiLaurent(vars_, row == 0 ? 1 : 0);
    r.coeffs[i] = RationalFunction(determinant(replaced), det);
  }
  return r;
}

Json HeckeAlgebra::toJson(const HeckeElement& x) const {
  Json j = Json::object();
  for (std::size_t b = 0; b < dim(); ++b) {
    if (x.coeffs[b].isZero()) continue;
    std::ostringstream key;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && n_ >= 10) key << ',';
      key << basis_[b][i] + 1;
    }
    j[key.str()] = x.coeffs[b].str();
  }
  return j;
}

HeckeElement HeckeAlgebra::fromJson(const Json& j) const {
  if (!j.is_object()) throw ParseError("Hecke element must be a JSON object", 0);
  HeckeElement r = zero();
  for (const auto& [key, value] : j.items()) {
    Permutation w;
    if (key.find(',') != std::string::npos) {
      std::stringstream ss(key);
      std::string part;
      while (std::getline(ss, part, ',')) w.push_back(std::stoi(part) - 1);
    } else {
      for (char c : key) {
        if (c < '1' || c > '9') throw ParseError("bad permutation key: " + key, 0);
        w.push_back(c - '1');
      }
    }
    if (static_cast<int>(w.size()) != n_ || index_.find(w) == index_.end())
      throw ParseError("not a permutation of " + std::to_string(n_) + " points: " + key, 0);
    if (!value.is_string()) throw ParseError("coefficient must be a string", 0);
    r.coeffs[indexOf(w)] += RationalFunction::parse(value.get<std::string>(), vars_);
  }
  return r;
}

HeckeSpectralSolution spectralSolveHecke(const HeckeAlgebra& h3, const HeckeAlgebra& h2, const HeckeElement& l) {
  if (h3.n() != 3 || h2.n() != 2) throw ContractViolation("spectral solver works on H_3 and H_2");
  if (l.coeffs.size() != 6) throw ContractViolation("element of another algebra");
  const Vars& vars = h2.vars();
  const auto& a = l.coeffs;
  const RationalFunction vz = var(vars, "v") * var(vars, "z");
  const RationalFunction v2 = var(vars, "v", 2);
  HeckeSpectralSolution s;
  if (a[4] == a[5]) {
    s.x1 = RationalFunction(vars, 1);
    s.x2 = RationalFunction(vars, 0);
  } else {
    s.x1 = a[2] + vz * a[5] - v2 * a[3];
    s.x2 = a[4] - a[5];
  }
  s.p = h2.element({s.x1, s.x2});
  RationalFunction det = s.x1 * s.x1 - v2 * s.x2 * s.x2 + vz * s.x1 * s.x2;
  s.inDense = !det.isZero();
  if (s.inDense) {
    auto inv = inverse(h2.multiplicationMatrix(s.p, false), RationalFunction(vars, 1));
    s.pInverse = h2.zero();
    for (std::size_t i = 0; i < 2; ++i) s.pInverse.coeffs[i] = (*inv)(i, 0);
  }
  return s;
}

// ---- S'_3(3) ------------------------------------------------------------------------------

SPrime3Algebra::SPrime3Algebra(Vars vars) : vars_(vars) {
  requireVariables(vars_, {"v", "z"});
  mu_ = (var(vars_, "v", -1) - var(vars_, "v")) / var(vars_, "z");
}

SPrime3Algebra::SPrime3Algebra(Vars vars, RationalFunction mu) : vars_(vars), mu_(mu.embed(vars)) {
  requireVariables(vars_, {"v", "z"});
}

SPrime3Element SPrime3Algebra::zero() const {
  return SPrime3Element{std::vector<RationalFunction>(6, RationalFunction(vars_, 0))};
}

SPrime3Element SPrime3Algebra::unit() const { return basisElement(0); }

SPrime3Element SPrime3Algebra::basisElement(std::size_t i) const {
  if (i >= 6) throw ContractViolation("basis index out of range");
  SPrime3Element x = zero();
  x.coeffs[i] = RationalFunction(vars_, 1);
  return x;
}

SPrime3Element SPrime3Algebra::element(const std::vector<RationalFunction>& coeffs) const {
  if (coeffs.size() != 6) throw ContractViolation("S'_3(3) elements have six coordinates");
  SPrime3Element x;
  for (const auto& c : coeffs) x.coeffs.push_back(c.embed(vars_));
  return x;
}

SPrime3Element SPrime3Algebra::add(const SPrime3Element& x, const SPrime3Element& y) const {
  SPrime3Element r = x;
  for (std::size_t i = 0; i < 6; ++i) r.coeffs[i] += y.coeffs[i];
  return r;
}

SPrime3Element SPrime3Algebra::scale(const SPrime3Element& x, const RationalFunction& c) const {
  SPrime3Element r = x;
  RationalFunction factor = c.embed(vars_);
  for (auto& coeff : r.coeffs) coeff *= factor;
  return r;
}

SPrime3Element SPrime3Algebra::mul(const SPrime3Element& xe, const SPrime3Element& ye) const {
  if (xe.coeffs.size() != 6 || ye.coeffs.size() != 6) throw ContractViolation("S'_3(3) elements have six coordinates");
  const auto& x = xe.coeffs;
  const auto& y = ye.coeffs;
  const RationalFunction& m = mu_;
  const RationalFunction zv = var(vars_, "v", -1) * var(vars_, "z");
  const RationalFunction v2 = var(vars_, "v", -2);
  SPrime3Element r;
  r.coeffs = {
      y[0] * x[0] + v2 * y[5] * x[5],
      y[0] * x[1] + y[1] * (x[0] + x[3] + m * x[1]) + y[4] * (x[1] + x[5] + m * x[3]) + y[5] * (x[3] - zv * x[5]),
      y[0] * x[2] + y[2] * (x[0] + x[4] + m * x[2]) + y[3] * (x[2] + x[5] + m * x[4]) + y[5] * (x[4] - zv * x[5]),
      y[0] * x[3] + y[2] * (x[1] + x[5] + m * x[3]) + y[3] * (x[0] + x[3] + m * x[1]) + y[5] * x[1],
      y[0] * x[4] + y[1] * (x[2] + x[5] + m * x[4]) + y[4] * (x[0] + x[4] + m * x[2]) + y[5] * x[2],
      y[0] * x[5] + y[5] * (x[0] + zv * x[5]),
  };
  return r;
}

SPrime3Element SPrime3Algebra::ry(const SPrime3Element& x) const {
  SPrime3Element r = x;
  std::swap(r.coeffs[3], r.coeffs[4]);
  return r;
}

Matrix<RationalFunction> SPrime3Algebra::multiplicationMatrix(const SPrime3Element& x, bool left) const {
  Matrix<RationalFunction> m(6, 6, RationalFunction(vars_, 0));
  for (std::size_t j = 0; j < 6; ++j) {
    SPrime3Element b = basisElement(j);
    SPrime3Element image = left ? mul(x, b) : mul(b, x);
    for (std::size_t i = 0; i < 6; ++i) m(i, j) = image.coeffs[i];
  }
  return m;
}

std::optional<SPrime3Element> SPrime3Algebra::invert(const SPrime3Element& x) const {
  auto inv = inverse(multiplicationMatrix(x, true), RationalFunction(vars_, 1));
  if (!inv) return std::nullopt;
  SPrime3Element r = zero();
  for (std::size_t i = 0; i < 6; ++i) r.coeffs[i] = (*inv)(i, 0);
  return r;
}

Json SPrime3Algebra::toJson(const SPrime3Element& x) const {
  Json j = Json::array();
  for (const auto& c : x.coeffs) j.push_back(c.str());
  return j;
}

SPrime3Element SPrime3Algebra::fromJson(const Json& j) const {
  if (!j.is_array() || j.size() != 6) throw ParseError("S'_3(3) element must be a list of six strings", 0);
  std::vector<RationalFunction> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("coefficient must be a string", 0);
    coeffs.push_back(RationalFunction::parse(c.get<std::string>(), vars_));
  }
  return element(coeffs);
}

SPrime3SpectralSolution spectralSolveSPrime3(const SPrime3Algebra& s, const SPrime3Element& x, const SPrime3Element& b) {
  const Vars& vars = s.vars();
  const RationalFunction zero(vars, 0), one(vars, 1);
  // Unknowns y0, y1, y2, y3 = y4, y5.
  std::vector<SPrime3Element> unknowns;
  for (std::size_t i : {0, 1, 2, 3, 5}) {
    SPrime3Element u = s.basisElement(i);
    if (i == 3) u.coeffs[4] = one;
    unknowns.push_back(u);
  }
  auto asymmetry = [&](const SPrime3Element& y) {
    SPrime3Element xy = s.mul(x, y), by = s.mul(b, y);
    return std::pair{xy.coeffs[3] - xy.coeffs[4], by.coeffs[3] - by.coeffs[4]};
  };
  Matrix<RationalFunction> m(2, unknowns.size(), zero);
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    auto [rx, rb] = asymmetry(unknowns[k]);
    m(0, k) = rx;
    m(1, k) = rb;
  }
  SPrime3SpectralSolution out;
  for (const auto& v : nullspace(m, one)) {
    SPrime3Element y = s.zero();
    for (std::size_t k = 0; k < unknowns.size(); ++k) y = s.add(y, s.scale(unknowns[k], v[k]));
    out.solutions.push_back(y);
  }
  std::vector<SPrime3Element> candidates;
  auto [ux, ub] = asymmetry(s.unit());
  if (ux.isZero() && ub.isZero()) candidates.push_back(s.unit());
  for (const auto& y : out.solutions) candidates.push_back(y);
  for (std::size_t i = 0; i < out.solutions.size(); ++i)
    for (std::size_t j = i + 1; j < out.solutions.size(); ++j) candidates.push_back(s.add(out.solutions[i], out.solutions[j]));
  if (!out.solutions.empty()) {
    SPrime3Element all = s.zero();
    for (const auto& y : out.solutions) all = s.add(all, y);
    candidates.push_back(all);
  }
  for (const auto& y : candidates) {
    auto inv = s.invert(y);
    if (!inv) continue;
    out.inDense = true;
    out.y = y;
    out.yInverse = *inv;
    break;
  }
  return out;
}

// ---- density ----------------------------------------------------------------------------------

namespace {

Vars genericVars(std::vector<std::string> prefix, std::size_t count) {
  for (std::size_t i = 1; i <= count; ++i) prefix.push_back("x" + std::to_string(i));
  return Vars(prefix);
}

MultiLaurent randomLaurent(std::mt19937_64& rng, const Vars& vars, const std::vector<std::string>& names) {
  // Wide ranges and at least two terms: small supports put visible mass on
  // the singular locus (cancelling terms, coefficients that are loop multiples).
  std::uniform_int_distribution<int> coef(1, 97), sign(0, 1), expo(-5, 5), terms(2, 4);
  MultiLaurent p(vars, 0);
  int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    MultiLaurent term(vars, sign(rng) ? coef(rng) : -coef(rng));
    for (const auto& name : names) term *= MultiLaurent::variable(vars, name, expo(rng));
    p += term;
  }
  return p;
}

// A nonzero value at one point proves the Laurent determinant nonzero; only
// when the point happens to be a root is the symbolic determinant expanded.
bool laurentDeterminantNonzero(const Matrix<MultiLaurent>& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(2, 61), den(1, 13);
  std::vector<Rational> point;
  for (std::size_t i = 0; i < m(0, 0).vars().size(); ++i) point.emplace_back(num(rng), den(rng));
  Matrix<Rational> at(m.rows(), m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) at(i, j) = evaluate(m(i, j), point);
  if (sgn(determinant(at, Rational(1))) != 0) return true;
  return !determinant(m).isZero();
}

void fillLeading(DensityReport& report, const MultiLaurent& residue) {
  const int x1 = residue.vars().index("x1");
  report.residue = residue;
  if (residue.isZero()) return;
  report.x1Degree = residue.maxDegree(x1);
  MultiLaurent leading(residue.vars(), 0);
  bool subleading = false;
  for (const auto& [e, c] : residue.terms()) {
    if (e[x1] == report.x1Degree) leading.addTerm(e, c);
    if (e[x1] == report.x1Degree - 1) subleading = true;
  }
  report.x1LeadingIsMonic = leading == MultiLaurent::variable(residue.vars(), "x1", report.x1Degree);
  report.x1SubleadingVanishes = !subleading;
}

}  // namespace

DensityReport densityWitness(const std::string& algebra, int n, int trials, std::uint64_t seed, bool symbolic) {
  DensityReport report;
  report.algebra = algebra;
  report.n = n;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  if (algebra == "hecke") {
    HeckeAlgebra h(n);
    report.dim = h.dim();
    if (symbolic) {
      Vars vars = genericVars({"v", "z"}, h.dim());
      HeckeAlgebra g(n, vars);
      std::vector<RationalFunction> coeffs;
      for (std::size_t i = 1; i <= g.dim(); ++i) coeffs.emplace_back(MultiLaurent::variable(vars, "x" + std::to_string(i)));
      MultiLaurent det = determinant(g.laurentMultiplicationMatrix(g.element(coeffs), true));
      fillLeading(report, residueModIdeal(det, {"z"}, {"v"}));
    }
    for (int t = 0; t < trials; ++t) {
      std::vector<RationalFunction> coeffs;
      for (std::size_t i = 0; i < h.dim(); ++i) coeffs.emplace_back(randomLaurent(rng, h.vars(), {"v", "z"}));
      if (laurentDeterminantNonzero(h.laurentMultiplicationMatrix(h.element(coeffs), true), rng)) ++report.invertible;
    }
  } else if (algebra == "tl") {
    TLAlgebra tl(n);
    report.dim = tl.dim();
    auto laurentMatrix = [](const Matrix<RationalFunction>& m, const Vars& vars) {
      Matrix<MultiLaurent> out(m.rows(), m.cols(), MultiLaurent(vars, 0));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).toLaurent();
      return out;
    };
    if (symbolic) {
      Vars vars = genericVars({"mu"}, tl.dim());
      TLAlgebra g(n, vars, RationalFunction(MultiLaurent::variable(vars, "mu")));
      std::vector<RationalFunction> coeffs;
      for (std::size_t i = 1; i <= g.dim(); ++i) coeffs.emplace_back(MultiLaurent::variable(vars, "x" + std::to_string(i)));
      MultiLaurent det = determinant(laurentMatrix(g.multiplicationMatrix(g.element(coeffs), true), vars));
      fillLeading(report, residueModIdeal(det, {"mu"}, {}));
    }
    for (int t = 0; t < trials; ++t) {
      std::vector<RationalFunction> coeffs;
      for (std::size_t i = 0; i < tl.dim(); ++i) coeffs.emplace_back(randomLaurent(rng, tl.vars(), {"A"}));
      if (laurentDeterminantNonzero(laurentMatrix(tl.multiplicationMatrix(tl.element(coeffs), true), tl.vars()), rng))
        ++report.invertible;
    }
  } else {
    throw ContractViolation("unknown algebra: " + algebra);
  }
  return report;
}

}  // namespace skein
