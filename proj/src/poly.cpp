#include "skein/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>

namespace skein {

// ---- Vars -------------------------------------------------------------------

namespace {

const std::vector<std::string>* intern(const std::vector<std::string>& names) {
  static std::mutex mutex;
  static std::set<std::vector<std::string>> table;
  std::lock_guard<std::mutex> lock(mutex);
  return &*table.insert(names).first;
}

}  // namespace

Vars::Vars() : names_(intern({})) {}
Vars::Vars(std::initializer_list<std::string> names) : names_(intern(std::vector<std::string>(names))) {}
Vars::Vars(const std::vector<std::string>& names) : names_(intern(names)) {
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw ContractViolation("duplicate variable name");
}

int Vars::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return static_cast<int>(i);
  return -1;
}

Vars Vars::merged(const Vars& other) const {
  std::vector<std::string> out = names();
  for (const auto& n : other.names())
    if (index(n) < 0) out.push_back(n);
  return Vars(out);
}

Vars unifyVars(const Vars& a, const Vars& b) {
  if (a == b) return a;
  if (a.empty()) return b;
  if (b.empty()) return a;
  throw ContractViolation("variable-list mismatch");
}

// ---- MultiLaurent ---------------------------------------------------------

namespace {

// Brings a bare empty-variable constant onto the variable list `v`.
MultiLaurent adopt(const MultiLaurent& p, const Vars& v) {
  if (p.vars() == v) return p;
  if (!p.vars().empty()) throw ContractViolation("variable-list mismatch");
  MultiLaurent out(v);
  if (!p.isZero()) out.addTerm(Exponents(v.size(), 0), p.constantTerm());
  return out;
}

}  // namespace

MultiLaurent::MultiLaurent(Vars vars, const Integer& c) : vars_(vars) {
  if (c != 0) terms_.emplace(Exponents(vars.size(), 0), c);
}

MultiLaurent MultiLaurent::monomial(Vars vars, Exponents e, const Integer& c) {
  if (e.size() != vars.size()) throw ContractViolation("exponent length does not match variables");
  MultiLaurent p(vars);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

MultiLaurent MultiLaurent::variable(Vars vars, std::string_view name, int power) {
  int i = vars.index(name);
  if (i < 0) throw ContractViolation("unknown variable " + std::string(name));
  Exponents e(vars.size(), 0);
  e[i] = power;
  return monomial(vars, std::move(e));
}

bool MultiLaurent::isConstant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool MultiLaurent::isOne() const { return isConstant() && constantTerm() == 1; }

bool MultiLaurent::isUnit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

Integer MultiLaurent::constantTerm() const { return coefficient(Exponents(vars_.size(), 0)); }

Integer MultiLaurent::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

const std::pair<const Exponents, Integer>& MultiLaurent::leadingTerm() const {
  if (terms_.empty()) throw ContractViolation("leading term of zero");
  return *terms_.rbegin();
}

int MultiLaurent::maxDegree(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] > d) d = e[var];
    first = false;
  }
  return d;
}

int MultiLaurent::minDegree(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] < d) d = e[var];
    first = false;
  }
  return d;
}

MultiLaurent MultiLaurent::embed(const Vars& target) const {
  if (target == vars_) return *this;
  std::vector<int> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = target.index(vars_.names()[i]);
  MultiLaurent out(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw ContractViolation("cannot embed: variable " + vars_.names()[i] + " missing");
      f[where[i]] = e[i];
    }
    out.addTerm(f, c);
  }
  return out;
}

void MultiLaurent::addTerm(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  Vars v = unifyVars(vars_, o.vars_);
  if (v != vars_) *this = adopt(*this, v);
  if (o.vars_ == v) {
    for (const auto& [e, c] : o.terms_) addTerm(e, c);
  } else {
    for (const auto& [e, c] : adopt(o, v).terms_) addTerm(e, c);
  }
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
  Vars v = unifyVars(vars_, o.vars_);
  if (v != vars_) *this = adopt(*this, v);
  MultiLaurent rhs = adopt(o, v);
  for (const auto& [e, c] : rhs.terms_) addTerm(e, -c);
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a0, const MultiLaurent& b0) {
  Vars v = unifyVars(a0.vars_, b0.vars_);
  MultiLaurent a = adopt(a0, v);
  MultiLaurent b = adopt(b0, v);
  MultiLaurent out(v);
  Exponents e(v.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.addTerm(e, ca * cb);
    }
  }
  return out;
}

MultiLaurent operator*(MultiLaurent a, const Integer& c) {
  if (c == 0) return MultiLaurent(a.vars());
  for (auto& [e, x] : a.terms_) x *= c;
  return a;
}

MultiLaurent& MultiLaurent::operator*=(const MultiLaurent& o) { return *this = *this * o; }

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool MultiLaurent::operator==(const MultiLaurent& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  if (isConstant() && o.isConstant()) return constantTerm() == o.constantTerm();
  return false;
}

MultiLaurent MultiLaurent::pow(int k) const {
  if (k < 0) {
    if (!isUnit()) throw ArithmeticError("negative power of a non-unit Laurent polynomial");
    const auto& [e, c] = *terms_.begin();
    Exponents f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[i] = -e[i];
    return monomial(vars_, f, c).pow(-k);
  }
  MultiLaurent result(vars_, 1);
  MultiLaurent base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

MultiLaurent MultiLaurent::shifted(const Exponents& shift) const {
  MultiLaurent out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

std::string MultiLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_.names()[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiLaurent& p) { return os << p.str(); }

// ---- parsing ----------------------------------------------------------------

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return std::string(s.substr(b, i - b));
  }
  std::string ident() {
    skip();
    std::size_t b = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return std::string(s.substr(b, i - b));
  }
};

MultiLaurent parseSum(Cursor& cur, const Vars& vars) {
  MultiLaurent out(vars);
  bool first = true;
  while (true) {
    int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (cur.accept('+')) {
    } else if (!first) {
      break;
    }
    first = false;
    Integer coeff = 1;
    bool haveCoeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = Integer(cur.digits());
      haveCoeff = true;
      cur.accept('*');
    }
    Exponents e(vars.size(), 0);
    bool haveVar = false;
    while (std::isalpha(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_') {
      std::size_t at = cur.i;
      std::string name = cur.ident();
      int idx = vars.index(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
      int power = 1;
      if (cur.accept('^')) {
        int s = 1;
        if (cur.accept('-')) s = -1;
        std::string d = cur.digits();
        if (d.empty()) throw ParseError("expected exponent", cur.i);
        power = s * std::stoi(d);
      }
      e[idx] += power;
      haveVar = true;
      if (!cur.accept('*')) break;
    }
    if (!haveCoeff && !haveVar) throw ParseError("expected term", cur.i);
    out.addTerm(e, sign * coeff);
    char c = cur.peek();
    if (c != '+' && c != '-') break;
  }
  return out;
}

}  // namespace

MultiLaurent MultiLaurent::parse(std::string_view text, Vars vars) {
  Cursor cur{text};
  if (cur.peek() == '0' && text.find_first_not_of(" 0") == std::string_view::npos) return MultiLaurent(vars);
  MultiLaurent p = parseSum(cur, vars);
  if (!cur.eof()) throw ParseError("unexpected character '" + std::string(1, cur.peek()) + "'", cur.i);
  return p;
}

// ---- algorithms ---------------------------------------------------------------

Exponents monomialShift(const MultiLaurent& p) {
  Exponents s(p.vars().size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = p.minDegree(static_cast<int>(i));
  return s;
}

Integer content(const MultiLaurent& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

Exponents negated(Exponents e) {
  for (auto& x : e) x = -x;
  return e;
}

MultiLaurent stripMonomial(const MultiLaurent& p) {
  if (p.isZero()) return p;
  return p.shifted(negated(monomialShift(p)));
}

// Division of polynomials (non-negative exponents) by repeated leading-term
// elimination; nullopt when b does not divide a exactly.
std::optional<MultiLaurent> polyDivide(const MultiLaurent& a, const MultiLaurent& b) {
  if (b.isZero()) throw ArithmeticError("division by zero");
  MultiLaurent q(a.vars());
  MultiLaurent r = a;
  const auto& [eb, cb] = b.leadingTerm();
  Exponents d(eb.size());
  while (!r.isZero()) {
    const auto& [er, cr] = r.leadingTerm();
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = er[i] - eb[i];
      if (d[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    Integer c = cr / cb;
    MultiLaurent t = MultiLaurent::monomial(a.vars(), d, c);
    q.addTerm(d, c);
    r -= t * b;
  }
  return q;
}

// Coefficients of p viewed as a polynomial in variable k.
std::map<int, MultiLaurent> coefficientsIn(const MultiLaurent& p, int k) {
  std::map<int, MultiLaurent> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[k] = 0;
    auto [it, ins] = out.try_emplace(e[k], p.vars());
    it->second.addTerm(f, c);
  }
  return out;
}

MultiLaurent normalizeSign(MultiLaurent p) {
  if (!p.isZero() && p.leadingTerm().second < 0) return -p;
  return p;
}

MultiLaurent polyGcd(const MultiLaurent& a, const MultiLaurent& b);

MultiLaurent contentIn(const MultiLaurent& p, int k) {
  MultiLaurent g(p.vars());
  for (const auto& [d, c] : coefficientsIn(p, k)) {
    g = polyGcd(g, c);
    if (g.isOne()) break;
  }
  return g;
}

MultiLaurent divideExact(const MultiLaurent& a, const MultiLaurent& b) {
  auto q = polyDivide(a, b);
  if (!q) throw ArithmeticError("internal: inexact polynomial division");
  return *q;
}

MultiLaurent primitivePartIn(const MultiLaurent& p, int k) {
  if (p.isZero()) return p;
  return normalizeSign(divideExact(p, contentIn(p, k)));
}

// Pseudo-remainder of a by b with respect to variable k.
MultiLaurent pseudoRemainder(MultiLaurent a, const MultiLaurent& b, int k) {
  int db = b.maxDegree(k);
  MultiLaurent lcb = coefficientsIn(b, k).rbegin()->second;
  while (!a.isZero() && a.maxDegree(k) >= db) {
    int da = a.maxDegree(k);
    MultiLaurent lca = coefficientsIn(a, k).rbegin()->second;
    Exponents shift(a.vars().size(), 0);
    shift[k] = da - db;
    a = lcb * a - lca * b.shifted(shift);
  }
  return a;
}

MultiLaurent polyGcd(const MultiLaurent& a, const MultiLaurent& b) {
  if (a.isZero()) return normalizeSign(b);
  if (b.isZero()) return normalizeSign(a);
  const Vars& vars = a.vars();
  int k = -1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (a.maxDegree(static_cast<int>(i)) > 0 || b.maxDegree(static_cast<int>(i)) > 0) {
      k = static_cast<int>(i);
      break;
    }
  }
  if (k < 0) {
    Integer g;
    Integer ca = a.constantTerm(), cb = b.constantTerm();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return MultiLaurent(vars, g);
  }
  if (a.maxDegree(k) == 0) return polyGcd(a, contentIn(b, k));
  if (b.maxDegree(k) == 0) return polyGcd(contentIn(a, k), b);
  MultiLaurent ca = contentIn(a, k), cb = contentIn(b, k);
  MultiLaurent g = polyGcd(ca, cb);
  MultiLaurent p = divideExact(a, ca), q = divideExact(b, cb);
  if (p.maxDegree(k) < q.maxDegree(k)) std::swap(p, q);
  while (true) {
    MultiLaurent r = pseudoRemainder(p, q, k);
    if (r.isZero()) break;
    if (r.maxDegree(k) == 0) {
      q = MultiLaurent(vars, 1);
      break;
    }
    p = q;
    q = primitivePartIn(r, k);
  }
  return normalizeSign(g * primitivePartIn(q, k));
}

}  // namespace

std::optional<MultiLaurent> exactDivide(const MultiLaurent& a0, const MultiLaurent& b0) {
  Vars v = unifyVars(a0.vars(), b0.vars());
  MultiLaurent a = adopt(a0, v), b = adopt(b0, v);
  if (b.isZero()) throw ArithmeticError("division by zero");
  if (a.isZero()) return MultiLaurent(v);
  Exponents sa = monomialShift(a), sb = monomialShift(b);
  auto q = polyDivide(a.shifted(negated(sa)), b.shifted(negated(sb)));
  if (!q) return std::nullopt;
  Exponents s(sa.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = sa[i] - sb[i];
  return q->shifted(s);
}

MultiLaurent gcd(const MultiLaurent& a0, const MultiLaurent& b0) {
  Vars v = unifyVars(a0.vars(), b0.vars());
  return polyGcd(stripMonomial(adopt(a0, v)), stripMonomial(adopt(b0, v)));
}

MultiLaurent residueModIdeal(const MultiLaurent& p, const std::vector<std::string>& killed,
                             const std::vector<std::string>& involutive) {
  std::vector<int> kill, inv;
  for (const auto& n : killed)
    if (int i = p.vars().index(n); i >= 0) kill.push_back(i);
  for (const auto& n : involutive)
    if (int i = p.vars().index(n); i >= 0) inv.push_back(i);
  MultiLaurent out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    bool dead = false;
    for (int k : kill) {
      if (e[k] < 0) throw ArithmeticError("negative power of a variable in the ideal");
      if (e[k] > 0) dead = true;
    }
    if (dead) continue;
    Exponents f = e;
    for (int k : inv) f[k] = ((f[k] % 2) + 2) % 2;
    out.addTerm(f, c);
  }
  return out;
}

MultiLaurent mapExponents(const MultiLaurent& p, const Vars& target,
                          const std::vector<std::vector<Rational>>& matrix) {
  if (matrix.size() != target.size()) throw ContractViolation("exponent map has wrong row count");
  MultiLaurent out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(target.size());
    for (std::size_t r = 0; r < target.size(); ++r) {
      if (matrix[r].size() != e.size()) throw ContractViolation("exponent map has wrong column count");
      Rational acc = 0;
      for (std::size_t j = 0; j < e.size(); ++j) acc += matrix[r][j] * e[j];
      acc.canonicalize();
      if (acc.get_den() != 1) throw ArithmeticError("fractional exponent in specialization");
      f[r] = static_cast<int>(acc.get_num().get_si());
    }
    out.addTerm(f, c);
  }
  return out;
}

// ---- RationalFunction -----------------------------------------------------------

RationalFunction::RationalFunction(const MultiLaurent& num) : num_(num), den_(num.vars(), 1) {}

RationalFunction::RationalFunction(const MultiLaurent& num, const MultiLaurent& den) {
  Vars v = unifyVars(num.vars(), den.vars());
  num_ = adopt(num, v);
  den_ = adopt(den, v);
  if (den_.isZero()) throw ArithmeticError("division by zero");
  normalize();
}

void RationalFunction::normalize() {
  const Vars v = num_.vars();
  if (num_.isZero()) {
    den_ = MultiLaurent(v, 1);
    return;
  }
  if (den_.isUnit()) {
    const auto& [e, c] = *den_.terms().begin();
    num_ = num_.shifted(negated(e)) * Integer(c);
    den_ = MultiLaurent(v, 1);
    return;
  }
  Exponents sd = monomialShift(den_);
  den_ = den_.shifted(negated(sd));
  num_ = num_.shifted(negated(sd));
  Exponents sn = monomialShift(num_);
  MultiLaurent n = num_.shifted(negated(sn));
  MultiLaurent g = polyGcd(n, den_);
  if (!g.isOne()) {
    n = divideExact(n, g);
    den_ = divideExact(den_, g);
  }
  if (den_.leadingTerm().second < 0) {
    n = -n;
    den_ = -den_;
  }
  num_ = n.shifted(sn);
}

RationalFunction RationalFunction::parse(std::string_view text, Vars vars) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '(') {
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis", 0);
    MultiLaurent num = MultiLaurent::parse(t.substr(1, close - 1), vars);
    std::string_view rest = trim(t.substr(close + 1));
    if (rest.empty()) return RationalFunction(num);
    if (rest.front() != '/') throw ParseError("expected '/'", close + 1);
    rest = trim(rest.substr(1));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
      throw ParseError("denominator must be parenthesized", close + 1);
    return RationalFunction(num, MultiLaurent::parse(rest.substr(1, rest.size() - 2), vars));
  }
  return RationalFunction(MultiLaurent::parse(t, vars));
}

MultiLaurent RationalFunction::toLaurent() const {
  if (!den_.isOne()) throw ArithmeticError("not a Laurent polynomial: " + str());
  return num_;
}

RationalFunction RationalFunction::embed(const Vars& target) const {
  RationalFunction out;
  out.num_ = num_.embed(target);
  out.den_ = den_.embed(target);
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (isZero()) throw ArithmeticError("division by zero");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.isZero()) return *this;
  if (isZero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.isOne()) normalize();
    return *this;
  }
  MultiLaurent n = num_ * o.den_ + o.num_ * den_;
  MultiLaurent d = den_ * o.den_;
  num_ = n;
  den_ = d;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (den_.isOne() && o.den_.isOne()) {
    num_ *= o.num_;
    if (num_.isZero()) den_ = MultiLaurent(num_.vars(), 1);
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::str() const {
  if (den_.isOne()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

// ---- substitution and evaluation -----------------------------------------------

RationalFunction substitute(const MultiLaurent& p, const std::map<std::string, MultiLaurent>& bindings,
                            const Vars& target) {
  const Vars& src = p.vars();
  std::vector<MultiLaurent> image(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::string& name = src.names()[i];
    auto it = bindings.find(name);
    if (it != bindings.end()) {
      image[i] = adopt(it->second, target);
    } else if (target.index(name) >= 0) {
      image[i] = MultiLaurent::variable(target, name);
    } else {
      bool used = p.minDegree(static_cast<int>(i)) != 0 || p.maxDegree(static_cast<int>(i)) != 0;
      if (used) throw ContractViolation("variable " + name + " is not bound");
      image[i] = MultiLaurent(target, 1);
    }
  }
  // Negative powers of non-unit images are factored out and divided at the end.
  Exponents shift(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i)
    if (!image[i].isUnit()) shift[i] = std::min(0, p.minDegree(static_cast<int>(i)));
  MultiLaurent num(target);
  for (const auto& [e, c] : p.terms()) {
    MultiLaurent t(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      int k = e[i] - shift[i];
      if (k != 0) t *= image[i].pow(k);
    }
    num += t;
  }
  MultiLaurent den(target, 1);
  for (std::size_t i = 0; i < src.size(); ++i)
    if (shift[i] != 0) den *= image[i].pow(-shift[i]);
  return RationalFunction(num, den);
}

RationalFunction substitute(const RationalFunction& f, const std::map<std::string, MultiLaurent>& bindings,
                            const Vars& target) {
  return substitute(f.numerator(), bindings, target) / substitute(f.denominator(), bindings, target);
}

Rational evaluate(const MultiLaurent& p, const std::vector<Rational>& point) {
  if (point.size() != p.vars().size()) throw ContractViolation("evaluation point has wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = Rational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (sgn(point[i]) == 0) {
        if (e[i] < 0) throw ArithmeticError("zero raised to a negative power");
        t = 0;
        break;
      }
      Rational base = e[i] > 0 ? point[i] : Rational(1) / point[i];
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e[i])));
      mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e[i])));
      Rational pw(num, den);
      pw.canonicalize();
      t *= pw;
    }
    acc += t;
  }
  return acc;
}

Rational evaluate(const RationalFunction& f, const std::vector<Rational>& point) {
  Rational d = evaluate(f.denominator(), point);
  if (sgn(d) == 0) throw ArithmeticError("pole at evaluation point");
  return evaluate(f.numerator(), point) / d;
}

}  // namespace skein
