#pragma once

// Exact multivariate Laurent polynomials over Z and their fraction field.

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponents = std::vector<int>;

/// An ordered, interned list of variable symbols. Copies are pointer-sized and
/// equality is identity of the interned list.
class Vars {
 public:
  Vars();
  Vars(std::initializer_list<std::string> names);
  explicit Vars(const std::vector<std::string>& names);

  const std::vector<std::string>& names() const { return *names_; }
  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  /// Index of `name`, or -1.
  int index(std::string_view name) const;
  /// This list followed by the names of `other` not already present.
  Vars merged(const Vars& other) const;

  bool operator==(const Vars& o) const { return names_ == o.names_; }
  bool operator!=(const Vars& o) const { return names_ != o.names_; }

 private:
  const std::vector<std::string>* names_;
};

/// Sparse Laurent polynomial with integer coefficients. Terms are kept in a
/// map keyed by exponent vector (lexicographic), zero coefficients are never
/// stored, so equality is structural.
class MultiLaurent {
 public:
  using Terms = std::map<Exponents, Integer>;

  MultiLaurent() = default;
  explicit MultiLaurent(Vars vars) : vars_(vars) {}
  MultiLaurent(Vars vars, const Integer& c);
  MultiLaurent(Vars vars, long c) : MultiLaurent(vars, Integer(c)) {}

  static MultiLaurent monomial(Vars vars, Exponents e, const Integer& c = 1);
  static MultiLaurent variable(Vars vars, std::string_view name, int power = 1);
  /// Parses the canonical rendering (also accepts `*`-free juxtaposition of
  /// a coefficient and a monomial, and parentheses-free sums).
  static MultiLaurent parse(std::string_view text, Vars vars);

  const Vars& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  bool isOne() const;
  /// Single term with coefficient +1 or -1: a unit of the Laurent ring.
  bool isUnit() const;
  Integer constantTerm() const;
  Integer coefficient(const Exponents& e) const;
  /// Largest term in lexicographic exponent order. Requires !isZero().
  const std::pair<const Exponents, Integer>& leadingTerm() const;

  int maxDegree(int var) const;
  int minDegree(int var) const;

  /// Re-express over `target`, which must contain every variable this
  /// polynomial actually uses.
  MultiLaurent embed(const Vars& target) const;

  MultiLaurent& operator+=(const MultiLaurent& o);
  MultiLaurent& operator-=(const MultiLaurent& o);
  MultiLaurent& operator*=(const MultiLaurent& o);
  MultiLaurent operator-() const;
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
  friend MultiLaurent operator*(MultiLaurent a, const Integer& c);
  bool operator==(const MultiLaurent& o) const;
  bool operator!=(const MultiLaurent& o) const { return !(*this == o); }

  /// Non-negative powers for any polynomial; negative powers only for units.
  MultiLaurent pow(int k) const;
  /// Multiply by the monomial x^shift.
  MultiLaurent shifted(const Exponents& shift) const;

  void addTerm(const Exponents& e, const Integer& c);

  /// Canonical text: terms in decreasing lexicographic exponent order,
  /// e.g. `-A^5 - A^-3 + A^-7`, `2*v^-1*z + 1`, `0`.
  std::string str() const;

 private:
  friend class RationalFunction;
  Vars vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiLaurent& p);

/// Checks both operands live over the same variables. A bare constant with an
/// empty variable list is accepted on either side and adopts the other's list.
Vars unifyVars(const Vars& a, const Vars& b);

// ---- polynomial algorithms ------------------------------------------------

/// Componentwise minimum exponent vector; p == x^shift * rest with `rest` a
/// polynomial having no monomial factor.
Exponents monomialShift(const MultiLaurent& p);
/// gcd of the integer coefficients (non-negative).
Integer content(const MultiLaurent& p);
/// Exact quotient a / b in the Laurent ring, or nullopt.
std::optional<MultiLaurent> exactDivide(const MultiLaurent& a, const MultiLaurent& b);
/// Greatest common divisor in the Laurent ring, normalized to a polynomial
/// with no monomial factor and positive leading coefficient.
MultiLaurent gcd(const MultiLaurent& a, const MultiLaurent& b);

/// Residue modulo the ideal generated by the `killed` variables and by
/// v^2 - 1 for each v in `involutive`. Killed variables must not appear with
/// negative exponents.
MultiLaurent residueModIdeal(const MultiLaurent& p, const std::vector<std::string>& killed,
                             const std::vector<std::string>& involutive);

/// Monomial change of variables: the exponent vector e of a term maps to
/// M*e over `target`, where M has rational entries. A non-integral image
/// exponent throws ArithmeticError.
MultiLaurent mapExponents(const MultiLaurent& p, const Vars& target,
                          const std::vector<std::vector<Rational>>& matrix);

/// Quotient of Laurent polynomials in canonical reduced form: the denominator
/// is a primitive polynomial without monomial factor and with positive
/// leading coefficient, coprime to the numerator.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const MultiLaurent& num);  // NOLINT(implicit)
  RationalFunction(const MultiLaurent& num, const MultiLaurent& den);
  RationalFunction(Vars vars, long c) : RationalFunction(MultiLaurent(vars, c)) {}

  static RationalFunction parse(std::string_view text, Vars vars);

  const MultiLaurent& numerator() const { return num_; }
  const MultiLaurent& denominator() const { return den_; }
  const Vars& vars() const { return num_.vars(); }
  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
  bool isLaurent() const { return den_.isOne(); }
  /// The Laurent polynomial this equals; throws ArithmeticError otherwise.
  MultiLaurent toLaurent() const;
  RationalFunction embed(const Vars& target) const;

  RationalFunction inverse() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// `num` when the denominator is 1, otherwise `(num)/(den)`.
  std::string str() const;

 private:
  void normalize();
  MultiLaurent num_;
  MultiLaurent den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

inline bool isZero(const RationalFunction& f) { return f.isZero(); }
inline bool isZero(const MultiLaurent& p) { return p.isZero(); }
inline bool isZero(const Rational& q) { return sgn(q) == 0; }

/// Ring homomorphism sending each bound variable to the given value (over
/// `target`); unbound variables must also exist in `target` and map to
/// themselves. Negative powers of non-unit images are realized by division,
/// so the result is a rational function.
RationalFunction substitute(const MultiLaurent& p, const std::map<std::string, MultiLaurent>& bindings,
                            const Vars& target);
RationalFunction substitute(const RationalFunction& f,
                            const std::map<std::string, MultiLaurent>& bindings, const Vars& target);

/// Evaluates at rational values for every variable. Throws ArithmeticError on
/// a zero base raised to a negative power.
Rational evaluate(const MultiLaurent& p, const std::vector<Rational>& point);
Rational evaluate(const RationalFunction& f, const std::vector<Rational>& point);

}  // namespace skein
