#pragma once

// Polynomial invariants of closed diagrams.
//
// Variable conventions: bracket in A; Jones and Alexander in s = t^(1/2);
// HOMFLYPT in v, z; Kauffman polynomials in a, x.

#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/poly.hpp"

namespace skein {

enum class InvariantKind { Bracket, Jones, Homflypt, KauffmanF, KauffmanLambda, Alexander, Determinant };

InvariantKind parseInvariantKind(const std::string& name);
/// "bracket", "jones", "homflypt", "kauffmanF", "kauffmanLambda",
/// "alexander", "determinant".
std::string invariantName(InvariantKind kind);
const std::vector<InvariantKind>& allInvariantKinds();

/// Crossing budgets. Diagrams above a budget raise ResourceError.
struct Caps {
  int bracket = 16;
  int skein = 12;
  /// Defaults overridden by SKEIN_BRACKET_CAP and SKEIN_SKEIN_CAP.
  static Caps fromEnvironment();
};

const Vars& bracketVariables();
const Vars& jonesVariables();
const Vars& homflyptVariables();
const Vars& kauffmanVariables();

/// Value of a trivial circle added to a nonempty link.
MultiLaurent homflyptLoop();
MultiLaurent kauffmanLoop();

MultiLaurent bracketPolynomial(const TangleDiagram& d, const Caps& caps = Caps::fromEnvironment());
/// (-A^3)^(-Tait) times the bracket, rewritten with A^e -> s^(-e/2).
MultiLaurent jones(const TangleDiagram& d, const Caps& caps = Caps::fromEnvironment());
MultiLaurent jonesFromBracket(const MultiLaurent& bracket, int tait);
MultiLaurent homflypt(const TangleDiagram& d, const Caps& caps = Caps::fromEnvironment());
/// v -> s^2, z -> s - s^-1.
MultiLaurent jonesFromHomflypt(const MultiLaurent& p);
/// v -> 1, z -> s - s^-1.
MultiLaurent alexanderFromHomflypt(const MultiLaurent& p);
/// Regular isotopy invariant of unoriented framed diagrams.
MultiLaurent kauffmanLambda(const TangleDiagram& d, const Caps& caps = Caps::fromEnvironment());
/// a^(-Tait) times Lambda; requires an oriented diagram.
MultiLaurent kauffmanF(const TangleDiagram& d, const Caps& caps = Caps::fromEnvironment());
MultiLaurent alexander(const TangleDiagram& d, const Caps& caps = Caps::fromEnvironment());
/// |Alexander(s = i)|.
Integer determinant(const TangleDiagram& d, const Caps& caps = Caps::fromEnvironment());
Integer determinantFromAlexander(const MultiLaurent& alexander);

struct InvariantValue {
  InvariantKind kind;
  MultiLaurent polynomial;
  Integer integer;
  bool operator==(const InvariantValue& o) const {
    return kind == o.kind && polynomial == o.polynomial && integer == o.integer;
  }
  std::string str() const;
};

InvariantValue computeInvariant(InvariantKind kind, const TangleDiagram& d, const Caps& caps = Caps::fromEnvironment());

struct EqualityEntry {
  InvariantKind kind;
  InvariantValue left, right;
  bool equal;
};

struct EqualityReport {
  std::vector<EqualityEntry> entries;
  bool allEqual() const;
};

EqualityReport verifyEqual(const TangleDiagram& d1, const TangleDiagram& d2, const std::vector<InvariantKind>& kinds,
                           const Caps& caps = Caps::fromEnvironment());

}  // namespace skein
