#pragma once

// Temperley-Lieb algebra of n-tangles over a field of rational functions,
// Kauffman bracket transfer sweep, and annulus closure.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/dense.hpp"
#include "skein/diagram.hpp"
#include "skein/diagram_io.hpp"
#include "skein/poly.hpp"

namespace skein {

/// Non-crossing perfect matching of 2n boundary points. Point j < n is
/// bottom point j, point n + j is top point j.
struct PlanarMatching {
  int n = 0;
  std::vector<int> mate;

  bool operator==(const PlanarMatching&) const = default;
  auto operator<=>(const PlanarMatching&) const = default;
  std::string str() const;
  static PlanarMatching parse(const std::string& text, int n);
};

bool isPlanar(const PlanarMatching& m);
/// All planar matchings of 2n points, in a fixed enumeration order.
std::vector<PlanarMatching> enumerateMatchings(int n);
std::size_t catalan(int n);

/// Composite of two matchings, `below` under `above`, and the number of
/// closed loops created in the middle.
std::pair<PlanarMatching, int> stack(const PlanarMatching& below, const PlanarMatching& above);

/// Coefficient vector over the basis of a TLAlgebra.
struct TLElement {
  std::vector<RationalFunction> coeffs;
  bool operator==(const TLElement&) const = default;
};

/// Coefficients of powers of the core curve of the solid torus.
struct AnnulusClass {
  std::map<int, RationalFunction> coeffs;
  bool operator==(const AnnulusClass&) const = default;
  std::string str() const;
};

/// The loop value of the Kauffman bracket, -A^2 - A^-2, over `vars`.
MultiLaurent bracketLoop(const Vars& vars);

class TLAlgebra {
 public:
  /// TL_n with coefficients over `vars` (must include "A") and the bracket
  /// loop value.
  explicit TLAlgebra(int n, Vars vars = Vars{"A"});
  /// TL_n with an arbitrary loop value, e.g. a formal symbol.
  TLAlgebra(int n, Vars vars, RationalFunction loop);

  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const Vars& vars() const { return vars_; }
  const RationalFunction& loop() const { return loop_; }
  /// For n = 2: (identity, hook). For n = 3: (1, U2, U1, U1U2, U2U1) where
  /// Ui is the hook on strands i, i+1 and products read bottom to top.
  /// Other n: identity first, then enumeration order.
  const std::vector<PlanarMatching>& basis() const { return basis_; }
  int indexOf(const PlanarMatching& m) const;

  TLElement zero() const;
  TLElement unit() const;
  TLElement basisElement(std::size_t i) const;
  /// Hook on strands i, i+1 (0-based).
  TLElement hook(int i) const;
  TLElement element(const std::vector<RationalFunction>& coeffs) const;

  TLElement add(const TLElement& x, const TLElement& y) const;
  TLElement scale(const TLElement& x, const RationalFunction& c) const;
  /// x below, y on top.
  TLElement mul(const TLElement& x, const TLElement& y) const;

  /// Skein class of an n-tangle via the bracket relation. Requires the
  /// standard loop value.
  TLElement fromTangle(const TangleDiagram& t) const;

  /// Matrix of Z -> x*Z (left) or Z -> Z*x (right); column j is the image of
  /// basis element j.
  Matrix<RationalFunction> multiplicationMatrix(const TLElement& x, bool left) const;
  std::optional<TLElement> invert(const TLElement& x) const;

  /// Induced action of the pi rotations on the basis.
  TLElement rotate(const TLElement& x, Axis axis) const;
  /// Embedding of an element of TL_k placed on strands i..i+k-1.
  TLElement place(const TLAlgebra& small, const TLElement& x, int i) const;

  AnnulusClass annulusReduce(const TLElement& x) const;

  Json toJson(const TLElement& x) const;
  TLElement fromJson(const Json& j) const;

 private:
  int n_;
  Vars vars_;
  RationalFunction loop_;
  bool standardLoop_;
  std::vector<PlanarMatching> basis_;
  std::map<PlanarMatching, int> index_;
  /// Product of basis elements i (below) and j (above): basis index and
  /// number of closed loops.
  std::vector<std::vector<std::pair<int, int>>> table_;
};

/// Kauffman bracket of a closed diagram, normalized so the unknot has
/// bracket 1; framing twists contribute (-A^3)^t.
MultiLaurent bracket(const TangleDiagram& d);

/// Outcome of the 3-strand spectral-parameter solver.
struct SpectralSolution {
  bool inDense = false;
  /// P = x*1 + y*hook in TL_2.
  RationalFunction x, y;
  TLElement p, pInverse;
};

/// Finds P in TL_2 with L*P_(1) = P_(1)*r_y(L) (axis Y) or
/// L*P_(1) = P_(2)*r_z(L) (axis Z), P invertible.
SpectralSolution spectralSolveTL(const TLAlgebra& tl3, const TLAlgebra& tl2, const TLElement& l, Axis axis);
/// Closed-form inverse of x*1 + y*hook in TL_2; requires x != 0, x + mu y != 0.
TLElement tl2Inverse(const TLAlgebra& tl2, const RationalFunction& x, const RationalFunction& y);

}  // namespace skein
