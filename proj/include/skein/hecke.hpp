#pragma once

// Hecke algebra H_n(v,z) of braid-like oriented n-tangles, the six-dimensional
// module S'_3(3) of the alternating 3-tangle, and their spectral solvers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skein/dense.hpp"
#include "skein/diagram.hpp"
#include "skein/diagram_io.hpp"
#include "skein/poly.hpp"

namespace skein {

/// One-line notation, 0-based: perm[i] is the image of i.
using Permutation = std::vector<int>;

/// A reduced word for `w` (0-based generator indices, read left to right).
std::vector<int> reducedWord(const Permutation& w);
int permutationLength(const Permutation& w);

struct HeckeElement {
  std::vector<RationalFunction> coeffs;
  bool operator==(const HeckeElement&) const = default;
};

class HeckeAlgebra {
 public:
  /// H_n over `vars`, which must contain "v" and "z".
  explicit HeckeAlgebra(int n, Vars vars = Vars{"v", "z"});

  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const Vars& vars() const { return vars_; }
  /// For n = 3: (1, s1, s2, s1s2s1, s1s2, s2s1). Otherwise ordered by length,
  /// then by reduced word.
  const std::vector<Permutation>& basis() const { return basis_; }
  int indexOf(const Permutation& w) const;

  HeckeElement zero() const;
  HeckeElement unit() const;
  HeckeElement basisElement(std::size_t i) const;
  /// The positive generator on strands i, i+1 (0-based).
  HeckeElement generator(int i) const;
  HeckeElement element(const std::vector<RationalFunction>& coeffs) const;

  HeckeElement add(const HeckeElement& x, const HeckeElement& y) const;
  HeckeElement scale(const HeckeElement& x, const RationalFunction& c) const;
  HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const;
  /// x times the generator i (or its inverse v^-2 s - v^-1 z).
  HeckeElement mulGenerator(const HeckeElement& x, int i, bool inverse = false) const;

  /// Signed 1-based braid generators: +k is the positive crossing of strands
  /// k, k+1, -k its inverse.
  HeckeElement fromBraid(const std::vector<int>& generators) const;
  /// Requires an oriented diagram of crossings only with every strand upward.
  HeckeElement fromTangle(const TangleDiagram& t) const;

  /// Anti-automorphism reversing words: T_w -> T_{w^-1}.
  HeckeElement transposeRy(const HeckeElement& x) const;
  /// Embedding of an element of H_k on strands i..i+k-1.
  HeckeElement place(const HeckeAlgebra& small, const HeckeElement& x, int i) const;

  /// Column j is the image of basis element j under Z -> x*Z (left) or
  /// Z -> Z*x (right).
  Matrix<RationalFunction> multiplicationMatrix(const HeckeElement& x, bool left) const;
  /// Same matrix with Laurent entries; requires Laurent coefficients.
  Matrix<MultiLaurent> laurentMultiplicationMatrix(const HeckeElement& x, bool left) const;
  std::optional<HeckeElement> invert(const HeckeElement& x) const;

  /// {"213": "v*z", ...} with 1-based one-line keys.
  Json toJson(const HeckeElement& x) const;
  HeckeElement fromJson(const Json& j) const;

 private:
  int n_;
  Vars vars_;
  std::vector<Permutation> basis_;
  std::map<Permutation, int> index_;
  std::vector<std::vector<int>> words_;
};

/// Outcome of the H_3 spectral solver; P = x1 + x2*s1 in H_2.
struct HeckeSpectralSolution {
  bool inDense = false;
  RationalFunction x1, x2;
  HeckeElement p, pInverse;
};

/// Finds P in H_2 with L*P_(1) invariant under transposeRy.
HeckeSpectralSolution spectralSolveHecke(const HeckeAlgebra& h3, const HeckeAlgebra& h2, const HeckeElement& l);

// ---- S'_3(3) -----------------------------------------------------------------------

struct SPrime3Element {
  std::vector<RationalFunction> coeffs;
  bool operator==(const SPrime3Element&) const = default;
};

/// The module of the 3-tangle with alternating boundary orientation, with
/// multiplication given by fixed structure constants in v, z and a loop
/// scalar mu. The constants are associative exactly when mu is the trivial
/// circle value (v^-1 - v)/z, which is the default.
class SPrime3Algebra {
 public:
  /// `vars` must contain "v" and "z".
  explicit SPrime3Algebra(Vars vars = Vars{"v", "z"});
  /// Arbitrary loop scalar, e.g. a formal variable.
  SPrime3Algebra(Vars vars, RationalFunction mu);

  const Vars& vars() const { return vars_; }
  const RationalFunction& mu() const { return mu_; }
  static constexpr std::size_t dim() { return 6; }

  SPrime3Element zero() const;
  SPrime3Element unit() const;
  SPrime3Element basisElement(std::size_t i) const;
  SPrime3Element element(const std::vector<RationalFunction>& coeffs) const;
  SPrime3Element add(const SPrime3Element& x, const SPrime3Element& y) const;
  SPrime3Element scale(const SPrime3Element& x, const RationalFunction& c) const;
  SPrime3Element mul(const SPrime3Element& x, const SPrime3Element& y) const;

  /// Swaps e3 and e4, fixing the rest; an anti-automorphism.
  SPrime3Element ry(const SPrime3Element& x) const;

  Matrix<RationalFunction> multiplicationMatrix(const SPrime3Element& x, bool left) const;
  std::optional<SPrime3Element> invert(const SPrime3Element& x) const;

  /// Six polynomial strings.
  Json toJson(const SPrime3Element& x) const;
  SPrime3Element fromJson(const Json& j) const;

 private:
  Vars vars_;
  RationalFunction mu_;
};

struct SPrime3SpectralSolution {
  bool inDense = false;
  /// Basis of the solution space of the linear conditions.
  std::vector<SPrime3Element> solutions;
  SPrime3Element y, yInverse;
};

/// Finds Y = ry(Y), invertible, with X*Y = ry(X*Y) and B*Y = ry(B*Y).
SPrime3SpectralSolution spectralSolveSPrime3(const SPrime3Algebra& s, const SPrime3Element& x, const SPrime3Element& b);

// ---- density --------------------------------------------------------------------------

struct DensityReport {
  std::string algebra;
  int n = 0;
  std::size_t dim = 0;
  /// Determinant of left multiplication by the generic element, reduced
  /// modulo the degenerating ideal ((z, v^2 - 1) for Hecke, the loop value
  /// for Temperley-Lieb). Empty when the symbolic part was skipped.
  std::optional<MultiLaurent> residue;
  int x1Degree = 0;
  bool x1LeadingIsMonic = false;
  bool x1SubleadingVanishes = false;
  int trials = 0;
  int invertible = 0;
};

/// `algebra` is "tl" or "hecke". The symbolic residue is computed when
/// `symbolic` is set (practical for n <= 3).
DensityReport densityWitness(const std::string& algebra, int n, int trials, std::uint64_t seed, bool symbolic);

}  // namespace skein
