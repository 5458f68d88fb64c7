#pragma once

// Seeded property suites over the constructions. Each suite draws all of its
// randomness from one seed, so a run is reproducible from (suite, seed).

#include <cstdint>
#include <string>
#include <vector>

#include "skein/constructions.hpp"

namespace skein {

struct SuiteReport {
  std::string name;
  int instances = 0;
  int checks = 0;
  std::vector<Certificate> failures;
  /// Report-only lines (Alexander comparisons, skipped instances).
  std::vector<std::string> log;

  bool passed() const { return failures.empty(); }
  std::string summary() const;
};

/// Budgets large enough for the suites' instance sizes.
Caps suiteCaps();

/// Random marked links, each mutated about all three axes. The bracket is
/// compared always; HOMFLYPT and F when the mutation is component preserving.
SuiteReport mutationSuite(std::uint64_t seed, int trials, const Caps& caps);

/// Rotant pairs of order n. Bracket for every n, HOMFLYPT for n <= 4, Lambda
/// for n <= 3, Tait numbers always. Alexander values are logged only.
SuiteReport rotantSuite(std::uint64_t seed, const std::vector<int>& orders, int trials, const Caps& caps);

/// Rotors with two arcs between neighbouring segments: bracket and HOMFLYPT.
SuiteReport twoArcRotorSuite(std::uint64_t seed, const std::vector<int>& orders, int trials, const Caps& caps);

/// Unoriented cyclic words against their per-letter rotations about the
/// y and z axes, compared as classes in the annulus skein module.
SuiteReport annulusWordSuite(std::uint64_t seed, int trials);

/// Words in (T on strands 1,2 then T' on strands 2,3) and 2-tangles on
/// strands 1,2, against the same words with the two factors swapped.
SuiteReport swappedPairSuite(std::uint64_t seed, int trials);

/// Oriented words in one 3-tangle and 2-tangles, each 3-tangle letter
/// rotated and then reversed, compared by HOMFLYPT of the closures with 0, 1
/// and 2 outer full twists. Instances cycle through upward letters rotated
/// about z, alternating letters rotated about z, and letters rotated about y.
SuiteReport singleLetterWordSuite(std::uint64_t seed, int trials, const Caps& caps);

/// As above with two distinct 3-tangles rotated about y, boundary
/// orientations (+,-,+) and (+,+,-) in turn.
SuiteReport twoLetterWordSuite(std::uint64_t seed, int trials, const Caps& caps);

/// 2-cables of mutant knot pairs: HOMFLYPT and F.
SuiteReport cabledMutantSuite(std::uint64_t seed, int trials, const Caps& caps);

/// 2-cables of (L1 # L2, L1 # -L2): HOMFLYPT and F.
SuiteReport cabledSumSuite(std::uint64_t seed, int trials, const Caps& caps);

/// Every suite above at its default size.
std::vector<SuiteReport> allSuites(std::uint64_t seed, const Caps& caps);

}  // namespace skein
