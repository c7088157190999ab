#ifndef VG_OMATROID_HPP
#define VG_OMATROID_HPP

#include <optional>
#include <vector>

#include "vg/arrangement.hpp"

namespace vg {

/// Set of signed circuits: sign vectors of minimal linear dependencies,
/// closed under global negation, sorted deterministically.
struct SignedCircuitSet {
  size_t n = 0;
  std::vector<SignVector> circuits;

  bool operator==(const SignedCircuitSet& o) const {
    return n == o.n && circuits == o.circuits;
  }
};

SignedCircuitSet make_circuit_set(size_t n, std::vector<SignVector> circuits);

/// Enumerates supports in size-lex order, skipping supersets of found
/// circuits; the sign pattern comes from the 1-dimensional kernel of the
/// support's normal columns.
SignedCircuitSet signed_circuits(const Arrangement& a);

struct CircuitEquivalence {
  std::vector<size_t> permutation;  // index i of c1 maps to permutation[i] of c2
  std::vector<int> reorientation;   // epsilon in {+-1}^n applied on c2 side
};

/// Searches for (permutation, reorientation) with eps . pi(c1) = c2.
/// Permutations are pruned by per-index circuit-support fingerprints.
std::optional<CircuitEquivalence> circuits_equivalent(
    const SignedCircuitSet& c1, const SignedCircuitSet& c2);

/// Same search restricted to the identity permutation (pure reorientation).
std::optional<std::vector<int>> reorientation_only(const SignedCircuitSet& c1,
                                                   const SignedCircuitSet& c2);

/// Applies a reorientation to every circuit (for tests and the harnesses).
SignedCircuitSet reorient(const SignedCircuitSet& c, const std::vector<int>& eps);

/// Ground-set bijection carrying the flats of one intersection lattice onto
/// the other, found by fingerprint-pruned backtracking.
std::optional<std::vector<size_t>> lattice_isomorphic(const Arrangement& a1,
                                                      const Arrangement& a2);

}  // namespace vg

#endif
