#ifndef VG_RECONSTRUCT_HPP
#define VG_RECONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vg/omatroid.hpp"
#include "vg/vgalgebra.hpp"

namespace vg {

/// Rebuilds the tope graph from the algebra side alone: chambers are the
/// primitive idempotents, gHeav is enumerated from Fil^1, and adjacency is
/// "exactly two generalized Heavisides distinguish the pair". Refuses (with a
/// DomainError) when #gHeav != 2n, i.e. outside the generic-in-codimension-2
/// hypothesis.
Graph recover_tope_graph_from_heav(const VGSpace& space);

/// Graph on the chambers where {C, C'} is an edge iff exactly one of the
/// chosen functions takes different values on C and C'.
Graph generalized_tope_graph(const VGSpace& space,
                             const std::vector<VGElement>& choice);

struct HarnessMode {
  enum class Kind { exhaustive, random } kind = Kind::exhaustive;
  uint64_t seed = 0;
  size_t trials = 0;

  static HarnessMode exhaustive() { return {}; }
  static HarnessMode random(uint64_t seed, size_t trials) {
    return {Kind::random, seed, trials};
  }
};

struct HarnessCounterexample {
  std::vector<size_t> indices;  // gHeav indices or sqzero line indices
  std::vector<int> signs;       // graded harness only
  std::string detail;
};

struct HarnessReport {
  std::string harness;  // "filtered" or "graded"
  std::string arrangement_hash;
  std::string field;
  std::string mode;
  uint64_t seed = 0;
  size_t examined = 0;
  size_t basis_valid = 0;
  size_t necessary_pass = 0;   // filtered: choices passing the graph checks
  size_t matching = 0;         // isomorphic / reorientation-equivalent
  size_t not_good = 0;         // graded only
  std::vector<HarnessCounterexample> counterexamples;

  std::string to_json() const;
};

/// Exhaustive or seeded-random sweep over basis-valid n-subsets of gHeav,
/// classifying each generalized tope graph. A "pass but not isomorphic"
/// entry is recorded as a counterexample, never silently dropped.
HarnessReport conjecture_harness_filtered(const VGSpace& space,
                                          const HarnessMode& mode);

struct AutGroups {
  uint64_t graph_order = 0;
  uint64_t filt_order = 0;
  mpz_class set_order;       // (#chambers)!
  bool graph_inside_filt = false;  // verified element-by-element
};

/// Automorphism group orders of the tope graph, the filtered algebra and the
/// chamber permutations. Filtered automorphisms are counted as tuples
/// (g_1..g_n) of generalized Heavisides inducing a bijection onto the
/// chamber sign-vector set.
AutGroups aut_groups(const VGSpace& space);

/// Detected circuit supports of a generator family: S is a circuit iff the
/// product over S vanishes and no product over a proper subset does.
/// DomainError when the generators do not span grVG^1.
std::vector<std::vector<size_t>> detect_circuits_from_products(
    const FilChain& fc, const std::vector<GradedClass>& gens);

/// The 1-dimensional relation among the deleted-index products of a circuit,
/// normalized to first entry 1. InvariantError when the kernel is not a
/// line or has a zero entry.
la::Vec circuit_relation(const FilChain& fc,
                         const std::vector<GradedClass>& gens,
                         const std::vector<size_t>& circuit);

struct RecoveredCircuits {
  SignedCircuitSet circuits;
  // goodness certificate: per detected circuit, its +-1 relation vector
  std::vector<std::pair<std::vector<size_t>, std::vector<int>>> relations;
};

struct CheckCircuitsResult {
  bool good = false;
  std::string reason;  // offending circuit and relation when not good
  RecoveredCircuits recovered;
};

/// Non-throwing core of the circuit recovery.
CheckCircuitsResult try_check_circuits(const FilChain& fc,
                                       const std::vector<GradedClass>& gens);

/// Throws DomainError ("not good generators ...") when a circuit relation is
/// not proportional to a +-1 vector.
RecoveredCircuits check_circuits(const FilChain& fc,
                                 const std::vector<GradedClass>& gens);

struct RecoverVerdict {
  bool good = false;
  bool equivalent = false;
  bool pure_reorientation = false;
  std::string detail;
};

/// Thm-5.3 pipeline: finds the square-zero lines (must be n coordinate
/// lines), rescales the canonical generators by the given unit scalars, runs
/// the circuit recovery and compares against the geometric signed circuits.
RecoverVerdict recover_and_compare(const VGSpace& space, const FilChain& fc,
                                   const std::vector<Scalar>& mu);

/// Sweep over n-subsets of square-zero lines and +-1 scalar patterns,
/// classifying every choice as not-spanning / not-good / equivalent /
/// counterexample.
HarnessReport conjecture_harness_graded(const VGSpace& space,
                                        const FilChain& fc,
                                        const HarnessMode& mode);

}  // namespace vg

#endif
