#ifndef VG_ARRANGEMENT_HPP
#define VG_ARRANGEMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vg/graph.hpp"
#include "vg/matrix.hpp"

namespace vg {

/// Sign vector over {+1, -1, 0}^n. Chambers carry no zero entries.
using SignVector = std::vector<int8_t>;

std::string sign_vector_str(const SignVector& sv);

/// Order with + before -, used everywhere a deterministic chamber order is
/// needed.
bool sign_vector_less(const SignVector& a, const SignVector& b);

/// Central hyperplane arrangement given by exact rational normals. Normals
/// are nonzero and pairwise non-parallel. Soft limits n <= 16, ell <= 5.
class Arrangement {
 public:
  Arrangement(size_t ell, std::vector<la::Vec> normals,
              std::vector<std::string> labels = {});

  size_t ell() const { return ell_; }
  size_t n() const { return normals_.size(); }
  const la::Vec& normal(size_t i) const { return normals_[i]; }
  const std::vector<la::Vec>& normals() const { return normals_; }
  const std::string& label(size_t i) const { return labels_[i]; }

  size_t rank() const;

  /// Arrangement with hyperplane i removed.
  Arrangement deletion(size_t i) const;

  /// Content hash of the defining data; stamped into serialized elements.
  std::string hash() const;

  static Arrangement from_json_text(const std::string& text);
  std::string to_json_text() const;

 private:
  size_t ell_;
  std::vector<la::Vec> normals_;
  std::vector<std::string> labels_;
};

/// Strict feasibility oracle: finds an exact rational point v with
/// sgn(alpha_i . v) = sv_i for every i, or reports infeasibility.
/// Fourier-Motzkin elimination with row normalization and deduplication.
std::optional<la::Vec> feasible(const Arrangement& a, const SignVector& sv);

/// All chambers in deterministic lex order (+ < -), each with one exact
/// interior witness point.
class ChamberSet {
 public:
  static ChamberSet enumerate(const Arrangement& a);

  size_t size() const { return chambers_.size(); }
  const SignVector& chamber(size_t idx) const { return chambers_[idx]; }
  const la::Vec& witness(size_t idx) const { return witnesses_[idx]; }
  size_t index_of(const SignVector& sv) const;
  std::optional<size_t> find(const SignVector& sv) const;
  size_t opposite(size_t idx) const;

 private:
  std::vector<SignVector> chambers_;
  std::vector<la::Vec> witnesses_;
  std::map<SignVector, size_t> index_;
};

/// Separating set {i : C_i != C'_i}.
std::vector<size_t> sep(const ChamberSet& cs, size_t c1, size_t c2);
size_t sep_size(const ChamberSet& cs, size_t c1, size_t c2);

/// Chambers as vertices, edges between chambers with #Sep = 1.
Graph tope_graph(const ChamberSet& cs);

/// The arrangement induced on hyperplane i, with parallel induced normals
/// merged, plus the data needed to lift restricted chambers back.
struct Restriction {
  size_t pivot;                 // index i of the restricted-to hyperplane
  Arrangement sub;              // arrangement inside H_i (ambient ell-1)
  ChamberSet sub_chambers;
  // For original j != i: induced normal index and orientation of the merge.
  std::vector<std::pair<size_t, int>> back_map;   // indexed by original j
  // For each chamber D of `sub`: the A-chambers C+ and C- adjacent across
  // H_i whose closures contain D.
  std::vector<std::pair<size_t, size_t>> lifts;

  Restriction(size_t pivot_, Arrangement sub_, ChamberSet cs)
      : pivot(pivot_), sub(std::move(sub_)), sub_chambers(std::move(cs)) {}
};

Restriction restriction(const Arrangement& a, const ChamberSet& cs, size_t i);

/// Intersection lattice with Moebius function values.
struct Flat {
  uint32_t mask;      // hyperplanes containing the flat
  size_t rank;        // codimension of the flat
  mpz_class moebius;
};

struct Lattice {
  std::vector<Flat> flats;  // sorted by (rank, mask)
  size_t arrangement_rank;
};

Lattice lattice(const Arrangement& a);

/// Characteristic polynomial coefficients, coeffs[d] multiplying t^d.
std::vector<mpz_class> char_poly(const Arrangement& a);
std::vector<mpz_class> char_poly(const Lattice& lat, size_t ell);

/// Betti numbers (b_0, ..., b_ell) read off the characteristic polynomial.
std::vector<mpz_class> betti(const Arrangement& a);

/// Number of chambers predicted by the characteristic polynomial,
/// (-1)^ell chi(-1).
mpz_class zaslavsky_count(const Arrangement& a);

/// All rank-2 flats with the hyperplanes through them.
std::vector<std::vector<size_t>> codim2_flats(const Arrangement& a);

/// True iff every rank-2 flat lies on exactly two hyperplanes
/// (vacuously true below rank 2).
bool is_generic_codim2(const Arrangement& a);

/// Seeded random arrangement with small integer normals; optionally
/// rejection-sampled to be generic in codimension 2, otherwise biased to
/// contain at least one multiple rank-2 flat about half the time.
Arrangement random_arrangement(uint64_t seed, size_t n, size_t ell,
                               bool force_generic);

}  // namespace vg

#endif
