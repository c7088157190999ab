#ifndef VG_VGALGEBRA_HPP
#define VG_VGALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "vg/arrangement.hpp"
#include "vg/matrix.hpp"

namespace vg {

/// Field-valued function on the chambers of a fixed arrangement, stored as a
/// dense vector in the deterministic chamber order.
struct VGElement {
  FieldSpec field = FieldSpec::rationals();
  std::vector<Scalar> values;

  bool operator==(const VGElement& o) const;
};

/// An arrangement together with its chamber set, coefficient field and all
/// single-hyperplane restrictions. Immutable once constructed; every
/// operation is a pure function of it.
class VGSpace {
 public:
  VGSpace(Arrangement a, FieldSpec field);

  const Arrangement& arrangement() const { return arr_; }
  const ChamberSet& chambers() const { return chambers_; }
  const FieldSpec& field() const { return field_; }
  size_t dim() const { return chambers_.size(); }
  size_t n() const { return arr_.n(); }
  const Restriction& restr(size_t i) const { return restrictions_[i]; }

  VGElement constant(const Scalar& c) const;
  VGElement indicator(size_t chamber) const;
  /// Heaviside function x_i^side, side in {+1, -1}.
  VGElement heaviside(size_t i, int side) const;

  VGElement add(const VGElement& f, const VGElement& g) const;
  VGElement sub(const VGElement& f, const VGElement& g) const;
  VGElement mul(const VGElement& f, const VGElement& g) const;
  VGElement scale(const Scalar& c, const VGElement& f) const;
  VGElement complement(const VGElement& f) const;  // 1 - f
  bool is_idempotent(const VGElement& f) const;

  /// Values of rho_{H_i}(f) on the chambers of the restriction to H_i.
  std::vector<Scalar> rho(size_t i, const VGElement& f) const;
  /// The constant value of rho_{H_i}(f) when it is constant.
  std::optional<Scalar> rho_constant(size_t i, const VGElement& f) const;

  bool in_fil1(const VGElement& f) const;
  /// Supp(f) = {i : rho_{H_i}(f) != 0} for f in Fil^1; DomainError otherwise.
  std::vector<size_t> support(const VGElement& f) const;

  /// All idempotents of Fil^1 other than 0 and 1, found by searching jump
  /// vectors in {-1,0,1}^n. Sorted deterministically.
  std::vector<VGElement> gheav_bruteforce() const;

  /// Heavisides plus all alternating functions over odd subsets of the
  /// hyperplanes through rank-2 flats. Requires characteristic != 2 (in
  /// characteristic 2 only the brute-force enumeration is meaningful).
  std::vector<VGElement> gheav_structural() const;

  struct AltPair {
    VGElement plus;   // value 1 on the first sector of the cyclic walk
    VGElement minus;  // the complement
    std::vector<int> jumps;  // rho constants on the subset, in subset order
  };

  /// Alternating function around the rank-2 flat spanned by the hyperplanes
  /// `subset` (indices into the arrangement). Returns the pair only when the
  /// local pattern extends to an idempotent element of Fil^1.
  std::optional<AltPair> alt_function(const std::vector<size_t>& subset) const;

  std::string element_json(const VGElement& f) const;
  VGElement element_from_json(const std::string& text) const;

 private:
  Arrangement arr_;
  FieldSpec field_;
  ChamberSet chambers_;
  std::vector<Restriction> restrictions_;
};

/// Graded class: coordinates in the deterministic complement basis of
/// grVG^degree (monomials in size-lex order extending the previous level).
struct GradedClass {
  size_t degree = 0;
  std::vector<Scalar> coords;
};

/// Echelonized bases of Fil^0 c ... c Fil^ell with chosen graded
/// complements; the workhorse for everything graded.
class FilChain {
 public:
  explicit FilChain(const VGSpace& space);
  FilChain(VGSpace&&) = delete;  // the chain references the space

  const VGSpace& space() const { return *space_; }
  size_t levels() const { return dims_.size(); }          // ell + 1
  size_t dim(size_t k) const { return dims_.at(k); }
  size_t graded_dim(size_t k) const;                      // = b_k
  const la::Subspace& fil(size_t k) const { return fil_.at(k); }
  /// Monomial subsets whose classes form the complement basis of grVG^k.
  const std::vector<std::vector<size_t>>& comp_subsets(size_t k) const;

  bool in_fil(size_t k, const VGElement& f) const;

  /// Class of f in grVG^k; DomainError when f is outside Fil^k.
  GradedClass graded_class(const VGElement& f, size_t k) const;
  GradedClass zero_class(size_t k) const;
  bool is_zero(const GradedClass& u) const;
  /// Canonical lift of a class to Fil^degree.
  VGElement lift(const GradedClass& u) const;
  /// Lift-multiply-reduce product grVG^j x grVG^k -> grVG^{j+k}.
  GradedClass graded_mult(const GradedClass& u, const GradedClass& v) const;

  /// Monomial prod_{i in S} x_i^+ as a chamber function.
  VGElement monomial(const std::vector<size_t>& subset) const;

  std::string class_json(const GradedClass& u) const;
  GradedClass class_from_json(const std::string& text) const;

 private:
  const VGSpace* space_;
  std::vector<size_t> dims_;
  std::vector<la::Subspace> fil_;
  std::vector<std::vector<std::vector<size_t>>> comp_subsets_;  // per level
  std::vector<std::vector<la::Vec>> comp_values_;               // per level
  std::vector<la::SpanSolver> solvers_;  // per level: Fil^{k-1} basis + comp
};

/// Projective lines R.ybar through the classes of generalized Heavisides,
/// normalized (first nonzero coordinate 1), deduplicated and sorted. Each
/// returned line is verified square-zero in grVG^2.
std::vector<la::Vec> sqzero(const VGSpace& space, const FilChain& fc);

/// Presentation verification: the circuit relations of the filtered and
/// graded presentations evaluate to zero, relation uniqueness holds, and in
/// characteristic 2 the graded relation coincides with the exterior-boundary
/// relation coefficientwise.
struct PresentationReport {
  bool ok = true;
  size_t circuits_checked = 0;
  std::vector<std::string> failures;
};

PresentationReport verify_presentations(const VGSpace& space, const FilChain& fc);

/// Deterministic ordering used for gHeav lists and line sets.
bool element_less(const FieldSpec& field, const std::vector<Scalar>& a,
                  const std::vector<Scalar>& b);

}  // namespace vg

#endif
