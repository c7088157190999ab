#ifndef VG_MATRIX_HPP
#define VG_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "vg/field.hpp"

namespace vg::la {

using Vec = std::vector<Scalar>;

/// Dense exact matrix over a fixed coefficient field.
class Matrix {
 public:
  Matrix() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}
  Matrix(FieldSpec field, size_t rows, size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}
  static Matrix from_rows(FieldSpec field, const std::vector<Vec>& rows);
  static Matrix identity(FieldSpec field, size_t n);

  const FieldSpec& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Vec row(size_t i) const;
  void set_row(size_t i, const Vec& v);

  bool operator==(const Matrix& o) const;

 private:
  FieldSpec field_;
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// Row space in reduced row-echelon form. The RREF basis with unit leading
/// coefficients and strictly increasing pivots is canonical, so two subspaces
/// are equal iff their representations are identical.
struct Subspace {
  FieldSpec field = FieldSpec::rationals();
  size_t ambient = 0;
  std::vector<Vec> basis;       // RREF rows, one per dimension
  std::vector<size_t> pivots;   // strictly increasing

  size_t dim() const { return basis.size(); }
};

struct RrefResult {
  size_t rank;
  Subspace basis;
};

/// Reduced row echelon form (leftmost pivots, unit leading coefficients).
RrefResult rref(const Matrix& m);

/// Null space {v : m v = 0}, returned echelonized.
Subspace kernel(const Matrix& m);

/// Exact membership by reduction against the echelon basis.
bool contains(const Subspace& s, const Vec& v);

bool equal(const Subspace& s1, const Subspace& s2);

Subspace sum(const Subspace& s1, const Subspace& s2);

/// Intersection of row spaces (Zassenhaus block elimination).
Subspace intersection(const Subspace& s1, const Subspace& s2);

/// Reduces v against the basis; returns the remainder and (optionally) the
/// coefficients used, so contains() implies v = coeffs * basis exactly.
Vec reduce(const Subspace& s, const Vec& v, Vec* coeffs = nullptr);

/// Solves x * rows = target for a given list of independent rows.
/// Returns std::nullopt when target is outside their span.
std::optional<Vec> solve_in_span(FieldSpec field, const std::vector<Vec>& rows,
                                 const Vec& target);

/// Precomputed elimination of a fixed independent row list, for solving many
/// right-hand sides against the same span.
class SpanSolver {
 public:
  SpanSolver() = default;
  SpanSolver(FieldSpec field, const std::vector<Vec>& rows);

  size_t num_rows() const { return transform_.size(); }
  /// Coefficients x with x * rows = target, or nullopt outside the span.
  std::optional<Vec> solve(const Vec& target) const;

 private:
  FieldSpec field_ = FieldSpec::rationals();
  Subspace reduced_;
  std::vector<Vec> transform_;  // reduced row i = transform_[i] * rows
};

}  // namespace vg::la

#endif
