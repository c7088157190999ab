#include "vg/matrix.hpp"

namespace vg::la {

Matrix Matrix::from_rows(FieldSpec field, const std::vector<Vec>& rows) {
  size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(field, rows.size(), nc);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw UsageError("ragged matrix rows");
    for (size_t j = 0; j < nc; ++j) m.at(i, j) = field.normalize(rows[i][j]);
  }
  return m;
}

Matrix Matrix::identity(FieldSpec field, size_t n) {
  Matrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Vec Matrix::row(size_t i) const {
  Vec v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_row(size_t i, const Vec& v) {
  for (size_t j = 0; j < cols_; ++j) at(i, j) = field_.normalize(v[j]);
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (size_t k = 0; k < a_.size(); ++k)
    if (!field_.eq(a_[k], o.a_[k])) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  const FieldSpec& F = m.field();
  std::vector<Vec> work;
  work.reserve(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) work.push_back(m.row(i));

  std::vector<Vec> basis;
  std::vector<size_t> pivots;
  size_t pr = 0;  // next row of `work` to place
  for (size_t col = 0; col < m.cols() && pr < work.size(); ++col) {
    size_t sel = pr;
    while (sel < work.size() && F.is_zero(work[sel][col])) ++sel;
    if (sel == work.size()) continue;
    std::swap(work[pr], work[sel]);
    Scalar piv_inv = F.inv(work[pr][col]);
    for (size_t j = col; j < m.cols(); ++j)
      work[pr][j] = F.mul(work[pr][j], piv_inv);
    for (size_t i = 0; i < work.size(); ++i) {
      if (i == pr || F.is_zero(work[i][col])) continue;
      Scalar f = work[i][col];
      for (size_t j = col; j < m.cols(); ++j)
        work[i][j] = F.sub(work[i][j], F.mul(f, work[pr][j]));
    }
    pivots.push_back(col);
    ++pr;
  }
  basis.assign(work.begin(), work.begin() + static_cast<long>(pr));

  Subspace s;
  s.field = F;
  s.ambient = m.cols();
  s.basis = std::move(basis);
  s.pivots = std::move(pivots);
  return RrefResult{pr, std::move(s)};
}

Subspace kernel(const Matrix& m) {
  const FieldSpec& F = m.field();
  RrefResult r = rref(m);
  const Subspace& e = r.basis;
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : e.pivots) is_pivot[p] = true;

  std::vector<Vec> gens;
  for (size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols(), F.zero());
    v[j] = F.one();
    for (size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = F.neg(e.basis[i][j]);
    gens.push_back(std::move(v));
  }
  return rref(Matrix::from_rows(F, gens)).basis;
}

Vec reduce(const Subspace& s, const Vec& v, Vec* coeffs) {
  if (v.size() != s.ambient) throw UsageError("ambient dimension mismatch");
  const FieldSpec& F = s.field;
  Vec r = v;
  for (auto& x : r) x = F.normalize(x);
  if (coeffs) coeffs->assign(s.basis.size(), F.zero());
  for (size_t i = 0; i < s.basis.size(); ++i) {
    Scalar c = r[s.pivots[i]];
    if (F.is_zero(c)) continue;
    if (coeffs) (*coeffs)[i] = c;
    for (size_t j = 0; j < s.ambient; ++j)
      r[j] = F.sub(r[j], F.mul(c, s.basis[i][j]));
  }
  return r;
}

bool contains(const Subspace& s, const Vec& v) {
  Vec r = reduce(s, v);
  for (const auto& x : r)
    if (!s.field.is_zero(x)) return false;
  return true;
}

bool equal(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient != s2.ambient) throw UsageError("ambient dimension mismatch");
  if (s1.pivots != s2.pivots) return false;
  for (size_t i = 0; i < s1.basis.size(); ++i)
    for (size_t j = 0; j < s1.ambient; ++j)
      if (!s1.field.eq(s1.basis[i][j], s2.basis[i][j])) return false;
  return true;
}

Subspace sum(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient != s2.ambient) throw UsageError("ambient dimension mismatch");
  std::vector<Vec> rows = s1.basis;
  rows.insert(rows.end(), s2.basis.begin(), s2.basis.end());
  if (rows.empty()) {
    Subspace s;
    s.field = s1.field;
    s.ambient = s1.ambient;
    return s;
  }
  return rref(Matrix::from_rows(s1.field, rows)).basis;
}

Subspace intersection(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient != s2.ambient) throw UsageError("ambient dimension mismatch");
  const FieldSpec& F = s1.field;
  const size_t n = s1.ambient;
  // Zassenhaus: eliminate [A|A ; B|0]; rows with zero left half carry the
  // intersection in the right half.
  std::vector<Vec> rows;
  for (const auto& r : s1.basis) {
    Vec w(2 * n, F.zero());
    for (size_t j = 0; j < n; ++j) w[j] = w[n + j] = r[j];
    rows.push_back(std::move(w));
  }
  for (const auto& r : s2.basis) {
    Vec w(2 * n, F.zero());
    for (size_t j = 0; j < n; ++j) w[j] = r[j];
    rows.push_back(std::move(w));
  }
  Subspace s;
  s.field = F;
  s.ambient = n;
  if (rows.empty()) return s;
  RrefResult rr = rref(Matrix::from_rows(F, rows));
  std::vector<Vec> inter;
  for (size_t i = 0; i < rr.basis.basis.size(); ++i) {
    if (rr.basis.pivots[i] < n) continue;
    inter.emplace_back(rr.basis.basis[i].begin() + static_cast<long>(n),
                       rr.basis.basis[i].end());
  }
  if (inter.empty()) return s;
  return rref(Matrix::from_rows(F, inter)).basis;
}

SpanSolver::SpanSolver(FieldSpec field, const std::vector<Vec>& rows)
    : field_(field) {
  const size_t k = rows.size();
  const size_t n = rows.empty() ? 0 : rows[0].size();
  // eliminate rows augmented with identity tails; tails track combinations
  std::vector<Vec> work;
  for (size_t i = 0; i < k; ++i) {
    Vec w(n + k, field.zero());
    for (size_t j = 0; j < n; ++j) w[j] = field.normalize(rows[i][j]);
    w[n + i] = field.one();
    work.push_back(std::move(w));
  }
  size_t pr = 0;
  std::vector<size_t> pivots;
  for (size_t col = 0; col < n && pr < k; ++col) {
    size_t sel = pr;
    while (sel < k && field.is_zero(work[sel][col])) ++sel;
    if (sel == k) continue;
    std::swap(work[pr], work[sel]);
    Scalar inv = field.inv(work[pr][col]);
    for (size_t j = 0; j < n + k; ++j) work[pr][j] = field.mul(work[pr][j], inv);
    for (size_t i = 0; i < k; ++i) {
      if (i == pr || field.is_zero(work[i][col])) continue;
      Scalar f = work[i][col];
      for (size_t j = 0; j < n + k; ++j)
        work[i][j] = field.sub(work[i][j], field.mul(f, work[pr][j]));
    }
    pivots.push_back(col);
    ++pr;
  }
  if (pr != k) throw UsageError("SpanSolver requires independent rows");
  reduced_.field = field;
  reduced_.ambient = n;
  reduced_.pivots = pivots;
  for (size_t i = 0; i < k; ++i) {
    reduced_.basis.emplace_back(work[i].begin(), work[i].begin() + static_cast<long>(n));
    transform_.emplace_back(work[i].begin() + static_cast<long>(n), work[i].end());
  }
}

std::optional<Vec> SpanSolver::solve(const Vec& target) const {
  const size_t k = transform_.size();
  Vec coeffs;
  Vec rem = reduce(reduced_, target, &coeffs);
  for (const auto& x : rem)
    if (!field_.is_zero(x)) return std::nullopt;
  Vec out(k, field_.zero());
  for (size_t i = 0; i < k; ++i) {
    if (field_.is_zero(coeffs[i])) continue;
    for (size_t j = 0; j < k; ++j)
      out[j] = field_.add(out[j], field_.mul(coeffs[i], transform_[i][j]));
  }
  return out;
}

std::optional<Vec> solve_in_span(FieldSpec field, const std::vector<Vec>& rows,
                                 const Vec& target) {
  const size_t k = rows.size();
  const size_t n = target.size();
  // Augment each row with a coefficient-tracking tail, eliminate, then read
  // the combination off the tail of the reduced target.
  std::vector<Vec> work;
  for (size_t i = 0; i < k; ++i) {
    Vec w(n + k, field.zero());
    for (size_t j = 0; j < n; ++j) w[j] = field.normalize(rows[i][j]);
    w[n + i] = field.one();
    work.push_back(std::move(w));
  }
  Vec t(n + k, field.zero());
  for (size_t j = 0; j < n; ++j) t[j] = field.normalize(target[j]);

  size_t pr = 0;
  for (size_t col = 0; col < n && pr < k; ++col) {
    size_t sel = pr;
    while (sel < k && field.is_zero(work[sel][col])) ++sel;
    if (sel == k) continue;
    std::swap(work[pr], work[sel]);
    Scalar inv = field.inv(work[pr][col]);
    for (size_t j = 0; j < n + k; ++j) work[pr][j] = field.mul(work[pr][j], inv);
    for (size_t i = 0; i < k; ++i) {
      if (i == pr || field.is_zero(work[i][col])) continue;
      Scalar f = work[i][col];
      for (size_t j = 0; j < n + k; ++j)
        work[i][j] = field.sub(work[i][j], field.mul(f, work[pr][j]));
    }
    if (!field.is_zero(t[col])) {
      Scalar f = t[col];
      for (size_t j = 0; j < n + k; ++j)
        t[j] = field.sub(t[j], field.mul(f, work[pr][j]));
    }
    ++pr;
  }
  for (size_t j = 0; j < n; ++j)
    if (!field.is_zero(t[j])) return std::nullopt;
  Vec coeffs(k, field.zero());
  for (size_t i = 0; i < k; ++i) coeffs[i] = field.neg(t[n + i]);
  return coeffs;
}

}  // namespace vg::la
