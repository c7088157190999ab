#include "vg/vgalgebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vg/omatroid.hpp"

namespace vg {

bool VGElement::operator==(const VGElement& o) const {
  if (values.size() != o.values.size() || field != o.field) return false;
  for (size_t i = 0; i < values.size(); ++i)
    if (!field.eq(values[i], o.values[i])) return false;
  return true;
}

bool element_less(const FieldSpec& field, const std::vector<Scalar>& a,
                  const std::vector<Scalar>& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = field.cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

VGSpace::VGSpace(Arrangement a, FieldSpec field)
    : arr_(std::move(a)), field_(field), chambers_(ChamberSet::enumerate(arr_)) {
  restrictions_.reserve(arr_.n());
  for (size_t i = 0; i < arr_.n(); ++i)
    restrictions_.push_back(restriction(arr_, chambers_, i));
}

VGElement VGSpace::constant(const Scalar& c) const {
  return VGElement{field_, std::vector<Scalar>(dim(), field_.normalize(c))};
}

VGElement VGSpace::indicator(size_t chamber) const {
  VGElement f = constant(field_.zero());
  f.values.at(chamber) = field_.one();
  return f;
}

VGElement VGSpace::heaviside(size_t i, int side) const {
  if (i >= n()) throw UsageError("hyperplane index out of range");
  if (side != 1 && side != -1) throw UsageError("side must be +1 or -1");
  VGElement f = constant(field_.zero());
  for (size_t c = 0; c < dim(); ++c)
    if (chambers_.chamber(c)[i] == side) f.values[c] = field_.one();
  return f;
}

VGElement VGSpace::add(const VGElement& f, const VGElement& g) const {
  VGElement h = f;
  for (size_t c = 0; c < dim(); ++c) h.values[c] = field_.add(f.values[c], g.values[c]);
  return h;
}

VGElement VGSpace::sub(const VGElement& f, const VGElement& g) const {
  VGElement h = f;
  for (size_t c = 0; c < dim(); ++c) h.values[c] = field_.sub(f.values[c], g.values[c]);
  return h;
}

VGElement VGSpace::mul(const VGElement& f, const VGElement& g) const {
  VGElement h = f;
  for (size_t c = 0; c < dim(); ++c) h.values[c] = field_.mul(f.values[c], g.values[c]);
  return h;
}

VGElement VGSpace::scale(const Scalar& s, const VGElement& f) const {
  VGElement h = f;
  for (size_t c = 0; c < dim(); ++c) h.values[c] = field_.mul(s, f.values[c]);
  return h;
}

VGElement VGSpace::complement(const VGElement& f) const {
  VGElement h = f;
  for (size_t c = 0; c < dim(); ++c) h.values[c] = field_.sub(field_.one(), f.values[c]);
  return h;
}

bool VGSpace::is_idempotent(const VGElement& f) const {
  for (size_t c = 0; c < dim(); ++c) {
    const Scalar& v = f.values[c];
    if (!field_.is_zero(v) && !field_.eq(v, field_.one())) return false;
  }
  return true;
}

std::vector<Scalar> VGSpace::rho(size_t i, const VGElement& f) const {
  const Restriction& r = restr(i);
  std::vector<Scalar> out;
  out.reserve(r.lifts.size());
  for (const auto& [cp, cm] : r.lifts)
    out.push_back(field_.sub(f.values[cp], f.values[cm]));
  return out;
}

std::optional<Scalar> VGSpace::rho_constant(size_t i, const VGElement& f) const {
  std::vector<Scalar> vals = rho(i, f);
  for (size_t d = 1; d < vals.size(); ++d)
    if (!field_.eq(vals[d], vals[0])) return std::nullopt;
  return vals.empty() ? field_.zero() : vals[0];
}

bool VGSpace::in_fil1(const VGElement& f) const {
  for (size_t i = 0; i < n(); ++i)
    if (!rho_constant(i, f)) return false;
  return true;
}

std::vector<size_t> VGSpace::support(const VGElement& f) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < n(); ++i) {
    auto c = rho_constant(i, f);
    if (!c) throw DomainError("support() needs an element of Fil^1");
    if (!field_.is_zero(*c)) out.push_back(i);
  }
  return out;
}

namespace {

void sort_elements(const FieldSpec& field, std::vector<VGElement>& v) {
  std::sort(v.begin(), v.end(), [&](const VGElement& a, const VGElement& b) {
    return element_less(field, a.values, b.values);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<VGElement> VGSpace::gheav_bruteforce() const {
  if (n() > 12)
    throw DomainError("gHeav jump search supports n <= 12 (cost grows as 3^n)");
  const Scalar one = field_.one();
  const Scalar minus_one = field_.neg(one);
  std::vector<Scalar> symbols{field_.zero(), one};
  if (!field_.eq(minus_one, one)) symbols.push_back(minus_one);

  std::vector<VGElement> out;
  std::vector<size_t> digit(n(), 0);
  for (;;) {
    bool all_zero = true;
    for (size_t d : digit)
      if (d != 0) all_zero = false;
    if (!all_zero) {
      // candidate jump vector c; the element, if any, is sum c_i x_i^+ + t
      std::vector<Scalar> v(dim(), field_.zero());
      for (size_t i = 0; i < n(); ++i) {
        if (digit[i] == 0) continue;
        const Scalar& ci = symbols[digit[i]];
        for (size_t c = 0; c < dim(); ++c)
          if (chambers_.chamber(c)[i] > 0) v[c] = field_.add(v[c], ci);
      }
      // v must take exactly two values differing by 1
      std::vector<Scalar> distinct;
      for (const auto& x : v) {
        bool seen = false;
        for (const auto& y : distinct)
          if (field_.eq(x, y)) seen = true;
        if (!seen) {
          distinct.push_back(field_.normalize(x));
          if (distinct.size() > 2) break;
        }
      }
      if (distinct.size() == 2) {
        for (int which = 0; which < 2; ++which) {
          const Scalar& lo = distinct[which];
          const Scalar& hi = distinct[1 - which];
          if (!field_.eq(field_.sub(hi, lo), one)) continue;
          VGElement y{field_, v};
          for (auto& x : y.values) x = field_.sub(x, lo);
          out.push_back(std::move(y));
        }
      }
    }
    // odometer
    size_t pos = 0;
    while (pos < n() && ++digit[pos] == symbols.size()) digit[pos++] = 0;
    if (pos == n()) break;
  }
  sort_elements(field_, out);
  return out;
}

std::optional<VGSpace::AltPair> VGSpace::alt_function(
    const std::vector<size_t>& subset) const {
  const FieldSpec Q = FieldSpec::rationals();
  if (subset.size() < 1) throw UsageError("empty subset");
  for (size_t i : subset)
    if (i >= n()) throw UsageError("hyperplane index out of range");

  if (subset.size() == 1) {
    // s = 0: an ordinary Heaviside pair
    AltPair pair{heaviside(subset[0], 1), heaviside(subset[0], -1), {1}};
    return pair;
  }
  if (subset.size() % 2 == 0) return std::nullopt;

  std::vector<la::Vec> rows;
  for (size_t i : subset) rows.push_back(arr_.normal(i));
  la::Subspace span = la::rref(la::Matrix::from_rows(Q, rows)).basis;
  if (span.dim() != 2)
    throw DomainError("alternating function needs hyperplanes through a rank-2 flat");

  // 2D reduction: the sign of alpha_j on the transversal plane is the sign of
  // n_j . (x, y) with n_j the Gram pairing against the span basis.
  const size_t k = subset.size();
  std::vector<std::array<Scalar, 2>> n2(k);
  for (size_t t = 0; t < k; ++t) {
    for (int b = 0; b < 2; ++b) {
      Scalar acc(0);
      for (size_t c = 0; c < arr_.ell(); ++c)
        acc += arr_.normal(subset[t])[c] * span.basis[b][c];
      n2[t][b] = acc;
    }
    if (n2[t][0] == 0 && n2[t][1] == 0)
      throw InvariantError("degenerate 2D reduction in alt_function");
  }

  // boundary rays of the k lines, in cyclic order
  struct Ray {
    Scalar x, y;
    size_t line;
  };
  std::vector<Ray> rays;
  for (size_t t = 0; t < k; ++t) {
    rays.push_back({-n2[t][1], n2[t][0], t});
    rays.push_back({n2[t][1], -n2[t][0], t});
  }
  auto half = [](const Ray& r) {
    return (r.y > 0 || (r.y == 0 && r.x > 0)) ? 0 : 1;
  };
  std::sort(rays.begin(), rays.end(), [&](const Ray& a, const Ray& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    Scalar cross = a.x * b.y - a.y * b.x;
    if (cross != 0) return cross > 0;
    return a.line < b.line;  // parallel rays cannot happen for distinct lines
  });

  const size_t m = rays.size();  // = 2k sectors
  // sector t sits between rays t and t+1; midpoint direction is their sum
  std::vector<std::array<Scalar, 2>> mid(m);
  std::vector<std::vector<int>> sector_sign(m, std::vector<int>(k));
  for (size_t t = 0; t < m; ++t) {
    const Ray& r1 = rays[t];
    const Ray& r2 = rays[(t + 1) % m];
    mid[t] = {r1.x + r2.x, r1.y + r2.y};
    for (size_t j = 0; j < k; ++j) {
      Scalar s = n2[j][0] * mid[t][0] + n2[j][1] * mid[t][1];
      if (s == 0) throw InvariantError("sector midpoint on a line");
      sector_sign[t][j] = s > 0 ? 1 : -1;
    }
  }

  // alternate values around the flat: sector t (after ray t+1) gets t mod 2
  std::vector<int> sector_val(m);
  for (size_t t = 0; t < m; ++t) sector_val[t] = (t % 2 == 0) ? 1 : 0;

  // jump orientation per line from both of its crossings; they must agree
  std::vector<int> jump(k, 0);
  for (size_t t = 0; t < m; ++t) {
    size_t j = rays[(t + 1) % m].line;  // ray between sector t and t+1
    size_t t2 = (t + 1) % m;
    if (sector_sign[t][j] == sector_sign[t2][j])
      throw InvariantError("crossing does not flip its line sign");
    int c = sector_sign[t][j] > 0 ? sector_val[t] - sector_val[t2]
                                  : sector_val[t2] - sector_val[t];
    if (jump[j] == 0)
      jump[j] = c;
    else if (jump[j] != c)
      return std::nullopt;  // inconsistent local pattern
  }

  // global candidate: sum of jump_j * x_j^+ shifted into {0,1}
  std::vector<Scalar> v(dim(), field_.zero());
  for (size_t j = 0; j < k; ++j) {
    Scalar cj = field_.from_long(jump[j]);
    for (size_t c = 0; c < dim(); ++c)
      if (chambers_.chamber(c)[subset[j]] > 0) v[c] = field_.add(v[c], cj);
  }
  std::vector<Scalar> distinct;
  for (const auto& x : v) {
    bool seen = false;
    for (const auto& y : distinct)
      if (field_.eq(x, y)) seen = true;
    if (!seen) distinct.push_back(field_.normalize(x));
    if (distinct.size() > 2) return std::nullopt;
  }
  if (distinct.size() != 2) return std::nullopt;
  Scalar lo = distinct[0], hi = distinct[1];
  if (field_.eq(field_.sub(lo, hi), field_.one())) std::swap(lo, hi);
  if (!field_.eq(field_.sub(hi, lo), field_.one())) return std::nullopt;
  VGElement y{field_, v};
  for (auto& x : y.values) x = field_.sub(x, lo);
  if (!is_idempotent(y) || !in_fil1(y))
    throw InvariantError("alternating candidate failed verification");

  // orient the pair: `plus` takes value 1 on the first sector of the walk
  size_t probe = SIZE_MAX;
  for (size_t c = 0; c < dim() && probe == SIZE_MAX; ++c) {
    bool match = true;
    for (size_t j = 0; j < k; ++j)
      if (chambers_.chamber(c)[subset[j]] != sector_sign[0][j]) match = false;
    if (match) probe = c;
  }
  if (probe == SIZE_MAX) throw InvariantError("no chamber matches the base sector");
  VGElement plus = y, minus = complement(y);
  if (field_.is_zero(y.values[probe])) std::swap(plus, minus);
  std::vector<int> jumps(jump.begin(), jump.end());
  return AltPair{std::move(plus), std::move(minus), std::move(jumps)};
}

std::vector<VGElement> VGSpace::gheav_structural() const {
  if (field_.is_char2())
    throw DomainError(
        "the alternating-function classification assumes characteristic != 2; "
        "use the brute-force enumeration");
  std::vector<VGElement> out;
  for (size_t i = 0; i < n(); ++i) {
    out.push_back(heaviside(i, 1));
    out.push_back(heaviside(i, -1));
  }
  for (const auto& flat : codim2_flats(arr_)) {
    const size_t m = flat.size();
    if (m < 3) continue;
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
      size_t bits = static_cast<size_t>(__builtin_popcount(mask));
      if (bits < 3 || bits % 2 == 0) continue;
      std::vector<size_t> subset;
      for (size_t t = 0; t < m; ++t)
        if (mask & (1u << t)) subset.push_back(flat[t]);
      auto pair = alt_function(subset);
      if (pair) {
        out.push_back(pair->plus);
        out.push_back(pair->minus);
      }
    }
  }
  sort_elements(field_, out);
  return out;
}

std::string VGSpace::element_json(const VGElement& f) const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["arrangement_hash"] = arr_.hash();
  j["chamber_order"] = "lex-v1";
  j["field"] = field_.name();
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& x : f.values) vals.push_back(rational_str(field_.normalize(x)));
  j["values"] = vals;
  return j.dump(2) + "\n";
}

VGElement VGSpace::element_from_json(const std::string& text) const {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed element JSON: ") + e.what());
  }
  if (j.value("arrangement_hash", std::string()) != arr_.hash())
    throw UsageError("element was saved for a different arrangement");
  if (j.value("chamber_order", std::string()) != "lex-v1")
    throw UsageError("unsupported chamber order tag");
  VGElement f{field_, {}};
  for (const auto& s : j.at("values"))
    f.values.push_back(field_.normalize(parse_rational(s.get<std::string>())));
  if (f.values.size() != dim()) throw UsageError("value count != chamber count");
  return f;
}

// ---------------------------------------------------------------------------
// FilChain
// ---------------------------------------------------------------------------

FilChain::FilChain(const VGSpace& space) : space_(&space) {
  const FieldSpec& F = space.field();
  const size_t n = space.n();
  const size_t ell = space.arrangement().ell();
  const size_t nc = space.dim();

  // incremental echelon of monomial rows in size-lex order
  std::vector<la::Vec> ech;          // echelon rows (unit pivots, increasing)
  std::vector<size_t> pivots;
  auto try_insert = [&](const la::Vec& row) -> bool {
    la::Vec r = row;
    for (size_t i = 0; i < ech.size(); ++i) {
      const Scalar& c = r[pivots[i]];
      if (F.is_zero(c)) continue;
      Scalar f = c;
      for (size_t j = 0; j < nc; ++j) r[j] = F.sub(r[j], F.mul(f, ech[i][j]));
    }
    size_t p = SIZE_MAX;
    for (size_t j = 0; j < nc; ++j)
      if (!F.is_zero(r[j])) {
        p = j;
        break;
      }
    if (p == SIZE_MAX) return false;
    Scalar inv = F.inv(r[p]);
    for (size_t j = 0; j < nc; ++j) r[j] = F.mul(r[j], inv);
    // keep pivot columns sorted
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < p) ++pos;
    ech.insert(ech.begin() + static_cast<long>(pos), std::move(r));
    pivots.insert(pivots.begin() + static_cast<long>(pos), p);
    return true;
  };

  comp_subsets_.assign(ell + 1, {});
  comp_values_.assign(ell + 1, {});
  for (size_t k = 0; k <= ell; ++k) {
    // all subsets of size k in lex order
    std::vector<std::vector<size_t>> subsets;
    if (k == 0) {
      subsets.push_back({});
    } else if (k <= n) {
      std::vector<size_t> idx(k);
      for (size_t i = 0; i < k; ++i) idx[i] = i;
      for (;;) {
        subsets.push_back(idx);
        size_t i = k;
        bool done = true;
        while (i-- > 0) {
          if (idx[i] != i + n - k) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            done = false;
            break;
          }
        }
        if (done) break;
      }
    }
    for (const auto& s : subsets) {
      VGElement mono = monomial(s);
      if (try_insert(mono.values)) {
        comp_subsets_[k].push_back(s);
        comp_values_[k].push_back(mono.values);
      }
    }
    dims_.push_back(ech.size());
    fil_.push_back(la::rref(la::Matrix::from_rows(F, ech)).basis);
  }
  if (dims_.back() != nc)
    throw InvariantError("Fil^ell does not exhaust the chamber functions");
  for (size_t k = 0; k <= ell; ++k) {
    std::vector<la::Vec> rows;
    if (k > 0) rows = fil_[k - 1].basis;
    for (const auto& v : comp_values_[k]) rows.push_back(v);
    solvers_.emplace_back(F, rows);
  }
}

VGElement FilChain::monomial(const std::vector<size_t>& subset) const {
  VGElement f = space_->constant(space_->field().one());
  for (size_t i : subset) f = space_->mul(f, space_->heaviside(i, 1));
  return f;
}

size_t FilChain::graded_dim(size_t k) const {
  if (k >= comp_subsets_.size()) return 0;
  return comp_subsets_[k].size();
}

const std::vector<std::vector<size_t>>& FilChain::comp_subsets(size_t k) const {
  return comp_subsets_.at(k);
}

bool FilChain::in_fil(size_t k, const VGElement& f) const {
  if (k >= fil_.size()) k = fil_.size() - 1;
  return la::contains(fil_[k], f.values);
}

GradedClass FilChain::zero_class(size_t k) const {
  return GradedClass{k, std::vector<Scalar>(graded_dim(k), space_->field().zero())};
}

bool FilChain::is_zero(const GradedClass& u) const {
  for (const auto& x : u.coords)
    if (!space_->field().is_zero(x)) return false;
  return true;
}

GradedClass FilChain::graded_class(const VGElement& f, size_t k) const {
  if (k >= dims_.size())
    throw UsageError("filtration level out of range");
  // basis of Fil^k: echelon rows of Fil^{k-1} followed by the level-k
  // complement monomials; coordinates on the tail are the class.
  size_t head = k > 0 ? fil_[k - 1].basis.size() : 0;
  auto coeffs = solvers_[k].solve(f.values);
  if (!coeffs) throw DomainError("element is not in Fil^" + std::to_string(k));
  GradedClass u{k, {}};
  u.coords.assign(coeffs->begin() + static_cast<long>(head), coeffs->end());
  return u;
}

VGElement FilChain::lift(const GradedClass& u) const {
  const FieldSpec& F = space_->field();
  VGElement f = space_->constant(F.zero());
  if (u.degree >= comp_values_.size()) return f;
  if (u.coords.size() != comp_values_[u.degree].size())
    throw UsageError("graded coordinate length mismatch");
  for (size_t i = 0; i < u.coords.size(); ++i)
    for (size_t c = 0; c < f.values.size(); ++c)
      f.values[c] = F.add(f.values[c], F.mul(u.coords[i], comp_values_[u.degree][i][c]));
  return f;
}

GradedClass FilChain::graded_mult(const GradedClass& u, const GradedClass& v) const {
  size_t deg = u.degree + v.degree;
  VGElement prod = space_->mul(lift(u), lift(v));
  if (deg >= dims_.size()) {
    // grVG vanishes above the ambient dimension
    return GradedClass{deg, {}};
  }
  try {
    return graded_class(prod, deg);
  } catch (const DomainError&) {
    throw InvariantError("graded product escaped its filtration level");
  }
}

std::string FilChain::class_json(const GradedClass& u) const {
  const FieldSpec& F = space_->field();
  nlohmann::json j;
  j["schema_version"] = 1;
  j["arrangement_hash"] = space_->arrangement().hash();
  j["chamber_order"] = "lex-v1";
  j["field"] = F.name();
  j["degree"] = u.degree;
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& x : u.coords) coords.push_back(rational_str(F.normalize(x)));
  j["coords"] = coords;
  return j.dump(2) + "\n";
}

GradedClass FilChain::class_from_json(const std::string& text) const {
  const FieldSpec& F = space_->field();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed graded-class JSON: ") + e.what());
  }
  if (j.value("arrangement_hash", std::string()) != space_->arrangement().hash())
    throw UsageError("graded class was saved for a different arrangement");
  if (j.value("chamber_order", std::string()) != "lex-v1")
    throw UsageError("unsupported chamber order tag");
  GradedClass u{j.at("degree").get<size_t>(), {}};
  for (const auto& s : j.at("coords"))
    u.coords.push_back(F.normalize(parse_rational(s.get<std::string>())));
  if (u.coords.size() != graded_dim(u.degree))
    throw UsageError("coordinate count does not match the graded dimension");
  return u;
}

// ---------------------------------------------------------------------------
// Square-zero lines and presentations
// ---------------------------------------------------------------------------

std::vector<la::Vec> sqzero(const VGSpace& space, const FilChain& fc) {
  const FieldSpec& F = space.field();
  std::vector<VGElement> gh =
      F.is_char2() ? space.gheav_bruteforce() : space.gheav_structural();
  std::vector<la::Vec> lines;
  for (const auto& y : gh) {
    GradedClass u = fc.graded_class(y, 1);
    // normalize: first nonzero coordinate 1
    size_t fz = SIZE_MAX;
    for (size_t i = 0; i < u.coords.size(); ++i)
      if (!F.is_zero(u.coords[i])) {
        fz = i;
        break;
      }
    if (fz == SIZE_MAX)
      throw InvariantError("generalized Heaviside with zero graded class");
    Scalar inv = F.inv(u.coords[fz]);
    la::Vec norm(u.coords.size());
    for (size_t i = 0; i < u.coords.size(); ++i) norm[i] = F.mul(inv, u.coords[i]);
    bool seen = false;
    for (const auto& l : lines) {
      bool eq = true;
      for (size_t i = 0; i < l.size(); ++i)
        if (!F.eq(l[i], norm[i])) eq = false;
      if (eq) seen = true;
    }
    if (seen) continue;
    GradedClass cls{1, norm};
    if (!fc.is_zero(fc.graded_mult(cls, cls)))
      throw InvariantError("candidate square-zero line has nonzero square");
    lines.push_back(std::move(norm));
  }
  std::sort(lines.begin(), lines.end(), [&](const la::Vec& a, const la::Vec& b) {
    return element_less(F, a, b);
  });
  return lines;
}

PresentationReport verify_presentations(const VGSpace& space, const FilChain& fc) {
  const FieldSpec& F = space.field();
  PresentationReport rep;
  SignedCircuitSet circ = signed_circuits(space.arrangement());
  for (const auto& sv : circ.circuits) {
    // process one representative per +- pair
    int8_t first = 0;
    for (int8_t x : sv)
      if (x != 0) {
        first = x;
        break;
      }
    if (first < 0) continue;
    ++rep.circuits_checked;
    std::vector<size_t> sup;
    for (size_t i = 0; i < sv.size(); ++i)
      if (sv[i] != 0) sup.push_back(i);
    const size_t k = sup.size();
    std::string tag = "circuit " + sign_vector_str(sv);

    // filtered relation: prod_{+} x_i prod_{-} (x_i - 1) - (swapped) = 0
    VGElement a = space.constant(F.one());
    VGElement b = space.constant(F.one());
    for (size_t i : sup) {
      VGElement xi = space.heaviside(i, 1);
      VGElement xim1 = space.sub(xi, space.constant(F.one()));
      if (sv[i] > 0) {
        a = space.mul(a, xi);
        b = space.mul(b, xim1);
      } else {
        a = space.mul(a, xim1);
        b = space.mul(b, xi);
      }
    }
    VGElement diff = space.sub(a, b);
    if (!(diff == space.constant(F.zero()))) {
      rep.ok = false;
      rep.failures.push_back(tag + ": filtered relation does not vanish");
    }

    // graded relation: sum_p sgn(lambda_p) class(x_{S minus i_p}) = 0
    std::vector<GradedClass> deleted;
    for (size_t p = 0; p < k; ++p) {
      std::vector<size_t> s;
      for (size_t q = 0; q < k; ++q)
        if (q != p) s.push_back(sup[q]);
      deleted.push_back(fc.graded_class(fc.monomial(s), k - 1));
    }
    GradedClass rel = fc.zero_class(k - 1);
    for (size_t p = 0; p < k; ++p) {
      Scalar sgn = F.from_long(sv[sup[p]]);
      for (size_t c = 0; c < rel.coords.size(); ++c)
        rel.coords[c] = F.add(rel.coords[c], F.mul(sgn, deleted[p].coords[c]));
    }
    if (!fc.is_zero(rel)) {
      rep.ok = false;
      rep.failures.push_back(tag + ": graded relation does not vanish");
    }

    // uniqueness up to scalar: the deleted monomial classes span k-1 dims
    std::vector<la::Vec> rows;
    for (const auto& d : deleted) rows.push_back(d.coords);
    if (!rows.empty() && !rows[0].empty()) {
      size_t rank = la::rref(la::Matrix::from_rows(F, rows)).rank;
      if (rank != k - 1) {
        rep.ok = false;
        rep.failures.push_back(tag + ": deleted monomials have rank " +
                               std::to_string(rank) + ", expected " +
                               std::to_string(k - 1));
      }
    }

    // characteristic 2: the graded relation must agree with the
    // exterior-boundary relation coefficientwise
    if (F.is_char2()) {
      for (size_t p = 0; p < k; ++p) {
        Scalar lhs = F.from_long(sv[sup[p]]);
        Scalar rhs = F.from_long(p % 2 == 0 ? 1 : -1);
        if (!F.eq(lhs, rhs)) {
          rep.ok = false;
          rep.failures.push_back(tag + ": char-2 coefficient mismatch");
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace vg
