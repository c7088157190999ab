#include "vg/arrangement.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace vg {

std::string sign_vector_str(const SignVector& sv) {
  std::string s;
  s.reserve(sv.size());
  for (int8_t x : sv) s.push_back(x > 0 ? '+' : (x < 0 ? '-' : '0'));
  return s;
}

bool sign_vector_less(const SignVector& a, const SignVector& b) {
  // + < 0 < - ; chambers never contain zeros so this is plain lex with +<-.
  auto key = [](int8_t x) { return x > 0 ? 0 : (x == 0 ? 1 : 2); };
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (key(a[i]) != key(b[i])) return key(a[i]) < key(b[i]);
  }
  return a.size() < b.size();
}

namespace {

bool parallel(const la::Vec& a, const la::Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

bool is_zero_vec(const la::Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

Arrangement::Arrangement(size_t ell, std::vector<la::Vec> normals,
                         std::vector<std::string> labels)
    : ell_(ell), normals_(std::move(normals)), labels_(std::move(labels)) {
  if (ell_ > 5) throw UsageError("ambient dimension above the supported limit (ell <= 5)");
  if (normals_.size() > 16) throw UsageError("too many hyperplanes (n <= 16)");
  for (size_t i = 0; i < normals_.size(); ++i) {
    if (normals_[i].size() != ell_) throw UsageError("normal has wrong dimension");
    for (auto& x : normals_[i]) x.canonicalize();
    if (is_zero_vec(normals_[i])) throw UsageError("zero normal vector");
  }
  for (size_t i = 0; i < normals_.size(); ++i)
    for (size_t j = i + 1; j < normals_.size(); ++j)
      if (parallel(normals_[i], normals_[j]))
        throw UsageError("normals " + std::to_string(i + 1) + " and " +
                         std::to_string(j + 1) + " define the same hyperplane");
  if (labels_.empty()) {
    for (size_t i = 0; i < normals_.size(); ++i)
      labels_.push_back("H" + std::to_string(i + 1));
  }
  if (labels_.size() != normals_.size())
    throw UsageError("label count does not match normal count");
}

size_t Arrangement::rank() const {
  if (normals_.empty()) return 0;
  return la::rref(la::Matrix::from_rows(FieldSpec::rationals(), normals_)).rank;
}

Arrangement Arrangement::deletion(size_t i) const {
  std::vector<la::Vec> ns;
  std::vector<std::string> ls;
  for (size_t j = 0; j < n(); ++j)
    if (j != i) {
      ns.push_back(normals_[j]);
      ls.push_back(labels_[j]);
    }
  return Arrangement(ell_, std::move(ns), std::move(ls));
}

std::string Arrangement::hash() const {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  feed(std::to_string(ell_));
  for (const auto& nv : normals_) {
    for (const auto& x : nv) {
      feed(rational_str(x));
      feed(",");
    }
    feed(";");
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

Arrangement Arrangement::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed arrangement JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ell") || !j.contains("normals"))
    throw UsageError("arrangement JSON needs {\"ell\", \"normals\"}");
  size_t ell = j.at("ell").get<size_t>();
  std::vector<la::Vec> normals;
  for (const auto& row : j.at("normals")) {
    la::Vec v;
    for (const auto& entry : row) {
      if (entry.is_string())
        v.push_back(parse_rational(entry.get<std::string>()));
      else if (entry.is_number_integer())
        v.push_back(Scalar(entry.get<long>()));
      else
        throw UsageError("normal entries must be integers or rational strings");
    }
    normals.push_back(std::move(v));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Arrangement(ell, std::move(normals), std::move(labels));
}

std::string Arrangement::to_json_text() const {
  nlohmann::json j;
  j["ell"] = ell_;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& nv : normals_) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : nv) row.push_back(rational_str(x));
    rows.push_back(row);
  }
  j["normals"] = rows;
  j["labels"] = labels_;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Strict feasibility via Fourier-Motzkin
// ---------------------------------------------------------------------------

namespace {

// Rows encode homogeneous strict inequalities a . v > 0.
// Normalizes by the absolute value of the first nonzero entry so duplicates
// and positive multiples collapse.
la::Vec fm_normalize(const la::Vec& r) {
  la::Vec v = r;
  for (const auto& x : v)
    if (x != 0) {
      Scalar d = abs(x);
      for (auto& y : v) y /= d;
      break;
    }
  return v;
}

struct FmStage {
  std::vector<la::Vec> rows;  // rows involving variables 0..var
};

// Eliminates variables from the last down to the first; returns all stages
// for witness back-substitution, or nullopt when infeasible.
std::optional<std::vector<FmStage>> fm_eliminate(std::vector<la::Vec> rows,
                                                 size_t nvars) {
  for (auto& r : rows) {
    if (is_zero_vec(r)) return std::nullopt;
    r = fm_normalize(r);
  }
  std::vector<FmStage> stages(nvars);
  for (size_t var = nvars; var-- > 0;) {
    std::set<la::Vec> dedup(rows.begin(), rows.end());
    rows.assign(dedup.begin(), dedup.end());
    stages[var].rows = rows;
    std::vector<la::Vec> lower, upper, next;
    for (const auto& r : rows) {
      if (r[var] > 0) lower.push_back(r);
      else if (r[var] < 0) upper.push_back(r);
      else next.push_back(r);
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        la::Vec comb(nvars, Scalar(0));
        // cancel var: (-up[var]) * lo + lo[var] * up, both multipliers > 0
        for (size_t j = 0; j < var; ++j) comb[j] = -up[var] * lo[j] + lo[var] * up[j];
        if (is_zero_vec(comb)) return std::nullopt;  // derived 0 > 0
        next.push_back(fm_normalize(comb));
      }
    rows = std::move(next);
  }
  // Anything left now has no variables at all; such rows can only arise as
  // all-zero combinations, which were rejected above.
  return stages;
}

std::optional<la::Vec> fm_feasible_point(const std::vector<la::Vec>& ineqs,
                                         size_t nvars) {
  if (nvars == 0) return ineqs.empty() ? std::make_optional(la::Vec{}) : std::nullopt;
  auto stages = fm_eliminate(ineqs, nvars);
  if (!stages) return std::nullopt;
  la::Vec v(nvars, Scalar(0));
  for (size_t var = 0; var < nvars; ++var) {
    bool has_lo = false, has_hi = false;
    Scalar lo, hi;
    for (const auto& r : (*stages)[var].rows) {
      if (r[var] == 0) continue;
      Scalar rest(0);
      for (size_t j = 0; j < var; ++j) rest += r[j] * v[j];
      Scalar bound = -rest / r[var];
      if (r[var] > 0) {
        if (!has_lo || bound > lo) lo = bound, has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound, has_hi = true;
      }
    }
    if (has_lo && has_hi) {
      if (!(lo < hi)) throw InvariantError("empty interval in feasible back-substitution");
      v[var] = (lo + hi) / 2;
    } else if (has_lo) {
      v[var] = lo + 1;
    } else if (has_hi) {
      v[var] = hi - 1;
    } else {
      v[var] = 0;
    }
  }
  return v;
}

}  // namespace

std::optional<la::Vec> feasible(const Arrangement& a, const SignVector& sv) {
  if (sv.size() != a.n()) throw UsageError("sign vector length mismatch");
  std::vector<la::Vec> rows;
  for (size_t i = 0; i < sv.size(); ++i) {
    if (sv[i] == 0) throw UsageError("feasible() expects a full sign vector");
    la::Vec r = a.normal(i);
    if (sv[i] < 0)
      for (auto& x : r) x = -x;
    rows.push_back(std::move(r));
  }
  return fm_feasible_point(rows, a.ell());
}

ChamberSet ChamberSet::enumerate(const Arrangement& a) {
  struct Partial {
    SignVector sv;
    la::Vec witness;
  };
  std::vector<Partial> current{{SignVector{}, la::Vec(a.ell(), Scalar(0))}};
  for (size_t k = 0; k < a.n(); ++k) {
    std::vector<Partial> next;
    for (auto& part : current) {
      Scalar val(0);
      for (size_t j = 0; j < a.ell(); ++j) val += a.normal(k)[j] * part.witness[j];
      int8_t wit_side = val > 0 ? 1 : (val < 0 ? -1 : 0);
      for (int8_t side : {int8_t(1), int8_t(-1)}) {
        SignVector sv = part.sv;
        sv.push_back(side);
        if (side == wit_side) {
          next.push_back({std::move(sv), part.witness});
          continue;
        }
        // assemble the strict system for the refined sign vector
        std::vector<la::Vec> rows;
        for (size_t i = 0; i <= k; ++i) {
          la::Vec r = a.normal(i);
          if (sv[i] < 0)
            for (auto& x : r) x = -x;
          rows.push_back(std::move(r));
        }
        auto w = fm_feasible_point(rows, a.ell());
        if (w) next.push_back({std::move(sv), std::move(*w)});
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(),
            [](const Partial& x, const Partial& y) {
              return sign_vector_less(x.sv, y.sv);
            });
  ChamberSet cs;
  for (auto& p : current) {
    cs.index_[p.sv] = cs.chambers_.size();
    cs.chambers_.push_back(std::move(p.sv));
    cs.witnesses_.push_back(std::move(p.witness));
  }
  return cs;
}

size_t ChamberSet::index_of(const SignVector& sv) const {
  auto it = index_.find(sv);
  if (it == index_.end())
    throw DomainError("sign vector " + sign_vector_str(sv) + " is not a chamber");
  return it->second;
}

std::optional<size_t> ChamberSet::find(const SignVector& sv) const {
  auto it = index_.find(sv);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t ChamberSet::opposite(size_t idx) const {
  SignVector sv = chambers_[idx];
  for (auto& x : sv) x = static_cast<int8_t>(-x);
  return index_of(sv);
}

std::vector<size_t> sep(const ChamberSet& cs, size_t c1, size_t c2) {
  std::vector<size_t> out;
  const SignVector& a = cs.chamber(c1);
  const SignVector& b = cs.chamber(c2);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) out.push_back(i);
  return out;
}

size_t sep_size(const ChamberSet& cs, size_t c1, size_t c2) {
  size_t m = 0;
  const SignVector& a = cs.chamber(c1);
  const SignVector& b = cs.chamber(c2);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++m;
  return m;
}

Graph tope_graph(const ChamberSet& cs) {
  Graph g(cs.size());
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (sep_size(cs, i, j) == 1) g.add_edge(i, j);
  return g;
}

Restriction restriction(const Arrangement& a, const ChamberSet& cs, size_t i) {
  if (i >= a.n()) throw UsageError("hyperplane index out of range");
  const FieldSpec Q = FieldSpec::rationals();
  la::Subspace ker = la::kernel(la::Matrix::from_rows(Q, {a.normal(i)}));
  if (ker.dim() != a.ell() - 1) throw InvariantError("hyperplane kernel has wrong dimension");

  // induced normals in kernel coordinates
  std::vector<la::Vec> induced;  // per original j (skipping i)
  std::vector<size_t> originals;
  for (size_t j = 0; j < a.n(); ++j) {
    if (j == i) continue;
    la::Vec b(ker.dim(), Scalar(0));
    for (size_t r = 0; r < ker.dim(); ++r)
      for (size_t t = 0; t < a.ell(); ++t) b[r] += a.normal(j)[t] * ker.basis[r][t];
    if (is_zero_vec(b)) throw InvariantError("induced normal vanished");
    induced.push_back(std::move(b));
    originals.push_back(j);
  }

  // merge parallels, tracking orientation against the representative
  std::vector<la::Vec> reps;
  std::vector<std::pair<size_t, int>> back(a.n(), {SIZE_MAX, 0});
  for (size_t t = 0; t < induced.size(); ++t) {
    size_t found = SIZE_MAX;
    int orient = 0;
    for (size_t r = 0; r < reps.size(); ++r) {
      if (!parallel(induced[t], reps[r])) continue;
      for (size_t c = 0; c < reps[r].size(); ++c)
        if (reps[r][c] != 0) {
          orient = (induced[t][c] / reps[r][c]) > 0 ? 1 : -1;
          break;
        }
      found = r;
      break;
    }
    if (found == SIZE_MAX) {
      found = reps.size();
      orient = 1;
      reps.push_back(induced[t]);
    }
    back[originals[t]] = {found, orient};
  }

  std::vector<std::string> labels;
  for (size_t r = 0; r < reps.size(); ++r) {
    std::string lbl;
    for (size_t j = 0; j < a.n(); ++j)
      if (back[j].first == r) lbl += (lbl.empty() ? "" : "&") + a.label(j);
    labels.push_back(lbl);
  }
  Arrangement sub(a.ell() - 1, reps, labels);
  ChamberSet sub_cs = ChamberSet::enumerate(sub);

  Restriction res(i, sub, sub_cs);
  res.back_map = std::move(back);
  for (size_t d = 0; d < sub_cs.size(); ++d) {
    const la::Vec& w = sub_cs.witness(d);
    la::Vec v(a.ell(), Scalar(0));
    for (size_t r = 0; r < ker.dim(); ++r)
      for (size_t t = 0; t < a.ell(); ++t) v[t] += w[r] * ker.basis[r][t];
    SignVector plus(a.n(), 0), minus(a.n(), 0);
    for (size_t j = 0; j < a.n(); ++j) {
      if (j == i) continue;
      Scalar val(0);
      for (size_t t = 0; t < a.ell(); ++t) val += a.normal(j)[t] * v[t];
      if (val == 0) throw InvariantError("restricted witness lies on a hyperplane");
      plus[j] = minus[j] = (val > 0 ? 1 : -1);
    }
    plus[i] = 1;
    minus[i] = -1;
    res.lifts.emplace_back(cs.index_of(plus), cs.index_of(minus));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Intersection lattice
// ---------------------------------------------------------------------------

namespace {

uint32_t closure_mask(const Arrangement& a, uint32_t mask, size_t* rank_out) {
  std::vector<la::Vec> rows;
  for (size_t j = 0; j < a.n(); ++j)
    if (mask & (1u << j)) rows.push_back(a.normal(j));
  if (rows.empty()) {
    *rank_out = 0;
    return 0;
  }
  la::Subspace span = la::rref(la::Matrix::from_rows(FieldSpec::rationals(), rows)).basis;
  *rank_out = span.dim();
  uint32_t cl = 0;
  for (size_t j = 0; j < a.n(); ++j)
    if (la::contains(span, a.normal(j))) cl |= (1u << j);
  return cl;
}

}  // namespace

Lattice lattice(const Arrangement& a) {
  std::map<uint32_t, size_t> rank_of;  // flat mask -> rank
  rank_of[0] = 0;
  std::vector<uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<uint32_t> next;
    for (uint32_t m : frontier) {
      for (size_t j = 0; j < a.n(); ++j) {
        if (m & (1u << j)) continue;
        size_t rk = 0;
        uint32_t cl = closure_mask(a, m | (1u << j), &rk);
        if (!rank_of.count(cl)) {
          rank_of[cl] = rk;
          next.push_back(cl);
        }
      }
    }
    frontier = std::move(next);
  }

  Lattice lat;
  lat.arrangement_rank = a.rank();
  for (const auto& [mask, rk] : rank_of) lat.flats.push_back({mask, rk, 0});
  std::sort(lat.flats.begin(), lat.flats.end(), [](const Flat& x, const Flat& y) {
    return std::tie(x.rank, x.mask) < std::tie(y.rank, y.mask);
  });
  // Moebius recursion over the containment order (mask inclusion).
  for (size_t i = 0; i < lat.flats.size(); ++i) {
    if (lat.flats[i].rank == 0) {
      lat.flats[i].moebius = 1;
      continue;
    }
    mpz_class acc = 0;
    for (size_t j = 0; j < i; ++j) {
      const Flat& g = lat.flats[j];
      if ((g.mask & lat.flats[i].mask) == g.mask && g.mask != lat.flats[i].mask)
        acc += g.moebius;
    }
    lat.flats[i].moebius = -acc;
  }
  return lat;
}

std::vector<mpz_class> char_poly(const Lattice& lat, size_t ell) {
  std::vector<mpz_class> coeff(ell + 1, 0);
  for (const Flat& f : lat.flats) coeff[ell - f.rank] += f.moebius;
  return coeff;
}

std::vector<mpz_class> char_poly(const Arrangement& a) {
  return char_poly(lattice(a), a.ell());
}

std::vector<mpz_class> betti(const Arrangement& a) {
  std::vector<mpz_class> chi = char_poly(a);
  std::vector<mpz_class> b(a.ell() + 1, 0);
  for (size_t k = 0; k <= a.ell(); ++k) {
    mpz_class v = chi[a.ell() - k];
    if (k % 2 == 1) v = -v;
    if (v < 0) throw InvariantError("negative Betti number");
    b[k] = v;
  }
  return b;
}

mpz_class zaslavsky_count(const Arrangement& a) {
  std::vector<mpz_class> chi = char_poly(a);
  mpz_class acc = 0, pw = 1;
  mpz_class minus1 = -1;
  for (size_t d = 0; d <= a.ell(); ++d) {
    acc += chi[d] * pw;
    pw *= minus1;
  }
  // chi(-1) computed with pw = (-1)^d; multiply by (-1)^ell
  if (a.ell() % 2 == 1) acc = -acc;
  return acc;
}

std::vector<std::vector<size_t>> codim2_flats(const Arrangement& a) {
  Lattice lat = lattice(a);
  std::vector<std::vector<size_t>> out;
  for (const Flat& f : lat.flats) {
    if (f.rank != 2) continue;
    std::vector<size_t> idx;
    for (size_t j = 0; j < a.n(); ++j)
      if (f.mask & (1u << j)) idx.push_back(j);
    out.push_back(std::move(idx));
  }
  return out;
}

bool is_generic_codim2(const Arrangement& a) {
  for (const auto& flat : codim2_flats(a))
    if (flat.size() != 2) return false;
  return true;
}

Arrangement random_arrangement(uint64_t seed, size_t n, size_t ell,
                               bool force_generic) {
  std::mt19937_64 rng(seed);
  auto draw_int = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<la::Vec> normals;
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      la::Vec v(ell);
      bool zero = true;
      for (size_t j = 0; j < ell; ++j) {
        v[j] = Scalar(draw_int(-4, 4));
        if (v[j] != 0) zero = false;
      }
      if (zero) {
        ok = false;
        break;
      }
      for (const auto& w : normals)
        if (parallel(v, w)) {
          ok = false;
          break;
        }
      if (ok) normals.push_back(std::move(v));
    }
    if (!ok) continue;
    // For non-generic sampling, fold in one dependent normal half the time so
    // that multiple rank-2 flats actually occur.
    if (!force_generic && n >= 3 && (rng() & 1)) {
      size_t i1 = rng() % n, i2 = rng() % n;
      size_t tgt = rng() % n;
      if (i1 != i2 && tgt != i1 && tgt != i2) {
        la::Vec v(ell);
        Scalar c1(draw_int(1, 3)), c2(draw_int(1, 3));
        if (rng() & 1) c2 = -c2;
        bool zero = true;
        for (size_t j = 0; j < ell; ++j) {
          v[j] = c1 * normals[i1][j] + c2 * normals[i2][j];
          if (v[j] != 0) zero = false;
        }
        bool clash = zero;
        for (size_t j = 0; j < n && !clash; ++j)
          if (j != tgt && parallel(v, normals[j])) clash = true;
        if (!clash) normals[tgt] = v;
      }
    }
    try {
      Arrangement a(ell, normals);
      if (a.rank() != std::min(n, ell)) continue;
      if (force_generic && !is_generic_codim2(a)) continue;
      return a;
    } catch (const UsageError&) {
      continue;
    }
  }
  throw InvariantError("random arrangement sampling failed to converge");
}

}  // namespace vg
