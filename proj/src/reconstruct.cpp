#include "vg/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "json.hpp"

namespace vg {

Graph recover_tope_graph_from_heav(const VGSpace& space) {
  const FieldSpec& F = space.field();
  std::vector<VGElement> gh = space.gheav_bruteforce();
  if (gh.size() != 2 * space.n())
    throw DomainError("gHeav has " + std::to_string(gh.size()) + " != 2n = " +
                      std::to_string(2 * space.n()) +
                      " elements: not codim-2 generic; use the conjecture harness");
  // sanity: the 2n functions pair off via h + h' = 1
  for (const auto& h : gh) {
    VGElement c = space.complement(h);
    bool found = false;
    for (const auto& g : gh)
      if (g == c) found = true;
    if (!found) throw InvariantError("gHeav is not closed under complement");
  }
  Graph g(space.dim());
  for (size_t c1 = 0; c1 < space.dim(); ++c1)
    for (size_t c2 = c1 + 1; c2 < space.dim(); ++c2) {
      size_t differ = 0;
      for (const auto& h : gh)
        if (!F.eq(h.values[c1], h.values[c2])) ++differ;
      if (differ == 2) g.add_edge(c1, c2);
    }
  return g;
}

Graph generalized_tope_graph(const VGSpace& space,
                             const std::vector<VGElement>& choice) {
  const FieldSpec& F = space.field();
  for (const auto& y : choice) {
    if (!space.is_idempotent(y))
      throw DomainError("generalized tope graph expects 0/1-valued functions");
    if (!space.in_fil1(y))
      throw DomainError("generalized tope graph expects elements of Fil^1");
  }
  Graph g(space.dim());
  for (size_t c1 = 0; c1 < space.dim(); ++c1)
    for (size_t c2 = c1 + 1; c2 < space.dim(); ++c2) {
      size_t differ = 0;
      for (const auto& y : choice)
        if (!F.eq(y.values[c1], y.values[c2])) ++differ;
      if (differ == 1) g.add_edge(c1, c2);
    }
  return g;
}

std::string HarnessReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["harness"] = harness;
  j["arrangement_hash"] = arrangement_hash;
  j["field"] = field;
  j["mode"] = mode;
  j["seed"] = seed;
  j["examined"] = examined;
  j["basis_valid"] = basis_valid;
  j["necessary_pass"] = necessary_pass;
  j["matching"] = matching;
  j["not_good"] = not_good;
  if (harness == "graded")
    j["scalar_search"] = "restricted to +-1 times canonical line representatives";
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& ce : counterexamples) {
    nlohmann::json e;
    e["indices"] = ce.indices;
    e["signs"] = ce.signs;
    e["detail"] = ce.detail;
    ces.push_back(e);
  }
  j["counterexamples"] = ces;
  return j.dump(2) + "\n";
}

namespace {

// deterministic k-subset iteration helpers
bool next_combination(std::vector<size_t>& idx, size_t n) {
  const size_t k = idx.size();
  size_t i = k;
  while (i-- > 0) {
    if (idx[i] != i + n - k) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<size_t> random_subset(std::mt19937_64& rng, size_t n, size_t k) {
  std::vector<size_t> pool(n);
  for (size_t i = 0; i < n; ++i) pool[i] = i;
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + static_cast<size_t>(rng() % (n - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<size_t> out(pool.begin(), pool.begin() + static_cast<long>(k));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

HarnessReport conjecture_harness_filtered(const VGSpace& space,
                                          const HarnessMode& mode) {
  space.field().require_odd_char("the filtered conjecture harness");
  const FieldSpec& F = space.field();
  const size_t n = space.n();
  std::vector<VGElement> gh = space.gheav_bruteforce();
  Graph tope = tope_graph(space.chambers());
  const size_t rank = space.arrangement().rank();

  HarnessReport rep;
  rep.harness = "filtered";
  rep.arrangement_hash = space.arrangement().hash();
  rep.field = F.name();
  rep.mode = mode.kind == HarnessMode::Kind::exhaustive ? "exhaustive" : "random";
  rep.seed = mode.seed;

  auto run_choice = [&](const std::vector<size_t>& idx) {
    ++rep.examined;
    // basis test for {1, y_1, ..., y_n} in Fil^1
    std::vector<la::Vec> rows;
    rows.push_back(space.constant(F.one()).values);
    for (size_t i : idx) rows.push_back(gh[i].values);
    if (la::rref(la::Matrix::from_rows(F, rows)).rank != n + 1) return;
    ++rep.basis_valid;
    std::vector<VGElement> choice;
    for (size_t i : idx) choice.push_back(gh[i]);
    Graph g = generalized_tope_graph(space, choice);
    TopeGraphCheck chk = tope_graph_necessary_check(g, n, rank);
    if (!chk.pass) return;
    ++rep.necessary_pass;
    if (graph_isomorphic(g, tope)) {
      ++rep.matching;
    } else {
      HarnessCounterexample ce;
      ce.indices = idx;
      ce.detail = "passes necessary checks but is not isomorphic to the tope graph";
      rep.counterexamples.push_back(std::move(ce));
    }
  };

  if (mode.kind == HarnessMode::Kind::exhaustive) {
    if (gh.size() < n) return rep;
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    do {
      run_choice(idx);
    } while (next_combination(idx, gh.size()));
  } else {
    std::mt19937_64 rng(mode.seed);
    for (size_t t = 0; t < mode.trials; ++t) {
      if (gh.size() < n) break;
      run_choice(random_subset(rng, gh.size(), n));
    }
  }
  return rep;
}

AutGroups aut_groups(const VGSpace& space) {
  const FieldSpec& F = space.field();
  const size_t n = space.n();
  const size_t nc = space.dim();
  Graph tope = tope_graph(space.chambers());
  std::vector<std::vector<size_t>> graph_autos = graph_automorphisms(tope);

  AutGroups out;
  out.graph_order = graph_autos.size();
  out.set_order = 1;
  for (size_t i = 2; i <= nc; ++i) out.set_order *= static_cast<unsigned long>(i);

  std::vector<VGElement> gh = space.gheav_bruteforce();

  // chamber bit vectors and target prefix counts
  std::vector<std::vector<uint8_t>> bits(nc, std::vector<uint8_t>(n));
  for (size_t c = 0; c < nc; ++c)
    for (size_t i = 0; i < n; ++i)
      bits[c][i] = space.chambers().chamber(c)[i] > 0 ? 1 : 0;
  std::vector<std::map<std::vector<uint8_t>, size_t>> target(n + 1);
  for (size_t c = 0; c < nc; ++c)
    for (size_t k = 0; k <= n; ++k) {
      std::vector<uint8_t> prefix(bits[c].begin(), bits[c].begin() + static_cast<long>(k));
      ++target[k][prefix];
    }

  // filtered automorphisms = tuples (g_1..g_n) whose chamber patterns hit the
  // chamber bit-vector set bijectively; prune by prefix distribution
  std::vector<std::vector<uint8_t>> ghbits;
  for (const auto& h : gh) {
    std::vector<uint8_t> b(nc);
    for (size_t c = 0; c < nc; ++c) b[c] = F.is_zero(h.values[c]) ? 0 : 1;
    ghbits.push_back(std::move(b));
  }
  uint64_t filt = 0;
  std::vector<std::vector<uint8_t>> partial(nc, std::vector<uint8_t>{});
  std::function<void(size_t)> dfs = [&](size_t depth) {
    if (depth == n) {
      ++filt;
      return;
    }
    for (size_t pick = 0; pick < gh.size(); ++pick) {
      std::map<std::vector<uint8_t>, size_t> counts;
      for (size_t c = 0; c < nc; ++c) {
        std::vector<uint8_t> p = partial[c];
        p.push_back(ghbits[pick][c]);
        ++counts[p];
      }
      if (counts != target[depth + 1]) continue;
      for (size_t c = 0; c < nc; ++c) partial[c].push_back(ghbits[pick][c]);
      dfs(depth + 1);
      for (size_t c = 0; c < nc; ++c) partial[c].pop_back();
    }
  };
  dfs(0);
  out.filt_order = filt;

  // verify the inclusion Aut_graph <= Aut_filt element by element:
  // x_i o pi^{-1} must be a generalized Heaviside for every graph
  // automorphism pi
  out.graph_inside_filt = true;
  std::set<std::vector<uint8_t>> ghset(ghbits.begin(), ghbits.end());
  for (const auto& pi : graph_autos) {
    // pi maps chamber v to pi[v]; x_i o pi^{-1} evaluated at chamber c is
    // x_i(pi^{-1}(c))
    std::vector<size_t> inv(nc);
    for (size_t v = 0; v < nc; ++v) inv[pi[v]] = v;
    for (size_t i = 0; i < n && out.graph_inside_filt; ++i) {
      std::vector<uint8_t> fb(nc);
      for (size_t c = 0; c < nc; ++c) fb[c] = bits[inv[c]][i];
      if (!ghset.count(fb)) out.graph_inside_filt = false;
    }
    if (!out.graph_inside_filt) break;
  }
  if (!out.graph_inside_filt)
    throw InvariantError("a tope-graph automorphism is not a filtered automorphism");
  if (!space.field().is_char2() && is_generic_codim2(space.arrangement()) &&
      out.graph_order != out.filt_order)
    throw InvariantError(
        "filtered and graph automorphism groups differ on a codim-2-generic input");
  return out;
}

std::vector<std::vector<size_t>> detect_circuits_from_products(
    const FilChain& fc, const std::vector<GradedClass>& gens) {
  const VGSpace& space = fc.space();
  const FieldSpec& F = space.field();
  const size_t n = gens.size();
  if (n != space.n())
    throw DomainError("expected one generator per hyperplane");
  std::vector<la::Vec> rows;
  for (const auto& g : gens) {
    if (g.degree != 1) throw DomainError("generators must live in grVG^1");
    rows.push_back(g.coords);
  }
  if (la::rref(la::Matrix::from_rows(F, rows)).rank != n)
    throw DomainError("generators do not span grVG^1");

  // memoized products by support mask
  std::map<uint32_t, GradedClass> prod;
  std::function<const GradedClass&(uint32_t)> product = [&](uint32_t mask) -> const GradedClass& {
    auto it = prod.find(mask);
    if (it != prod.end()) return it->second;
    size_t top = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) top = i;
    uint32_t rest = mask & ~(1u << top);
    GradedClass value =
        rest == 0 ? gens[top] : fc.graded_mult(product(rest), gens[top]);
    return prod.emplace(mask, std::move(value)).first->second;
  };

  std::vector<std::vector<size_t>> circuits;
  std::vector<uint32_t> circuit_masks;
  for (size_t k = 2; k <= n; ++k) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      uint32_t mask = 0;
      for (size_t i : idx) mask |= (1u << i);
      bool super = false;
      for (uint32_t cm : circuit_masks)
        if ((cm & mask) == cm) super = true;
      if (super) continue;
      if (fc.is_zero(product(mask))) {
        circuits.push_back(idx);
        circuit_masks.push_back(mask);
      }
    } while (next_combination(idx, n));
  }
  return circuits;
}

namespace {

// Shared core: the relation among the deleted-index products, or an
// explanation of why none (or no unique one) exists. The strict op turns a
// failure into an InvariantError; the harness classifies it as not-good.
std::optional<la::Vec> relation_or_reason(const FilChain& fc,
                                          const std::vector<GradedClass>& gens,
                                          const std::vector<size_t>& circuit,
                                          std::string* why) {
  const FieldSpec& F = fc.space().field();
  const size_t k = circuit.size();
  std::vector<GradedClass> deleted;
  for (size_t p = 0; p < k; ++p) {
    GradedClass acc{0, {F.one()}};
    bool first = true;
    for (size_t q = 0; q < k; ++q) {
      if (q == p) continue;
      acc = first ? gens[circuit[q]] : fc.graded_mult(acc, gens[circuit[q]]);
      first = false;
    }
    deleted.push_back(std::move(acc));
  }
  const size_t rows = deleted[0].coords.size();
  la::Matrix m(F, rows, k);
  for (size_t p = 0; p < k; ++p)
    for (size_t r = 0; r < rows; ++r) m.at(r, p) = deleted[p].coords[r];
  la::Subspace ker = la::kernel(m);
  if (ker.dim() != 1) {
    if (why)
      *why = "relation kernel has dimension " + std::to_string(ker.dim()) +
             ", expected 1";
    return std::nullopt;
  }
  la::Vec lam = ker.basis[0];
  size_t fz = SIZE_MAX;
  for (size_t p = 0; p < k; ++p)
    if (!F.is_zero(lam[p])) {
      fz = p;
      break;
    }
  if (fz == SIZE_MAX) {
    if (why) *why = "zero relation vector";
    return std::nullopt;
  }
  Scalar inv = F.inv(lam[fz]);
  for (auto& x : lam) x = F.mul(inv, x);
  for (const auto& x : lam)
    if (F.is_zero(x)) {
      if (why) *why = "relation vector has a zero entry";
      return std::nullopt;
    }
  return lam;
}

}  // namespace

la::Vec circuit_relation(const FilChain& fc,
                         const std::vector<GradedClass>& gens,
                         const std::vector<size_t>& circuit) {
  std::string why;
  auto lam = relation_or_reason(fc, gens, circuit, &why);
  if (!lam) throw InvariantError("circuit relation: " + why);
  return *lam;
}

CheckCircuitsResult try_check_circuits(const FilChain& fc,
                                       const std::vector<GradedClass>& gens) {
  const FieldSpec& F = fc.space().field();
  const size_t n = gens.size();
  CheckCircuitsResult out;
  std::vector<std::vector<size_t>> circuits = detect_circuits_from_products(fc, gens);
  std::vector<SignVector> recovered;
  for (const auto& I : circuits) {
    std::string why;
    auto rel = relation_or_reason(fc, gens, I, &why);
    if (!rel) {
      std::string is;
      for (size_t i : I) is += std::to_string(i + 1) + " ";
      out.good = false;
      out.reason = "not good generators: circuit { " + is + "}: " + why;
      return out;
    }
    const la::Vec& lam = *rel;
    std::vector<int> signs;
    for (const auto& x : lam) {
      if (F.eq(x, F.one()))
        signs.push_back(1);
      else if (F.eq(x, F.neg(F.one())))
        signs.push_back(-1);
      else {
        std::string lams;
        for (const auto& y : lam) lams += rational_str(F.normalize(y)) + " ";
        std::string is;
        for (size_t i : I) is += std::to_string(i + 1) + " ";
        out.good = false;
        out.reason = "not good generators: circuit { " + is +
                     "} has relation ( " + lams + ") outside {+-1}";
        return out;
      }
    }
    SignVector sv(n, 0);
    for (size_t p = 0; p < I.size(); ++p) sv[I[p]] = static_cast<int8_t>(signs[p]);
    recovered.push_back(sv);
    out.recovered.relations.emplace_back(I, signs);
  }
  out.good = true;
  out.recovered.circuits = make_circuit_set(n, std::move(recovered));
  return out;
}

RecoveredCircuits check_circuits(const FilChain& fc,
                                 const std::vector<GradedClass>& gens) {
  CheckCircuitsResult r = try_check_circuits(fc, gens);
  if (!r.good) throw DomainError(r.reason);
  return std::move(r.recovered);
}

namespace {

// For codim-2 generic arrangements the square-zero lines are exactly the
// coordinate lines of grVG^1; map each line to its hyperplane index.
std::vector<size_t> coordinate_line_assignment(const FieldSpec& F,
                                               const std::vector<la::Vec>& lines) {
  std::vector<size_t> line_of_index(lines.size(), SIZE_MAX);
  for (size_t l = 0; l < lines.size(); ++l) {
    size_t nz = SIZE_MAX;
    for (size_t i = 0; i < lines[l].size(); ++i) {
      if (F.is_zero(lines[l][i])) continue;
      if (nz != SIZE_MAX) throw DomainError(
          "square-zero lines are not coordinate lines (arrangement not "
          "codim-2 generic?)");
      nz = i;
    }
    if (nz == SIZE_MAX || line_of_index[nz] != SIZE_MAX)
      throw DomainError("square-zero lines do not match hyperplanes");
    line_of_index[nz] = l;
  }
  return line_of_index;
}

}  // namespace

RecoverVerdict recover_and_compare(const VGSpace& space, const FilChain& fc,
                                   const std::vector<Scalar>& mu) {
  space.field().require_odd_char("signed-circuit recovery");
  const FieldSpec& F = space.field();
  const size_t n = space.n();
  if (mu.size() != n) throw UsageError("need one unit scalar per hyperplane");
  for (const auto& m : mu)
    if (F.is_zero(m)) throw UsageError("scalars must be units");

  std::vector<la::Vec> lines = sqzero(space, fc);
  if (lines.size() != n)
    throw DomainError("sqzero has " + std::to_string(lines.size()) +
                      " lines != n = " + std::to_string(n) +
                      ": not codim-2 generic");
  std::vector<size_t> line_of_index = coordinate_line_assignment(F, lines);

  std::vector<GradedClass> gens;
  for (size_t i = 0; i < n; ++i) {
    la::Vec coords = lines[line_of_index[i]];
    for (auto& x : coords) x = F.mul(mu[i], x);
    gens.push_back(GradedClass{1, std::move(coords)});
  }
  RecoveredCircuits rc = check_circuits(fc, gens);
  SignedCircuitSet truth = signed_circuits(space.arrangement());

  RecoverVerdict v;
  v.good = true;
  if (auto eps = reorientation_only(rc.circuits, truth)) {
    v.equivalent = true;
    v.pure_reorientation = true;
    v.detail = "reorientation-equivalent to the geometric signed circuits";
  } else if (circuits_equivalent(rc.circuits, truth)) {
    v.equivalent = true;
    v.detail = "equivalent after a ground-set permutation";
  } else {
    v.detail = "recovered circuits are NOT equivalent to the geometric ones";
  }
  return v;
}

HarnessReport conjecture_harness_graded(const VGSpace& space,
                                        const FilChain& fc,
                                        const HarnessMode& mode) {
  space.field().require_odd_char("the graded conjecture harness");
  const FieldSpec& F = space.field();
  const size_t n = space.n();
  std::vector<la::Vec> lines = sqzero(space, fc);
  SignedCircuitSet truth = signed_circuits(space.arrangement());

  HarnessReport rep;
  rep.harness = "graded";
  rep.arrangement_hash = space.arrangement().hash();
  rep.field = F.name();
  rep.mode = mode.kind == HarnessMode::Kind::exhaustive ? "exhaustive" : "random";
  rep.seed = mode.seed;

  auto run_choice = [&](const std::vector<size_t>& idx, const std::vector<int>& signs) {
    ++rep.examined;
    std::vector<GradedClass> gens;
    std::vector<la::Vec> rows;
    for (size_t t = 0; t < n; ++t) {
      la::Vec coords = lines[idx[t]];
      if (signs[t] < 0)
        for (auto& x : coords) x = F.neg(x);
      rows.push_back(coords);
      gens.push_back(GradedClass{1, std::move(coords)});
    }
    if (la::rref(la::Matrix::from_rows(F, rows)).rank != n) return;
    ++rep.basis_valid;
    CheckCircuitsResult r = try_check_circuits(fc, gens);
    if (!r.good) {
      ++rep.not_good;
      return;
    }
    if (circuits_equivalent(r.recovered.circuits, truth)) {
      ++rep.matching;
    } else {
      HarnessCounterexample ce;
      ce.indices = idx;
      ce.signs = signs;
      ce.detail = "good generators whose recovered circuits are not equivalent";
      rep.counterexamples.push_back(std::move(ce));
    }
  };

  if (mode.kind == HarnessMode::Kind::exhaustive) {
    if (lines.size() < n) return rep;
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    do {
      std::vector<int> signs(n, 1);
      for (uint32_t smask = 0; smask < (1u << n); ++smask) {
        for (size_t t = 0; t < n; ++t) signs[t] = (smask >> t) & 1 ? -1 : 1;
        run_choice(idx, signs);
      }
    } while (next_combination(idx, lines.size()));
  } else {
    std::mt19937_64 rng(mode.seed);
    for (size_t t = 0; t < mode.trials; ++t) {
      if (lines.size() < n) break;
      std::vector<size_t> idx = random_subset(rng, lines.size(), n);
      std::vector<int> signs(n);
      for (size_t i = 0; i < n; ++i) signs[i] = (rng() & 1) ? 1 : -1;
      run_choice(idx, signs);
    }
  }
  return rep;
}

}  // namespace vg
