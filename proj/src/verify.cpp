#include "vg/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "vg/catalog.hpp"
#include "vg/reconstruct.hpp"

namespace vg {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

CheckResult run_one(const std::string& name, const Check& body) {
  CheckResult r;
  r.name = name;
  try {
    r.detail = body();
    r.pass = r.detail.empty();
    if (r.pass) r.detail = "ok";
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string fmt_count(const char* what, size_t got, size_t want) {
  if (got == want) return "";
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

Arrangement tiny(size_t ell, std::vector<std::vector<long>> rows) {
  std::vector<la::Vec> normals;
  for (auto& r : rows) {
    la::Vec v;
    for (long x : r) v.emplace_back(x);
    normals.push_back(std::move(v));
  }
  return Arrangement(ell, std::move(normals));
}

// Pipeline shared by criterion 5 and the reconstruct suite: on a
// codimension-2-generic arrangement, the jump search must find exactly the 2n
// Heavisides and the rebuilt graph must coincide with the geometric one.
std::string generic_pipeline_check(const VGSpace& space) {
  const size_t n = space.n();
  std::vector<VGElement> gh = space.gheav_bruteforce();
  if (gh.size() != 2 * n)
    return "gHeav size " + std::to_string(gh.size()) + " != 2n";
  std::vector<VGElement> heav;
  for (size_t i = 0; i < n; ++i) {
    heav.push_back(space.heaviside(i, 1));
    heav.push_back(space.heaviside(i, -1));
  }
  for (const auto& h : heav)
    if (std::find(gh.begin(), gh.end(), h) == gh.end())
      return "a Heaviside function is missing from gHeav";
  Graph rec = recover_tope_graph_from_heav(space);
  Graph tope = tope_graph(space.chambers());
  if (rec.edges() != tope.edges())
    return "recovered tope graph differs from the geometric one";
  if (!graph_isomorphic(rec, tope)) return "recovered graph not isomorphic";
  return "";
}

std::string dims_equal_betti(const VGSpace& space, const FilChain& fc) {
  std::vector<mpz_class> b = betti(space.arrangement());
  for (size_t k = 0; k < fc.levels(); ++k) {
    mpz_class want = k < b.size() ? b[k] : mpz_class(0);
    if (mpz_class(static_cast<unsigned long>(fc.graded_dim(k))) != want)
      return "dim grVG^" + std::to_string(k) + " = " +
             std::to_string(fc.graded_dim(k)) + " != b_k = " + want.get_str();
  }
  return "";
}

// Prop-2.6 dimension identity, plus Zaslavsky and the distance metric;
// criterion 12 runs this over everything the suite touches.
std::string cross_module_check(const Arrangement& a, const FieldSpec& field) {
  if (mpz_class(static_cast<unsigned long>(ChamberSet::enumerate(a).size())) !=
      zaslavsky_count(a))
    return "Zaslavsky count mismatch";
  VGSpace space(a, field);
  Graph tope = tope_graph(space.chambers());
  auto dist = tope.all_distances();
  for (size_t c1 = 0; c1 < space.dim(); ++c1)
    for (size_t c2 = 0; c2 < space.dim(); ++c2)
      if (dist[c1][c2] != sep_size(space.chambers(), c1, c2))
        return "tope-graph distance != #Sep";
  FilChain fc(space);
  for (size_t i = 0; i < a.n(); ++i) {
    VGSpace del(a.deletion(i), field);
    FilChain fc_del(del);
    VGSpace res(space.restr(i).sub, field);
    FilChain fc_res(res);
    if (del.dim() + res.dim() != space.dim())
      return "deletion-restriction chamber count fails";
    for (size_t k = 0; k < fc.levels(); ++k) {
      size_t lhs = fc.dim(k);
      size_t d1 = k < fc_del.levels() ? fc_del.dim(k) : fc_del.dim(fc_del.levels() - 1);
      size_t d2 = k == 0 ? 0
                         : (k - 1 < fc_res.levels() ? fc_res.dim(k - 1)
                                                    : fc_res.dim(fc_res.levels() - 1));
      if (lhs != d1 + d2)
        return "Fil^" + std::to_string(k) + " dimension identity fails at H" +
               std::to_string(i + 1);
    }
  }
  return "";
}

std::vector<VGElement> catalog_alt_rows(const VGSpace& space, const A3Table& t,
                                        const std::vector<std::string>& names) {
  const FieldSpec& F = space.field();
  std::vector<VGElement> out;
  for (const auto& nm : names) {
    if (nm[0] == 'x') {
      out.push_back(space.heaviside(std::stoul(nm.substr(1)) - 1, 1));
      continue;
    }
    const auto& alt = t.alternating_rows.at(nm);
    VGElement f = space.constant(F.from_long(alt.base));
    for (size_t i = 0; i < alt.support.size(); ++i)
      f = space.add(f, space.scale(F.from_long(alt.jumps[i]),
                                   space.heaviside(alt.support[i] - 1, 1)));
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// module suites
// ---------------------------------------------------------------------------

std::vector<CheckResult> checks_exactla() {
  std::vector<CheckResult> out;
  const FieldSpec Q = FieldSpec::rationals();

  out.push_back(run_one("exactla: rref examples", [&]() -> std::string {
    auto id3 = la::Matrix::identity(Q, 3);
    auto r = la::rref(id3);
    if (r.rank != 3 || !(la::Matrix::from_rows(Q, r.basis.basis) == id3))
      return "identity rref wrong";
    la::Matrix z(Q, 2, 4);
    if (la::rref(z).rank != 0) return "zero matrix rank nonzero";
    auto m = la::Matrix::from_rows(Q, {{1, 2}, {2, 4}});
    auto rr = la::rref(m);
    if (rr.rank != 1 || !Q.eq(rr.basis.basis[0][1], Scalar(2)))
      return "dependent rows rref wrong";
    return "";
  }));

  out.push_back(run_one("exactla: kernel examples", [&]() -> std::string {
    auto m = la::Matrix::from_rows(Q, {{1, 0, 1}, {0, 1, 1}});
    auto k = la::kernel(m);
    if (k.dim() != 1) return "kernel dimension wrong";
    la::Vec v{Scalar(1), Scalar(1), Scalar(-1)};
    if (!la::contains(k, v)) return "(1,1,-1) not in kernel";
    if (la::kernel(la::Matrix::from_rows(Q, {{1, 1}, {0, 1}})).dim() != 0)
      return "invertible matrix has kernel";
    if (la::kernel(la::Matrix::from_rows(Q, {{0}, {0}})).dim() != 1)
      return "zero column kernel not a line";
    return "";
  }));

  out.push_back(run_one("exactla: membership and lattice ops", [&]() -> std::string {
    auto s1 = la::rref(la::Matrix::from_rows(Q, {{1, 0, 0}, {0, 1, 0}})).basis;
    auto s2 = la::rref(la::Matrix::from_rows(Q, {{0, 1, 0}, {0, 0, 1}})).basis;
    la::Vec e1{Scalar(1), Scalar(0), Scalar(0)};
    la::Vec e2{Scalar(0), Scalar(1), Scalar(0)};
    if (!la::contains(s1, e1) || la::contains(s2, e1)) return "membership wrong";
    auto inter = la::intersection(s1, s2);
    if (inter.dim() != 1 || !la::contains(inter, e2)) return "intersection wrong";
    auto sm = la::sum(s1, s2);
    if (sm.dim() != 3) return "sum wrong";
    return "";
  }));

  out.push_back(run_one("exactla: rank-nullity and projection (random)", [&]() -> std::string {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
      FieldSpec F = (trial % 3 == 0) ? FieldSpec::prime(5)
                                     : (trial % 3 == 1 ? FieldSpec::prime(7) : Q);
      size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      la::Matrix m(F, rows, cols);
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
          m.at(i, j) = F.from_long(static_cast<long>(rng() % 7) - 3);
      auto r = la::rref(m);
      auto k = la::kernel(m);
      if (r.rank + k.dim() != cols) return "rank-nullity fails";
      auto r2 = la::rref(la::Matrix::from_rows(F, r.basis.basis));
      if (!la::equal(r2.basis, r.basis)) return "rref not a projection";
      // coordinates reconstruct members
      if (r.rank > 0) {
        la::Vec coeffs;
        la::Vec v = r.basis.basis[0];
        la::Vec rem = la::reduce(r.basis, v, &coeffs);
        for (const auto& x : rem)
          if (!F.is_zero(x)) return "reduce of member leaves remainder";
      }
    }
    return "";
  }));
  return out;
}

std::vector<CheckResult> checks_arrangement() {
  std::vector<CheckResult> out;

  out.push_back(run_one("arrangement: feasibility oracle", [&]() -> std::string {
    Arrangement line = tiny(1, {{1}});
    auto w = feasible(line, {1});
    if (!w || (*w)[0] <= 0) return "positive ray witness wrong";
    Arrangement pencil = tiny(2, {{1, 0}, {0, 1}, {1, 1}});
    if (feasible(pencil, {1, 1, -1})) return "(+,+,-) should be infeasible for x,y,x+y";
    Arrangement b2 = tiny(2, {{1, 0}, {0, 1}});
    auto w2 = feasible(b2, {1, -1});
    if (!w2 || (*w2)[0] <= 0 || (*w2)[1] >= 0) return "B2 witness wrong";
    return "";
  }));

  out.push_back(run_one("arrangement: chamber counts", [&]() -> std::string {
    if (ChamberSet::enumerate(tiny(1, {{1}})).size() != 2) return "n=1 count";
    CatalogEntry a3 = catalog_load("a3");
    if (ChamberSet::enumerate(a3.arrangement).size() != 24) return "a3 count";
    CatalogEntry g6 = catalog_load("generic6a");
    if (ChamberSet::enumerate(g6.arrangement).size() != 32) return "generic6a count";
    return "";
  }));

  out.push_back(run_one("arrangement: sep and tope graphs", [&]() -> std::string {
    Arrangement one = tiny(1, {{1}});
    Graph g1 = tope_graph(ChamberSet::enumerate(one));
    if (g1.num_vertices() != 2 || g1.num_edges() != 1) return "K2 expected";
    CatalogEntry p3 = catalog_load("pencil3");
    ChamberSet cs = ChamberSet::enumerate(p3.arrangement);
    Graph g = tope_graph(cs);
    for (size_t c = 0; c < cs.size(); ++c) {
      if (sep_size(cs, c, c) != 0) return "Sep(C,C) nonempty";
      if (sep_size(cs, c, cs.opposite(c)) != 3) return "opposite sep size wrong";
      if (g.degree(c) != 2) return "pencil tope graph is not a cycle";
    }
    if (!g.connected()) return "6-cycle disconnected";
    CatalogEntry a3 = catalog_load("a3");
    ChamberSet a3cs = ChamberSet::enumerate(a3.arrangement);
    Graph a3g = tope_graph(a3cs);
    if (a3g.num_vertices() != 24) return "a3 tope graph size";
    if (a3g.degree_profile().front() != 3) return "a3 min degree != rank";
    return "";
  }));

  out.push_back(run_one("arrangement: restriction and lifts", [&]() -> std::string {
    Arrangement b2 = tiny(2, {{1, 0}, {0, 1}});
    ChamberSet cs = ChamberSet::enumerate(b2);
    Restriction r = restriction(b2, cs, 0);
    if (r.sub.n() != 1 || r.sub_chambers.size() != 2) return "B2 restriction wrong";
    // lifts are exactly the Sep={i} pairs, each exactly once
    for (const auto& name : {"pencil3", "a3"}) {
      CatalogEntry e = catalog_load(name);
      ChamberSet ecs = ChamberSet::enumerate(e.arrangement);
      for (size_t i = 0; i < e.arrangement.n(); ++i) {
        Restriction ri = restriction(e.arrangement, ecs, i);
        std::set<std::pair<size_t, size_t>> seen;
        for (auto [cp, cm] : ri.lifts) {
          auto s = sep(ecs, cp, cm);
          if (s.size() != 1 || s[0] != i) return "lift pair not separated exactly by i";
          if (ecs.chamber(cp)[i] != 1 || ecs.chamber(cm)[i] != -1)
            return "lift orientation wrong";
          seen.insert({std::min(cp, cm), std::max(cp, cm)});
        }
        size_t expect = 0;
        for (size_t c1 = 0; c1 < ecs.size(); ++c1)
          for (size_t c2 = c1 + 1; c2 < ecs.size(); ++c2) {
            auto s = sep(ecs, c1, c2);
            if (s.size() == 1 && s[0] == i) ++expect;
          }
        if (seen.size() != ri.lifts.size() || seen.size() != expect)
          return "lift map is not a bijection onto Sep={i} pairs";
      }
    }
    // pencil restriction merges the two other lines
    CatalogEntry p3 = catalog_load("pencil3");
    ChamberSet pcs = ChamberSet::enumerate(p3.arrangement);
    Restriction rp = restriction(p3.arrangement, pcs, 0);
    if (rp.sub.n() != 1 || rp.sub_chambers.size() != 2)
      return "pencil restriction should have one merged hyperplane, two rays";
    return "";
  }));

  out.push_back(run_one("arrangement: lattice and characteristic polynomial", [&]() -> std::string {
    CatalogEntry a3 = catalog_load("a3");
    std::vector<mpz_class> chi = char_poly(a3.arrangement);
    std::vector<mpz_class> want{-6, 11, -6, 1};  // ascending powers
    if (chi != want) return "a3 characteristic polynomial wrong";
    CatalogEntry fa = catalog_load("falk-a"), fb = catalog_load("falk-b");
    if (char_poly(fa.arrangement) != char_poly(fb.arrangement))
      return "falk pair characteristic polynomials differ";
    Arrangement empty(2, {});
    std::vector<mpz_class> chi0 = char_poly(empty);
    if (!(chi0[2] == 1 && chi0[1] == 0 && chi0[0] == 0))
      return "empty arrangement should give t^2";
    return "";
  }));

  out.push_back(run_one("arrangement: codimension-2 flats", [&]() -> std::string {
    if (!is_generic_codim2(catalog_load("generic6a").arrangement))
      return "generic6a not generic";
    CatalogEntry a3 = catalog_load("a3");
    if (is_generic_codim2(a3.arrangement)) return "a3 wrongly generic";
    size_t triples = 0;
    for (const auto& f : codim2_flats(a3.arrangement))
      if (f.size() == 3) ++triples;
    if (triples != 4) return "a3 should have four triple flats";
    if (is_generic_codim2(catalog_load("pencil3").arrangement))
      return "pencil wrongly generic";
    return "";
  }));

  out.push_back(run_one("arrangement: invariants on catalog + random", [&]() -> std::string {
    std::vector<Arrangement> arrs;
    for (const auto& nm : catalog_names()) arrs.push_back(catalog_load(nm).arrangement);
    for (uint64_t s = 0; s < 6; ++s)
      arrs.push_back(random_arrangement(7100 + s, 4 + s % 4, 3, false));
    for (const auto& a : arrs) {
      ChamberSet cs = ChamberSet::enumerate(a);
      if (mpz_class(static_cast<unsigned long>(cs.size())) != zaslavsky_count(a))
        return "Zaslavsky fails";
      Graph g = tope_graph(cs);
      auto dist = g.all_distances();
      for (size_t c1 = 0; c1 < cs.size(); ++c1)
        for (size_t c2 = 0; c2 < cs.size(); ++c2)
          if (dist[c1][c2] != sep_size(cs, c1, c2)) return "graph metric fails";
      // central symmetry is a tope-graph automorphism
      for (size_t c1 = 0; c1 < cs.size(); ++c1)
        for (size_t c2 = c1 + 1; c2 < cs.size(); ++c2)
          if (g.has_edge(c1, c2) != g.has_edge(cs.opposite(c1), cs.opposite(c2)))
            return "antipodal map not an automorphism";
      for (size_t i = 0; i < a.n(); ++i) {
        size_t del = ChamberSet::enumerate(a.deletion(i)).size();
        size_t res = restriction(a, cs, i).sub_chambers.size();
        if (del + res != cs.size()) return "deletion-restriction count fails";
      }
    }
    return "";
  }));
  return out;
}

std::vector<CheckResult> checks_omatroid() {
  std::vector<CheckResult> out;

  out.push_back(run_one("omatroid: signed circuits", [&]() -> std::string {
    Arrangement pencil = tiny(2, {{1, 0}, {0, 1}, {1, 1}});
    SignedCircuitSet c = signed_circuits(pencil);
    if (c.circuits.size() != 2) return "pencil should have one +- circuit pair";
    SignVector want{1, 1, -1};
    if (std::find(c.circuits.begin(), c.circuits.end(), want) == c.circuits.end())
      return "(+,+,-) missing";
    if (!signed_circuits(tiny(2, {{1, 0}, {0, 1}})).circuits.empty())
      return "B2 should have no circuits";
    SignedCircuitSet a3c = signed_circuits(catalog_load("a3").arrangement);
    size_t s3 = 0, s4 = 0;
    std::set<uint32_t> sup;
    for (const auto& sv : a3c.circuits) {
      size_t sz = 0;
      uint32_t m = 0;
      for (size_t i = 0; i < sv.size(); ++i)
        if (sv[i] != 0) {
          ++sz;
          m |= (1u << i);
        }
      if (sup.insert(m).second) {
        if (sz == 3) ++s3;
        if (sz == 4) ++s4;
      }
    }
    if (s3 != 4 || s4 != 3) return "a3 circuit supports should be 4 triples + 3 quadruples";
    return "";
  }));

  out.push_back(run_one("omatroid: circuit properties", [&]() -> std::string {
    for (const auto& nm : {"a3", "falk-a", "pencil3"}) {
      CatalogEntry e = catalog_load(nm);
      SignedCircuitSet c = signed_circuits(e.arrangement);
      for (const auto& sv : c.circuits) {
        SignVector neg = sv;
        for (auto& x : neg) x = static_cast<int8_t>(-x);
        if (std::find(c.circuits.begin(), c.circuits.end(), neg) == c.circuits.end())
          return "not negation closed";
        // the open cone prescribed by a circuit is empty
        SignVector full(e.arrangement.n(), 0);
        bool any = false;
        for (size_t i = 0; i < sv.size(); ++i) full[i] = sv[i] == 0 ? 1 : sv[i];
        (void)any;
        // only the circuit's support matters; fill the rest arbitrarily and
        // check the support-restricted system directly instead
        std::vector<la::Vec> rows;
        for (size_t i = 0; i < sv.size(); ++i) {
          if (sv[i] == 0) continue;
          la::Vec r = e.arrangement.normal(i);
          if (sv[i] < 0)
            for (auto& x : r) x = -x;
          rows.push_back(r);
        }
        Arrangement sub(e.arrangement.ell(), rows);
        SignVector allplus(rows.size(), 1);
        if (feasible(sub, allplus)) return "circuit cone is nonempty";
      }
      // supports pairwise incomparable
      std::vector<uint32_t> masks;
      for (const auto& sv : c.circuits) {
        uint32_t m = 0;
        for (size_t i = 0; i < sv.size(); ++i)
          if (sv[i] != 0) m |= (1u << i);
        masks.push_back(m);
      }
      for (uint32_t m1 : masks)
        for (uint32_t m2 : masks)
          if (m1 != m2 && (m1 & m2) == m1) return "supports comparable";
    }
    return "";
  }));

  out.push_back(run_one("omatroid: reorientation equivalence", [&]() -> std::string {
    SignedCircuitSet c = signed_circuits(catalog_load("a3").arrangement);
    auto self = circuits_equivalent(c, c);
    if (!self) return "set not equivalent to itself";
    std::vector<int> eps(c.n, 1);
    eps[0] = -1;
    eps[3] = -1;
    auto r = circuits_equivalent(c, reorient(c, eps));
    if (!r) return "reorientation not recognized";
    SignedCircuitSet g1 = signed_circuits(catalog_load("generic6a").arrangement);
    SignedCircuitSet g2 = signed_circuits(catalog_load("generic6b").arrangement);
    if (circuits_equivalent(g1, g2))
      return "generic 6-plane circuit sets wrongly equivalent";
    return "";
  }));

  out.push_back(run_one("omatroid: graph isomorphism", [&]() -> std::string {
    Graph c6(6), c6b(6), k2(2);
    for (size_t i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    size_t shuffle[6] = {2, 4, 0, 5, 1, 3};
    for (size_t i = 0; i < 6; ++i) c6b.add_edge(shuffle[i], shuffle[(i + 1) % 6]);
    k2.add_edge(0, 1);
    if (!graph_isomorphic(c6, c6b)) return "6-cycles not matched";
    if (graph_automorphism_order(c6) != 12) return "C6 automorphism order";
    if (graph_automorphism_order(k2) != 2) return "K2 automorphism order";
    Graph t1 = tope_graph(ChamberSet::enumerate(catalog_load("generic6a").arrangement));
    Graph t2 = tope_graph(ChamberSet::enumerate(catalog_load("generic6b").arrangement));
    if (graph_isomorphic(t1, t2)) return "generic6 tope graphs wrongly isomorphic";
    size_t d6 = 0;
    for (size_t v = 0; v < t1.num_vertices(); ++v)
      if (t1.degree(v) == 6) ++d6;
    if (d6 != 2) return "generic6a degree-6 fingerprint";
    return "";
  }));

  out.push_back(run_one("omatroid: partial cubes and necessary checks", [&]() -> std::string {
    Graph c6(6), k3(3);
    for (size_t i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    for (size_t i = 0; i < 3; ++i) k3.add_edge(i, (i + 1) % 3);
    auto emb = partial_cube_check(c6);
    if (!emb || emb->num_classes != 3) return "6-cycle embedding wrong";
    if (partial_cube_check(k3)) return "K3 wrongly a partial cube";
    if (!tope_graph_necessary_check(c6, 3, 2).pass) return "6-cycle should pass";
    for (const auto& nm : catalog_names()) {
      CatalogEntry e = catalog_load(nm);
      Graph t = tope_graph(ChamberSet::enumerate(e.arrangement));
      auto pc = partial_cube_check(t);
      if (!pc || pc->num_classes != e.arrangement.n())
        return std::string(nm) + ": tope graph not an n-class partial cube";
      if (!tope_graph_necessary_check(t, e.arrangement.n(), e.arrangement.rank()).pass)
        return std::string(nm) + ": tope graph fails necessary checks";
    }
    return "";
  }));
  return out;
}

std::vector<CheckResult> checks_vgalgebra() {
  std::vector<CheckResult> out;
  const FieldSpec Q = FieldSpec::rationals();

  out.push_back(run_one("vgalgebra: Heaviside identities", [&]() -> std::string {
    VGSpace one(tiny(1, {{1}}), Q);
    VGElement xp = one.heaviside(0, 1);
    if (!Q.eq(xp.values[0], Scalar(1)) || !Q.eq(xp.values[1], Scalar(0)))
      return "n=1 Heaviside values wrong";
    VGSpace a3(catalog_load("a3").arrangement, Q);
    for (size_t i = 0; i < a3.n(); ++i) {
      VGElement p = a3.heaviside(i, 1), m = a3.heaviside(i, -1);
      if (!(a3.add(p, m) == a3.constant(Scalar(1)))) return "x+ + x- != 1";
      if (!(a3.mul(p, m) == a3.constant(Scalar(0)))) return "x+ x- != 0";
      if (!(a3.mul(p, p) == p)) return "x+ not idempotent";
    }
    return "";
  }));

  out.push_back(run_one("vgalgebra: filtration dimensions", [&]() -> std::string {
    VGSpace p3(catalog_load("pencil3").arrangement, Q);
    FilChain f3(p3);
    if (f3.dim(0) != 1 || f3.dim(1) != 4 || f3.dim(2) != 6)
      return "pencil3 Fil dims wrong";
    VGSpace a3(catalog_load("a3").arrangement, Q);
    FilChain fa(a3);
    if (fa.dim(0) != 1 || fa.dim(1) != 7 || fa.dim(2) != 18 || fa.dim(3) != 24)
      return "a3 Fil dims wrong";
    VGSpace one(tiny(1, {{1}}), Q);
    FilChain f1(one);
    if (f1.dim(0) != 1 || f1.dim(1) != 2) return "n=1 dims wrong";
    for (const auto& nm : catalog_names())
      for (uint32_t p : {0u, 3u, 5u}) {
        FieldSpec F = p == 0 ? Q : FieldSpec::prime(p);
        VGSpace s(catalog_load(nm).arrangement, F);
        FilChain fc(s);
        std::string err = dims_equal_betti(s, fc);
        if (!err.empty()) return std::string(nm) + " over " + F.name() + ": " + err;
      }
    return "";
  }));

  out.push_back(run_one("vgalgebra: rho and support", [&]() -> std::string {
    VGSpace a3(catalog_load("a3").arrangement, Q);
    for (size_t i = 0; i < a3.n(); ++i) {
      VGElement xi = a3.heaviside(i, 1);
      auto c = a3.rho_constant(i, xi);
      if (!c || !Q.eq(*c, Scalar(1))) return "rho_i(x_i) != 1";
      for (size_t j = 0; j < a3.n(); ++j) {
        if (j == i) continue;
        auto cj = a3.rho_constant(j, xi);
        if (!cj || !Q.is_zero(*cj)) return "rho_j(x_i) != 0";
      }
      auto sup = a3.support(xi);
      if (sup.size() != 1 || sup[0] != i) return "support of Heaviside wrong";
    }
    VGSpace p3(catalog_load("pencil3").arrangement, Q);
    VGElement y = p3.constant(Scalar(-1));
    for (size_t i = 0; i < 3; ++i) y = p3.add(y, p3.heaviside(i, 1));
    if (!p3.in_fil1(y)) return "pencil alternating function not in Fil^1";
    if (p3.support(y).size() != 3) return "pencil alternating support != all";
    if (p3.support(p3.constant(Scalar(7))).size() != 0) return "constant support nonzero";
    VGElement ind = a3.indicator(0);
    bool nonconst = false;
    for (size_t i = 0; i < a3.n(); ++i)
      if (!a3.rho_constant(i, ind)) nonconst = true;
    if (!nonconst) return "indicator should leave Fil^1 in rank >= 2";
    return "";
  }));

  out.push_back(run_one("vgalgebra: Fil^1 membership criterion (random)", [&]() -> std::string {
    std::mt19937_64 rng(515151);
    VGSpace s(catalog_load("pencil3").arrangement, Q);
    FilChain fc(s);
    for (int t = 0; t < 40; ++t) {
      VGElement f{Q, {}};
      for (size_t c = 0; c < s.dim(); ++c)
        f.values.emplace_back(static_cast<long>(rng() % 5) - 2);
      if (s.in_fil1(f) != fc.in_fil(1, f)) return "rho criterion disagrees with subspace";
    }
    // random genuine Fil^1 elements pass
    for (int t = 0; t < 20; ++t) {
      VGElement f = s.constant(Scalar(static_cast<long>(rng() % 5) - 2));
      for (size_t i = 0; i < s.n(); ++i)
        f = s.add(f, s.scale(Scalar(static_cast<long>(rng() % 5) - 2), s.heaviside(i, 1)));
      if (!s.in_fil1(f)) return "affine Heaviside combination not recognized";
    }
    return "";
  }));

  out.push_back(run_one("vgalgebra: gHeav enumerations", [&]() -> std::string {
    VGSpace p3(catalog_load("pencil3").arrangement, Q);
    std::vector<VGElement> gh = p3.gheav_bruteforce();
    if (gh.size() != 8) return "pencil3 gHeav size";
    std::vector<VGElement> expect;
    for (size_t i = 0; i < 3; ++i) {
      expect.push_back(p3.heaviside(i, 1));
      expect.push_back(p3.heaviside(i, -1));
    }
    VGElement y = p3.constant(Scalar(-1));
    for (size_t i = 0; i < 3; ++i) y = p3.add(y, p3.heaviside(i, 1));
    expect.push_back(y);
    expect.push_back(p3.complement(y));
    for (const auto& e : expect)
      if (std::find(gh.begin(), gh.end(), e) == gh.end())
        return "pencil3 gHeav misses an expected element";
    VGSpace b2(tiny(2, {{1, 0}, {0, 1}}), Q);
    if (b2.gheav_bruteforce().size() != 4) return "B2 gHeav size";
    VGSpace a3(catalog_load("a3").arrangement, Q);
    std::vector<VGElement> ga = a3.gheav_bruteforce();
    if (ga.size() != 20) return "a3 gHeav size";
    if (!(ga == a3.gheav_structural())) return "a3 enumerations disagree";
    for (const auto& g : ga) {
      VGElement c = a3.complement(g);
      if (std::find(ga.begin(), ga.end(), c) == ga.end())
        return "gHeav not closed under complement";
    }
    return "";
  }));

  out.push_back(run_one("vgalgebra: alternating functions", [&]() -> std::string {
    VGSpace p3(catalog_load("pencil3").arrangement, Q);
    auto pair = p3.alt_function({0, 1, 2});
    if (!pair) return "pencil alt missing";
    VGElement y = p3.constant(Scalar(-1));
    for (size_t i = 0; i < 3; ++i) y = p3.add(y, p3.heaviside(i, 1));
    if (!(pair->plus == y || pair->minus == y)) return "pencil alt differs from x1+x2+x3-1";
    auto single = p3.alt_function({1});
    if (!single || !(single->plus == p3.heaviside(1, 1)))
      return "singleton alt is not the Heaviside";
    // a3: each triple-flat alternating pair appears among the table rows
    VGSpace a3(catalog_load("a3").arrangement, Q);
    A3Table table = a3_table_load();
    auto ys = catalog_alt_rows(a3, table, {"y1", "y2", "y3", "y4"});
    for (const auto& [nm, alt] : table.alternating_rows) {
      std::vector<size_t> subset;
      for (size_t s : alt.support) subset.push_back(s - 1);
      auto p = a3.alt_function(subset);
      if (!p) return "a3 alt missing for " + nm;
      bool hit = false;
      for (const auto& yy : ys)
        if (p->plus == yy || p->minus == yy) hit = true;
      if (!hit) return "a3 alt for " + nm + " not among the table rows";
    }
    return "";
  }));

  out.push_back(run_one("vgalgebra: graded multiplication", [&]() -> std::string {
    VGSpace p3(catalog_load("pencil3").arrangement, Q);
    FilChain fc(p3);
    for (size_t i = 0; i < 3; ++i) {
      GradedClass xi = fc.graded_class(p3.heaviside(i, 1), 1);
      if (!fc.is_zero(fc.graded_mult(xi, xi))) return "class square nonzero";
    }
    // the circuit relation in degree 2, signs from the alpha kernel
    SignedCircuitSet c = signed_circuits(p3.arrangement());
    const SignVector& sv = c.circuits[0];
    GradedClass rel = fc.zero_class(2);
    std::vector<size_t> sup{0, 1, 2};
    for (size_t p = 0; p < 3; ++p) {
      std::vector<size_t> s;
      for (size_t q = 0; q < 3; ++q)
        if (q != p) s.push_back(sup[q]);
      GradedClass mono = fc.graded_class(fc.monomial(s), 2);
      Scalar sgn = Q.from_long(sv[sup[p]]);
      for (size_t t = 0; t < rel.coords.size(); ++t)
        rel.coords[t] = Q.add(rel.coords[t], Q.mul(sgn, mono.coords[t]));
    }
    if (!fc.is_zero(rel)) return "pencil circuit relation does not vanish";
    // well-definedness: perturbing a lift by lower terms keeps the product
    GradedClass x0 = fc.graded_class(p3.heaviside(0, 1), 1);
    GradedClass x1 = fc.graded_class(p3.heaviside(1, 1), 1);
    VGElement lift = fc.lift(x0);
    VGElement perturbed = p3.add(lift, p3.constant(Scalar(5)));
    GradedClass x0b = fc.graded_class(perturbed, 1);
    GradedClass p1 = fc.graded_mult(x0, x1), p2 = fc.graded_mult(x0b, x1);
    if (!(fc.lift(p1) == fc.lift(p2))) return "product depends on the lift";
    // independent Heaviside classes have nonzero products
    for (const auto& nm : {"b2", "pencil3", "a3"}) {
      CatalogEntry e = catalog_load(nm);
      VGSpace s(e.arrangement, Q);
      FilChain f(s);
      const size_t n = e.arrangement.n();
      for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) idx.push_back(i);
        if (idx.size() < 2 || idx.size() > e.arrangement.rank()) continue;
        std::vector<la::Vec> rows;
        for (size_t i : idx) rows.push_back(e.arrangement.normal(i));
        bool indep =
            la::rref(la::Matrix::from_rows(Q, rows)).rank == idx.size();
        GradedClass acc = f.graded_class(s.heaviside(idx[0], 1), 1);
        for (size_t t = 1; t < idx.size(); ++t)
          acc = f.graded_mult(acc, f.graded_class(s.heaviside(idx[t], 1), 1));
        if (indep && f.is_zero(acc)) return "independent product vanished";
        if (!indep && !f.is_zero(acc)) return "dependent product survived";
      }
    }
    return "";
  }));

  out.push_back(run_one("vgalgebra: square-zero lines", [&]() -> std::string {
    VGSpace one(tiny(1, {{1}}), Q);
    FilChain fone(one);
    if (sqzero(one, fone).size() != 1) return "n=1 line count";
    VGSpace b2(tiny(2, {{1, 0}, {0, 1}}), Q);
    FilChain fb2(b2);
    auto lines = sqzero(b2, fb2);
    if (lines.size() != 2) return "B2 line count";
    for (const auto& l : lines) {
      size_t nz = 0;
      for (const auto& x : l)
        if (!Q.is_zero(x)) ++nz;
      if (nz != 1) return "B2 lines should be coordinate lines";
    }
    return "";
  }));

  out.push_back(run_one("vgalgebra: Heaviside pairing vs Sep", [&]() -> std::string {
    for (const auto& nm : {"pencil3", "a3", "falk-a"}) {
      CatalogEntry e = catalog_load(nm);
      VGSpace s(e.arrangement, Q);
      std::vector<VGElement> heav;
      for (size_t i = 0; i < s.n(); ++i) {
        heav.push_back(s.heaviside(i, 1));
        heav.push_back(s.heaviside(i, -1));
      }
      for (size_t c1 = 0; c1 < s.dim(); ++c1)
        for (size_t c2 = 0; c2 < s.dim(); ++c2) {
          size_t differ = 0;
          for (const auto& h : heav)
            if (!Q.eq(h.values[c1], h.values[c2])) ++differ;
          if (differ != 2 * sep_size(s.chambers(), c1, c2))
            return "Heaviside pairing count != 2 #Sep";
        }
    }
    return "";
  }));

  out.push_back(run_one("vgalgebra: presentations (Q and F3)", [&]() -> std::string {
    for (const auto& nm : catalog_names())
      for (uint32_t p : {0u, 3u}) {
        FieldSpec F = p == 0 ? Q : FieldSpec::prime(p);
        VGSpace s(catalog_load(nm).arrangement, F);
        FilChain fc(s);
        PresentationReport rep = verify_presentations(s, fc);
        if (!rep.ok)
          return std::string(nm) + " over " + F.name() + ": " + rep.failures.front();
      }
    return "";
  }));
  return out;
}

std::vector<CheckResult> checks_reconstruct() {
  std::vector<CheckResult> out;
  const FieldSpec Q = FieldSpec::rationals();

  out.push_back(run_one("reconstruct: tope graph from the algebra", [&]() -> std::string {
    VGSpace b2(tiny(2, {{1, 0}, {0, 1}}), Q);
    Graph rec = recover_tope_graph_from_heav(b2);
    if (rec.num_vertices() != 4 || rec.num_edges() != 4) return "B2 not a 4-cycle";
    std::string err = generic_pipeline_check(VGSpace(catalog_load("generic6a").arrangement, Q));
    if (!err.empty()) return "generic6a: " + err;
    try {
      recover_tope_graph_from_heav(VGSpace(catalog_load("pencil3").arrangement, Q));
      return "pencil3 should refuse tope-graph recovery";
    } catch (const DomainError&) {
    }
    return "";
  }));

  out.push_back(run_one("reconstruct: generalized tope graphs on a3", [&]() -> std::string {
    VGSpace a3(catalog_load("a3").arrangement, Q);
    Graph tope = tope_graph(a3.chambers());
    A3Table t = a3_table_load();
    auto heav_choice = catalog_alt_rows(a3, t, {"x1", "x2", "x3", "x4", "x5", "x6"});
    Graph g0 = generalized_tope_graph(a3, heav_choice);
    if (g0.edges() != tope.edges()) return "Heaviside choice must rebuild the tope graph";
    auto good = catalog_alt_rows(a3, t, {"x1", "x3", "x5", "y1", "y2", "y3"});
    Graph g1 = generalized_tope_graph(a3, good);
    if (!tope_graph_necessary_check(g1, 6, 3).pass) return "mixed choice should pass";
    if (!graph_isomorphic(g1, tope)) return "mixed choice should be isomorphic";
    for (auto names : {std::vector<std::string>{"y1", "x2", "x3", "x4", "x5", "x6"},
                       std::vector<std::string>{"x1", "x2", "x4", "y1", "y2", "y3"}}) {
      Graph g = generalized_tope_graph(a3, catalog_alt_rows(a3, t, names));
      bool deg2 = false;
      for (size_t v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 2) deg2 = true;
      if (!deg2) return "expected a degree-2 vertex";
      if (tope_graph_necessary_check(g, 6, 3).pass) return "bad choice passed";
    }
    return "";
  }));

  out.push_back(run_one("reconstruct: automorphism groups", [&]() -> std::string {
    AutGroups p3 = aut_groups(VGSpace(catalog_load("pencil3").arrangement, Q));
    if (p3.graph_order != 12) return "pencil3 graph order";
    if (p3.filt_order != 48) return "pencil3 filtered order";
    if (!p3.graph_inside_filt) return "pencil3 inclusion fails";
    if (p3.filt_order % p3.graph_order != 0) return "orders do not divide";
    AutGroups b2 = aut_groups(VGSpace(tiny(2, {{1, 0}, {0, 1}}), Q));
    if (b2.graph_order != 8 || b2.filt_order != 8) return "B2 orders wrong";
    AutGroups g6 = aut_groups(VGSpace(catalog_load("generic6a").arrangement, Q));
    if (g6.graph_order != g6.filt_order) return "generic6a orders differ";
    if (!g6.graph_inside_filt) return "generic6a inclusion fails";
    return "";
  }));

  out.push_back(run_one("reconstruct: circuit recovery", [&]() -> std::string {
    for (const auto& nm : catalog_names()) {
      CatalogEntry e = catalog_load(nm);
      VGSpace s(e.arrangement, Q);
      FilChain fc(s);
      std::vector<GradedClass> xs;
      for (size_t i = 0; i < s.n(); ++i)
        xs.push_back(fc.graded_class(s.heaviside(i, 1), 1));
      RecoveredCircuits rc = check_circuits(fc, xs);
      SignedCircuitSet truth = signed_circuits(e.arrangement);
      if (!(rc.circuits == truth))
        return std::string(nm) + ": recovered circuits differ from geometric ones";
      // reorientation covariance
      std::vector<int> eps(s.n(), 1);
      for (size_t i = 0; i < s.n(); i += 2) eps[i] = -1;
      std::vector<GradedClass> xe = xs;
      for (size_t i = 0; i < s.n(); ++i)
        if (eps[i] < 0)
          for (auto& x : xe[i].coords) x = Q.neg(x);
      RecoveredCircuits rce = check_circuits(fc, xe);
      if (!(rce.circuits == reorient(truth, eps)))
        return std::string(nm) + ": reorientation covariance fails";
    }
    // a scalar that is not +-1 must break goodness
    CatalogEntry a3 = catalog_load("a3");
    VGSpace s(a3.arrangement, Q);
    FilChain fc(s);
    std::vector<GradedClass> xs;
    for (size_t i = 0; i < s.n(); ++i)
      xs.push_back(fc.graded_class(s.heaviside(i, 1), 1));
    for (auto& x : xs[0].coords) x = Q.mul(Scalar(2), x);
    try {
      check_circuits(fc, xs);
      return "rescaled generators should not be good";
    } catch (const DomainError&) {
    }
    return "";
  }));

  out.push_back(run_one("reconstruct: relation scaling under rescaled generators",
                        [&]() -> std::string {
    VGSpace s(catalog_load("pencil3").arrangement, Q);
    FilChain fc(s);
    std::vector<GradedClass> xs;
    for (size_t i = 0; i < 3; ++i)
      xs.push_back(fc.graded_class(s.heaviside(i, 1), 1));
    std::vector<size_t> I{0, 1, 2};
    la::Vec lam = circuit_relation(fc, xs, I);
    SignedCircuitSet c = signed_circuits(s.arrangement());
    const SignVector& sv = c.circuits[0];
    // lambda proportional to the alpha-kernel signs
    Scalar ratio = Q.div(Q.from_long(sv[0]), lam[0]);
    for (size_t p = 0; p < 3; ++p)
      if (!Q.eq(Q.mul(ratio, lam[p]), Q.from_long(sv[p])))
        return "relation signs differ from the alpha kernel";
    // mu-rescaled generators: the deleted-set products absorb the scalars,
    // so lam2_p * mu_{I minus p} must stay proportional to lam_p
    std::vector<Scalar> mu{Scalar(2), Scalar(3), Scalar(5)};
    std::vector<GradedClass> fs = xs;
    for (size_t i = 0; i < 3; ++i)
      for (auto& x : fs[i].coords) x = Q.mul(mu[i], x);
    la::Vec lam2 = circuit_relation(fc, fs, I);
    la::Vec lhs(3);
    lhs[0] = Q.mul(Q.mul(mu[1], mu[2]), lam2[0]);
    lhs[1] = Q.mul(Q.mul(mu[0], mu[2]), lam2[1]);
    lhs[2] = Q.mul(Q.mul(mu[0], mu[1]), lam2[2]);
    Scalar k = Q.div(lam[0], lhs[0]);
    for (size_t p = 0; p < 3; ++p)
      if (!Q.eq(Q.mul(k, lhs[p]), lam[p])) return "rescaling law fails";
    return "";
  }));

  out.push_back(run_one("reconstruct: recover_and_compare", [&]() -> std::string {
    VGSpace g6(catalog_load("generic6a").arrangement, Q);
    FilChain fc(g6);
    std::vector<Scalar> ones(6, Scalar(1));
    RecoverVerdict v = recover_and_compare(g6, fc, ones);
    if (!v.good || !v.equivalent || !v.pure_reorientation)
      return "identity scalars should recover exactly";
    std::vector<Scalar> signs{Scalar(-1), Scalar(1), Scalar(-1),
                              Scalar(1),  Scalar(1), Scalar(-1)};
    RecoverVerdict v2 = recover_and_compare(g6, fc, signs);
    if (!v2.good || !v2.equivalent) return "sign rescaling should stay equivalent";
    return "";
  }));

  out.push_back(run_one("reconstruct: harnesses on small entries", [&]() -> std::string {
    VGSpace b2(tiny(2, {{1, 0}, {0, 1}}), Q);
    FilChain fb2(b2);
    HarnessReport r1 = conjecture_harness_filtered(b2, HarnessMode::exhaustive());
    if (!r1.counterexamples.empty()) return "B2 filtered counterexample";
    if (r1.necessary_pass != r1.matching) return "B2 pass/match mismatch";
    VGSpace p3(catalog_load("pencil3").arrangement, Q);
    FilChain fp3(p3);
    HarnessReport r2 = conjecture_harness_filtered(p3, HarnessMode::exhaustive());
    if (!r2.counterexamples.empty()) return "pencil3 filtered counterexample";
    if (r2.examined != 56) return "pencil3 should examine C(8,3) = 56 choices";
    HarnessReport r3 = conjecture_harness_graded(p3, fp3, HarnessMode::exhaustive());
    if (!r3.counterexamples.empty()) return "pencil3 graded counterexample";
    if (r3.basis_valid == 0 || r3.matching == 0) return "pencil3 graded found nothing";
    HarnessReport r4 = conjecture_harness_graded(b2, fb2, HarnessMode::exhaustive());
    if (!r4.counterexamples.empty() || r4.matching != r4.basis_valid - r4.not_good)
      return "B2 graded classification inconsistent";
    return "";
  }));
  return out;
}

std::vector<CheckResult> checks_catalog() {
  std::vector<CheckResult> out;
  for (const auto& nm : catalog_names()) {
    out.push_back(run_one("catalog: " + nm, [nm]() -> std::string {
      CatalogValidation v = catalog_validate(nm);
      if (!v.ok) return v.failures.front();
      return "";
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// acceptance criteria
// ---------------------------------------------------------------------------

CheckResult criterion1() {
  return run_one("criterion 1: a3 chamber count and characteristic polynomial",
                 []() -> std::string {
    CatalogEntry e = catalog_load("a3");
    ChamberSet cs = ChamberSet::enumerate(e.arrangement);
    if (cs.size() != 24) return fmt_count("chambers", cs.size(), 24);
    std::vector<mpz_class> chi = char_poly(e.arrangement);
    std::vector<mpz_class> want{-6, 11, -6, 1};
    if (chi != want) return "characteristic polynomial != (t-1)(t-2)(t-3)";
    return "";
  });
}

CheckResult criterion2() {
  return run_one("criterion 2: a3 10x24 product table reproduced entry-for-entry",
                 []() -> std::string {
    VGSpace space(catalog_load("a3").arrangement, FieldSpec::rationals());
    A3TableMatch m = a3_table_match(space, a3_table_load());
    if (!m.ok) return m.failures.front();
    return "";
  });
}

CheckResult criterion3() {
  return run_one("criterion 3: pencil3 gHeav = {x_i^+-, y^+-}, Aut orders 48/12",
                 []() -> std::string {
    VGSpace s(catalog_load("pencil3").arrangement, FieldSpec::rationals());
    std::vector<VGElement> gh = s.gheav_bruteforce();
    if (gh.size() != 8) return fmt_count("gHeav", gh.size(), 8);
    std::vector<VGElement> expect;
    for (size_t i = 0; i < 3; ++i) {
      expect.push_back(s.heaviside(i, 1));
      expect.push_back(s.heaviside(i, -1));
    }
    VGElement y = s.constant(Scalar(-1));
    for (size_t i = 0; i < 3; ++i) y = s.add(y, s.heaviside(i, 1));
    expect.push_back(y);
    expect.push_back(s.complement(y));
    std::sort(expect.begin(), expect.end(),
              [&](const VGElement& a, const VGElement& b) {
                return element_less(s.field(), a.values, b.values);
              });
    if (!(gh == expect)) return "gHeav set differs from {x_i^+-, y^+-}";
    AutGroups ag = aut_groups(s);
    if (ag.graph_order != 12) return fmt_count("Aut_graph", ag.graph_order, 12);
    if (ag.filt_order != 48) return fmt_count("Aut_filt", ag.filt_order, 48);
    return "";
  });
}

CheckResult criterion4() {
  return run_one("criterion 4: six generic planes: same lattice, different tope graphs",
                 []() -> std::string {
    CatalogEntry a = catalog_load("generic6a"), b = catalog_load("generic6b");
    ChamberSet csa = ChamberSet::enumerate(a.arrangement);
    ChamberSet csb = ChamberSet::enumerate(b.arrangement);
    if (csa.size() != 32 || csb.size() != 32) return "chamber counts != 32";
    if (!lattice_isomorphic(a.arrangement, b.arrangement))
      return "lattices should be isomorphic";
    Graph ta = tope_graph(csa), tb = tope_graph(csb);
    size_t d6a = 0, d6b = 0;
    for (size_t v = 0; v < 32; ++v) {
      if (ta.degree(v) == 6) ++d6a;
      if (tb.degree(v) == 6) ++d6b;
    }
    if (d6a != 2) return fmt_count("degree-6 vertices in A1", d6a, 2);
    if (d6b != 0) return fmt_count("degree-6 vertices in A2", d6b, 0);
    if (graph_isomorphic(ta, tb)) return "tope graphs wrongly isomorphic";
    return "";
  });
}

CheckResult criterion5() {
  return run_one(
      "criterion 5: generic pipeline (gHeav = Heav, tope graph recovered) on catalog + 50 random",
      []() -> std::string {
    const FieldSpec Q = FieldSpec::rationals();
    for (const auto& nm : {"b2", "generic6a", "generic6b"}) {
      std::string err = generic_pipeline_check(VGSpace(catalog_load(nm).arrangement, Q));
      if (!err.empty()) return std::string(nm) + ": " + err;
    }
    for (uint64_t i = 0; i < 50; ++i) {
      size_t n = 3 + i % 6;  // 3..8
      Arrangement a = random_arrangement(1000 + i, n, 3, true);
      std::string err = generic_pipeline_check(VGSpace(a, Q));
      if (!err.empty())
        return "random seed " + std::to_string(1000 + i) + ": " + err;
    }
    return "";
  });
}

CheckResult criterion6() {
  return run_one(
      "criterion 6: alternating classification equals the brute-force idempotent search",
      []() -> std::string {
    const FieldSpec Q = FieldSpec::rationals();
    for (const auto& nm : catalog_names()) {
      VGSpace s(catalog_load(nm).arrangement, Q);
      if (!(s.gheav_bruteforce() == s.gheav_structural()))
        return std::string(nm) + ": enumerations differ";
    }
    for (uint64_t i = 0; i < 50; ++i) {
      size_t n = 3 + i % 6;
      Arrangement a = random_arrangement(2000 + i, n, 3, false);
      VGSpace s(a, Q);
      if (!(s.gheav_bruteforce() == s.gheav_structural()))
        return "random seed " + std::to_string(2000 + i) + ": enumerations differ";
    }
    return "";
  });
}

CheckResult criterion7() {
  return run_one("criterion 7: presentations vanish and graded dims match Betti (Q, F3)",
                 []() -> std::string {
    for (const auto& nm : catalog_names())
      for (uint32_t p : {0u, 3u}) {
        FieldSpec F = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
        VGSpace s(catalog_load(nm).arrangement, F);
        FilChain fc(s);
        std::string err = dims_equal_betti(s, fc);
        if (!err.empty()) return std::string(nm) + " over " + F.name() + ": " + err;
        PresentationReport rep = verify_presentations(s, fc);
        if (!rep.ok)
          return std::string(nm) + " over " + F.name() + ": " + rep.failures.front();
        if (rep.circuits_checked == 0 && signed_circuits(s.arrangement()).circuits.size() > 0)
          return std::string(nm) + ": no circuit was checked";
      }
    return "";
  });
}

CheckResult criterion8() {
  return run_one("criterion 8: exhaustive F_p square-zero scan equals the gHeav lines",
                 []() -> std::string {
    struct Job {
      std::string name;
      Arrangement arr;
      std::vector<uint32_t> primes;
    };
    std::vector<Job> jobs;
    for (const auto& nm : catalog_names())
      jobs.push_back({nm, catalog_load(nm).arrangement, {3, 5}});
    for (uint64_t i = 0; i < 3; ++i)
      jobs.push_back({"random" + std::to_string(4000 + i),
                      random_arrangement(4000 + i, 7, 3, false), {3}});
    for (const auto& job : jobs) {
      for (uint32_t p : job.primes) {
        FieldSpec F = FieldSpec::prime(p);
        VGSpace s(job.arr, F);
        FilChain fc(s);
        const size_t n = s.n();
        std::vector<la::Vec> lines = sqzero(s, fc);
        // precompute pairwise products of the coordinate classes
        const size_t b2 = fc.graded_dim(2);
        std::vector<std::vector<la::Vec>> pair(n, std::vector<la::Vec>(n));
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) {
            GradedClass xi = fc.graded_class(s.heaviside(i, 1), 1);
            GradedClass xj = fc.graded_class(s.heaviside(j, 1), 1);
            pair[i][j] = fc.graded_mult(xi, xj).coords;
          }
        // membership set: all nonzero multiples of the line representatives
        std::set<std::vector<long>> line_pts;
        auto key = [&](const la::Vec& v) {
          std::vector<long> k;
          for (const auto& x : v) k.push_back(F.normalize(x).get_num().get_si());
          return k;
        };
        for (const auto& rep : lines)
          for (uint32_t lam = 1; lam < p; ++lam) {
            la::Vec v(rep.size());
            for (size_t i = 0; i < rep.size(); ++i)
              v[i] = F.mul(Scalar(lam), rep[i]);
            line_pts.insert(key(v));
          }
        // exhaustive scan of grVG^1 coordinate vectors
        std::vector<uint32_t> digits(n, 0);
        for (;;) {
          bool nonzero = false;
          for (uint32_t d : digits)
            if (d) nonzero = true;
          if (nonzero) {
            la::Vec sq(b2, F.zero());
            for (size_t i = 0; i < n; ++i) {
              if (!digits[i]) continue;
              for (size_t j = 0; j < n; ++j) {
                if (!digits[j]) continue;
                Scalar cc = F.mul(Scalar(digits[i]), Scalar(digits[j]));
                for (size_t t = 0; t < b2; ++t)
                  sq[t] = F.add(sq[t], F.mul(cc, pair[i][j][t]));
              }
            }
            bool zero = true;
            for (const auto& x : sq)
              if (!F.is_zero(x)) zero = false;
            la::Vec v(n);
            for (size_t i = 0; i < n; ++i) v[i] = Scalar(digits[i]);
            bool on_line = line_pts.count(key(v)) > 0;
            if (zero != on_line)
              return job.name + " over F" + std::to_string(p) +
                     ": scan disagrees with the union of lines";
          }
          size_t pos = 0;
          while (pos < n && ++digits[pos] == p) digits[pos++] = 0;
          if (pos == n) break;
        }
      }
    }
    return "";
  });
}

CheckResult criterion9() {
  return run_one("criterion 9: falk pair square-zero counts 11 vs 10", []() -> std::string {
    const FieldSpec Q = FieldSpec::rationals();
    CatalogEntry fa = catalog_load("falk-a"), fb = catalog_load("falk-b");
    VGSpace sa(fa.arrangement, Q), sb(fb.arrangement, Q);
    FilChain fca(sa), fcb(sb);
    auto la_ = sqzero(sa, fca);
    auto lb = sqzero(sb, fcb);
    if (la_.size() != 11) return fmt_count("falk-a lines", la_.size(), 11);
    if (lb.size() != 10) return fmt_count("falk-b lines", lb.size(), 10);
    if (betti(fa.arrangement) != betti(fb.arrangement))
      return "falk Betti vectors should agree";
    // graded algebras verdict: same module data, different line counts
    if (la_.size() == lb.size()) return "verdict would not distinguish the pair";
    // reference lists: falk-a matches exactly, falk-b emits the note
    CatalogValidation va = catalog_validate("falk-a");
    if (!va.ok) return "falk-a: " + va.failures.front();
    if (!va.notes.empty()) return "falk-a should match its reference list exactly";
    CatalogValidation vb = catalog_validate("falk-b");
    if (!vb.ok) return "falk-b: " + vb.failures.front();
    if (vb.notes.empty()) return "falk-b should emit the reference-list discrepancy note";
    return "";
  });
}

CheckResult criterion10() {
  return run_one(
      "criterion 10: circuit recovery under all sign rescalings (generic entries)",
      []() -> std::string {
    const FieldSpec Q = FieldSpec::rationals();
    for (const auto& nm : {"b2", "generic6a", "generic6b"}) {
      CatalogEntry e = catalog_load(nm);
      VGSpace s(e.arrangement, Q);
      FilChain fc(s);
      const size_t n = s.n();
      for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Scalar> mu(n, Scalar(1));
        for (size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) mu[i] = Scalar(-1);
        RecoverVerdict v = recover_and_compare(s, fc, mu);
        if (!v.good)
          return std::string(nm) + " mask " + std::to_string(mask) + ": not good";
        if (!v.equivalent)
          return std::string(nm) + " mask " + std::to_string(mask) + ": not equivalent";
      }
    }
    return "";
  });
}

CheckResult criterion11() {
  return run_one("criterion 11: conjecture harnesses report zero counterexamples",
                 []() -> std::string {
    const FieldSpec Q = FieldSpec::rationals();
    // filtered, exhaustive: pencil3 and a3
    for (const auto& nm : {"pencil3", "a3"}) {
      VGSpace s(catalog_load(nm).arrangement, Q);
      FilChain fc(s);
      HarnessReport r = conjecture_harness_filtered(s, HarnessMode::exhaustive());
      if (!r.counterexamples.empty())
        return std::string(nm) + ": " + std::to_string(r.counterexamples.size()) +
               " filtered counterexamples (research finding artifact produced)";
      if (r.examined == 0 || r.basis_valid == 0)
        return std::string(nm) + ": harness examined nothing";
      if (r.necessary_pass != r.matching)
        return std::string(nm) + ": classification does not cover every choice";
      // there are exactly 2^n basis-valid pure-Heaviside choices; a3 must
      // also admit a passing choice that uses alternating functions
      if (std::string(nm) == "a3" && r.matching <= (1u << s.n()))
        return "a3: no non-Heaviside choice passed";
      // determinism: a second run yields the same report
      HarnessReport r2 = conjecture_harness_filtered(s, HarnessMode::exhaustive());
      if (r.to_json() != r2.to_json()) return std::string(nm) + ": report not deterministic";
    }
    // graded, exhaustive over signs: the generic entries
    for (const auto& nm : {"b2", "generic6a", "generic6b"}) {
      VGSpace s(catalog_load(nm).arrangement, Q);
      FilChain fc(s);
      HarnessReport r = conjecture_harness_graded(s, fc, HarnessMode::exhaustive());
      if (!r.counterexamples.empty())
        return std::string(nm) + ": graded counterexamples present";
      if (r.basis_valid != r.matching + r.not_good)
        return std::string(nm) + ": graded classification incomplete";
      if (r.matching == 0) return std::string(nm) + ": no good choice recovered";
    }
    return "";
  });
}

CheckResult criterion12() {
  return run_one(
      "criterion 12: Zaslavsky, filtration dimension identity and graph metric everywhere",
      []() -> std::string {
    const FieldSpec Q = FieldSpec::rationals();
    for (const auto& nm : catalog_names()) {
      std::string err = cross_module_check(catalog_load(nm).arrangement, Q);
      if (!err.empty()) return std::string(nm) + ": " + err;
    }
    for (uint64_t i = 0; i < 10; ++i) {
      Arrangement a = random_arrangement(3000 + i, 3 + i % 5, 3, false);
      std::string err = cross_module_check(a, Q);
      if (!err.empty()) return "random seed " + std::to_string(3000 + i) + ": " + err;
    }
    return "";
  });
}

}  // namespace

std::vector<std::string> verify_module_names() {
  return {"exactla", "arrangement", "omatroid", "vgalgebra", "reconstruct", "catalog"};
}

std::vector<CheckResult> run_module_checks(const std::string& module) {
  if (module == "exactla") return checks_exactla();
  if (module == "arrangement") return checks_arrangement();
  if (module == "omatroid") return checks_omatroid();
  if (module == "vgalgebra") return checks_vgalgebra();
  if (module == "reconstruct") return checks_reconstruct();
  if (module == "catalog") return checks_catalog();
  throw UsageError("unknown module '" + module + "'");
}

std::vector<CheckResult> run_acceptance() {
  return {criterion1(), criterion2(), criterion3(), criterion4(),
          criterion5(), criterion6(), criterion7(), criterion8(),
          criterion9(), criterion10(), criterion11(), criterion12()};
}

}  // namespace vg
