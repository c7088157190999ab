#include "vg/omatroid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vg {

namespace {

SignVector negate(const SignVector& sv) {
  SignVector out = sv;
  for (auto& x : out) x = static_cast<int8_t>(-x);
  return out;
}

SignVector canonical_sign(const SignVector& sv) {
  for (int8_t x : sv) {
    if (x > 0) return sv;
    if (x < 0) return negate(sv);
  }
  return sv;
}

uint32_t support_mask(const SignVector& sv) {
  uint32_t m = 0;
  for (size_t i = 0; i < sv.size(); ++i)
    if (sv[i] != 0) m |= (1u << i);
  return m;
}

void sort_circuits(std::vector<SignVector>& cs) {
  std::sort(cs.begin(), cs.end(), sign_vector_less);
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

}  // namespace

SignedCircuitSet make_circuit_set(size_t n, std::vector<SignVector> circuits) {
  std::vector<SignVector> all;
  for (auto& c : circuits) {
    if (c.size() != n) throw UsageError("circuit length mismatch");
    all.push_back(c);
    all.push_back(negate(c));
  }
  sort_circuits(all);
  return SignedCircuitSet{n, std::move(all)};
}

SignedCircuitSet signed_circuits(const Arrangement& a) {
  const FieldSpec Q = FieldSpec::rationals();
  const size_t n = a.n();
  std::vector<uint32_t> found_supports;
  std::vector<SignVector> circuits;

  // subsets in size-lex order
  for (size_t k = 2; k <= std::min(n, a.ell() + 1); ++k) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      uint32_t mask = 0;
      for (size_t i : idx) mask |= (1u << i);
      bool super = false;
      for (uint32_t s : found_supports)
        if ((s & mask) == s) {
          super = true;
          break;
        }
      if (!super) {
        // columns alpha_{idx}: circuit iff rank = k-1 (minimality is implied
        // by having skipped supersets of smaller circuits)
        la::Matrix m(Q, a.ell(), k);
        for (size_t c = 0; c < k; ++c)
          for (size_t r = 0; r < a.ell(); ++r) m.at(r, c) = a.normal(idx[c])[r];
        la::Subspace ker = la::kernel(m);
        if (ker.dim() == 1) {
          const la::Vec& lam = ker.basis[0];
          SignVector sv(n, 0);
          bool full_support = true;
          for (size_t c = 0; c < k; ++c) {
            if (lam[c] == 0) full_support = false;
            sv[idx[c]] = lam[c] > 0 ? 1 : (lam[c] < 0 ? -1 : 0);
          }
          // a kernel vector with a zero entry means a proper subset is
          // dependent; that subset's circuit is found at its own size
          if (full_support) {
            found_supports.push_back(mask);
            circuits.push_back(sv);
          }
        }
      }
      // next combination
      size_t i = k;
      while (i-- > 0) {
        if (idx[i] != i + n - k) {
          ++idx[i];
          for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
  }
  return make_circuit_set(n, std::move(circuits));
}

namespace {

// fingerprint of an index: multiset of circuit-support sizes through it
std::vector<size_t> index_fingerprint(const SignedCircuitSet& c, size_t i) {
  std::vector<size_t> sizes;
  for (const auto& sv : c.circuits) {
    if (sv[i] == 0) continue;
    size_t s = 0;
    for (int8_t x : sv)
      if (x != 0) ++s;
    sizes.push_back(s);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

struct EquivSearch {
  const SignedCircuitSet& c1;
  const SignedCircuitSet& c2;
  size_t n;
  std::vector<std::vector<size_t>> fp1, fp2;
  std::set<uint32_t> supports2;                       // canonical supports in c2
  std::map<uint32_t, SignVector> canon2;              // support -> canonical circuit
  std::vector<size_t> perm;                           // c1 index -> c2 index
  std::vector<bool> used;
  std::optional<CircuitEquivalence> result;

  EquivSearch(const SignedCircuitSet& a, const SignedCircuitSet& b)
      : c1(a), c2(b), n(a.n), perm(a.n, SIZE_MAX), used(a.n, false) {
    for (size_t i = 0; i < n; ++i) {
      fp1.push_back(index_fingerprint(c1, i));
      fp2.push_back(index_fingerprint(c2, i));
    }
    for (const auto& sv : c2.circuits) {
      uint32_t m = support_mask(sv);
      supports2.insert(m);
      canon2[m] = canonical_sign(sv);
    }
  }

  // After the full permutation is fixed, solve for a reorientation by parity
  // propagation over the permuted circuits.
  std::optional<std::vector<int>> solve_reorientation() const {
    std::vector<SignVector> mapped;
    for (const auto& sv : c1.circuits) {
      SignVector out(n, 0);
      for (size_t i = 0; i < n; ++i) out[perm[i]] = sv[i];
      mapped.push_back(std::move(out));
    }
    // need eps with { eps*m : m in mapped } == c2 as sets; per support the
    // target is fixed up to global sign, giving parity constraints.
    std::vector<int> eps(n, 0);
    // union-find with parity
    std::vector<size_t> parent(n);
    std::vector<int> rel(n, 1);  // sign relative to parent
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::pair<size_t, int>(size_t)> find = [&](size_t x) {
      if (parent[x] == x) return std::make_pair(x, 1);
      auto [r, s] = find(parent[x]);
      parent[x] = r;
      rel[x] *= s;
      return std::make_pair(r, rel[x]);
    };
    auto unite = [&](size_t a, size_t b, int s) -> bool {
      auto [ra, sa] = find(a);
      auto [rb, sb] = find(b);
      if (ra == rb) return sa * sb == s;
      parent[ra] = rb;
      rel[ra] = sa * sb * s;
      return true;
    };
    for (const auto& m : mapped) {
      uint32_t mask = support_mask(m);
      auto it = canon2.find(mask);
      if (it == canon2.end()) return std::nullopt;
      const SignVector& target = it->second;
      // eps_j * m_j = g * target_j for a per-circuit global g in {+-1}:
      // relative constraints between support indices.
      std::vector<size_t> sup;
      for (size_t j = 0; j < n; ++j)
        if (m[j] != 0) sup.push_back(j);
      for (size_t t = 1; t < sup.size(); ++t) {
        int s = (m[sup[0]] * target[sup[0]]) * (m[sup[t]] * target[sup[t]]);
        if (!unite(sup[0], sup[t], s)) return std::nullopt;
      }
    }
    for (size_t i = 0; i < n; ++i) {
      auto [r, s] = find(i);
      (void)r;
      eps[i] = s;  // roots get +1; any consistent choice suffices
    }
    // verify set equality
    std::vector<SignVector> transformed;
    for (const auto& m : mapped) {
      SignVector out = m;
      for (size_t j = 0; j < n; ++j) out[j] = static_cast<int8_t>(out[j] * eps[j]);
      transformed.push_back(std::move(out));
    }
    sort_circuits(transformed);
    if (transformed != c2.circuits) return std::nullopt;
    return eps;
  }

  bool consistent_prefix(size_t depth) const {
    // any circuit of c1 fully inside the mapped prefix must land on a support
    // of c2
    for (const auto& sv : c1.circuits) {
      bool inside = true;
      uint32_t mask = 0;
      for (size_t i = 0; i < n; ++i) {
        if (sv[i] == 0) continue;
        if (perm[i] == SIZE_MAX) {
          inside = false;
          break;
        }
        mask |= (1u << perm[i]);
      }
      if (inside && !supports2.count(mask) && support_mask(sv) != 0) return false;
    }
    (void)depth;
    return true;
  }

  bool dfs(size_t i) {
    if (i == n) {
      auto eps = solve_reorientation();
      if (!eps) return false;
      result = CircuitEquivalence{perm, *eps};
      return true;
    }
    for (size_t j = 0; j < n; ++j) {
      if (used[j] || fp1[i] != fp2[j]) continue;
      perm[i] = j;
      used[j] = true;
      if (consistent_prefix(i + 1) && dfs(i + 1)) return true;
      perm[i] = SIZE_MAX;
      used[j] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<CircuitEquivalence> circuits_equivalent(
    const SignedCircuitSet& c1, const SignedCircuitSet& c2) {
  if (c1.n != c2.n) throw UsageError("ground sets differ");
  if (c1.circuits.size() != c2.circuits.size()) return std::nullopt;
  EquivSearch s(c1, c2);
  s.dfs(0);
  return s.result;
}

std::optional<std::vector<int>> reorientation_only(const SignedCircuitSet& c1,
                                                   const SignedCircuitSet& c2) {
  if (c1.n != c2.n) throw UsageError("ground sets differ");
  if (c1.circuits.size() != c2.circuits.size()) return std::nullopt;
  EquivSearch s(c1, c2);
  for (size_t i = 0; i < c1.n; ++i) s.perm[i] = i;
  return s.solve_reorientation();
}

SignedCircuitSet reorient(const SignedCircuitSet& c, const std::vector<int>& eps) {
  if (eps.size() != c.n) throw UsageError("reorientation length mismatch");
  std::vector<SignVector> out;
  for (const auto& sv : c.circuits) {
    SignVector t = sv;
    for (size_t i = 0; i < c.n; ++i) t[i] = static_cast<int8_t>(t[i] * eps[i]);
    out.push_back(std::move(t));
  }
  sort_circuits(out);
  return SignedCircuitSet{c.n, std::move(out)};
}

namespace {

struct LatticeIsoSearch {
  size_t n;
  std::set<std::pair<size_t, uint32_t>> flats1, flats2;  // (rank, mask)
  std::vector<std::vector<size_t>> fp1, fp2;  // per index: sorted (rank,size) codes
  std::vector<size_t> perm;
  std::vector<bool> used;

  static std::vector<std::vector<size_t>> fingerprints(
      const std::set<std::pair<size_t, uint32_t>>& flats, size_t n) {
    std::vector<std::vector<size_t>> fp(n);
    for (const auto& [rank, mask] : flats) {
      size_t size = static_cast<size_t>(__builtin_popcount(mask));
      for (size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) fp[i].push_back(rank * 64 + size);
    }
    for (auto& v : fp) std::sort(v.begin(), v.end());
    return fp;
  }

  bool prefix_ok(size_t depth) const {
    // flats fully inside the mapped prefix must map onto flats of c2
    for (const auto& [rank, mask] : flats1) {
      uint32_t img = 0;
      bool inside = true;
      for (size_t i = 0; i < n && inside; ++i) {
        if (!(mask & (1u << i))) continue;
        if (i >= depth) inside = false;
        else img |= (1u << perm[i]);
      }
      if (inside && !flats2.count({rank, img})) return false;
    }
    return true;
  }

  bool dfs(size_t i) {
    if (i == n) return prefix_ok(n);
    for (size_t j = 0; j < n; ++j) {
      if (used[j] || fp1[i] != fp2[j]) continue;
      perm[i] = j;
      used[j] = true;
      if (prefix_ok(i + 1) && dfs(i + 1)) return true;
      used[j] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<size_t>> lattice_isomorphic(const Arrangement& a1,
                                                      const Arrangement& a2) {
  if (a1.n() != a2.n()) return std::nullopt;
  Lattice l1 = lattice(a1), l2 = lattice(a2);
  if (l1.flats.size() != l2.flats.size()) return std::nullopt;
  LatticeIsoSearch s;
  s.n = a1.n();
  for (const auto& f : l1.flats) s.flats1.insert({f.rank, f.mask});
  for (const auto& f : l2.flats) s.flats2.insert({f.rank, f.mask});
  s.fp1 = LatticeIsoSearch::fingerprints(s.flats1, s.n);
  s.fp2 = LatticeIsoSearch::fingerprints(s.flats2, s.n);
  s.perm.assign(s.n, SIZE_MAX);
  s.used.assign(s.n, false);
  if (!s.dfs(0)) return std::nullopt;
  return s.perm;
}

}  // namespace vg
