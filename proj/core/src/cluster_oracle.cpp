#include "dcamb/cluster_oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dcamb/errors.hpp"
#include "dcamb/fan_geometry.hpp"
#include "dcamb/framework_verify.hpp"

namespace dcamb {
namespace {

std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }

int column_sign(const IntMatrix& m, int k) {
  bool any_pos = false;
  bool any_neg = false;
  for (int r = 0; r < m.rows(); ++r) {
    any_pos |= m(r, k) > 0;
    any_neg |= m(r, k) < 0;
  }
  if (any_pos == any_neg) return 0;
  return any_pos ? 1 : -1;
}

Seed permute(const Seed& s, const std::vector<int>& perm) {
  const int n = s.rank();
  Seed out{IntMatrix(n, n), IntMatrix(n, n), IntMatrix(n, n)};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out.B(a, b) = s.B(perm[a], perm[b]);
    for (int r = 0; r < n; ++r) {
      out.C(r, a) = s.C(r, perm[a]);
      out.G(r, a) = s.G(r, perm[a]);
    }
  }
  return out;
}

}  // namespace

Seed initial_seed(int n) {
  if (n < 3) throw std::invalid_argument("rank must be at least 3");
  const OmegaForm omega(n);
  Seed s{IntMatrix(n, n), IntMatrix::identity(n), IntMatrix::identity(n)};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) s.B(i - 1, j - 1) = omega.b(i, j);
  }
  return s;
}

Seed mutate(const Seed& s, int k) {
  const int n = s.rank();
  if (k < 0 || k >= n) throw std::invalid_argument("mutation direction out of range");
  const int eps = column_sign(s.C, k);
  if (eps == 0) throw InvariantViolation("c-vector " + std::to_string(k) + " is not sign-coherent");

  Seed out = s;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out.B(i, j) = -s.B(i, j);
      } else {
        out.B(i, j) = s.B(i, j) + pos(s.B(i, k)) * pos(s.B(k, j)) - pos(-s.B(i, k)) * pos(-s.B(k, j));
      }
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      out.C(r, j) = j == k ? -s.C(r, k) : s.C(r, j) + pos(eps * s.B(k, j)) * s.C(r, k);
    }
  }
  // g'_k = -g_k + sum_i [-eps b_ik]_+ g_i; the coefficient term vanishes
  // because c_k is sign-coherent.
  for (int r = 0; r < n; ++r) {
    std::int64_t acc = -s.G(r, k);
    for (int i = 0; i < n; ++i) acc += pos(-eps * s.B(i, k)) * s.G(r, i);
    out.G(r, k) = acc;
  }
  if (out.G.transpose() * out.C != IntMatrix::identity(n)) {
    throw InvariantViolation("g-vector recurrence disagrees with the dual basis of the c-vectors");
  }
  return out;
}

Seed canonical(const Seed& s) {
  const int n = s.rank();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Root> cols;
  for (int k = 0; k < n; ++k) cols.push_back(s.C.column(k));
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return cols[a] < cols[b]; });
  return permute(s, perm);
}

SeedKey seed_key(const Seed& s) {
  const Seed c = canonical(s);
  const int n = s.rank();
  SeedKey key;
  key.data.reserve(static_cast<std::size_t>(3) * n * n);
  for (const IntMatrix* m : {&c.B, &c.C, &c.G}) {
    for (int r = 0; r < n; ++r) {
      for (int col = 0; col < n; ++col) key.data.push_back((*m)(r, col));
    }
  }
  return key;
}

bool seed_invariants_hold(const Seed& s, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = s.rank();
  for (int k = 0; k < n; ++k) {
    if (column_sign(s.C, k) == 0) return fail("c-vector " + std::to_string(k) + " not sign-coherent");
    for (int j = 0; j < n; ++j) {
      if (s.B(k, j) != -s.B(j, k)) return fail("B is not skew-symmetric");
    }
  }
  const auto dc = determinant(s.C);
  const auto dg = determinant(s.G);
  if (dc != 1 && dc != -1) return fail("det C = " + std::to_string(dc));
  if (dg != 1 && dg != -1) return fail("det G = " + std::to_string(dg));
  if (s.G.transpose() * s.C != IntMatrix::identity(n)) return fail("G^T C != I");
  return true;
}

ExchangeGraph exchange_graph(int n, std::size_t max_seeds) {
  ExchangeGraph g;
  g.n = n;
  const Seed start = canonical(initial_seed(n));
  g.seeds.push_back(start);
  g.index.emplace(seed_key(start), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    std::vector<std::size_t> nbrs(n);
    for (int k = 0; k < n; ++k) {
      const Seed next = canonical(mutate(g.seeds[cur], k));
      const SeedKey key = seed_key(next);
      auto it = g.index.find(key);
      if (it == g.index.end()) {
        if (g.seeds.size() >= max_seeds) {
          throw ResourceExhausted("exchange graph exceeds " + std::to_string(max_seeds) + " seeds");
        }
        it = g.index.emplace(key, g.seeds.size()).first;
        g.seeds.push_back(next);
        queue.push_back(it->second);
      }
      nbrs[k] = it->second;
    }
    if (g.neighbor.size() <= cur) g.neighbor.resize(cur + 1);
    g.neighbor[cur] = std::move(nbrs);
  }
  return g;
}

std::string CompareReport::summary() const {
  std::ostringstream os;
  os << framework_vertices << " = " << oracle_seeds << ", ";
  if (isomorphic) {
    os << "isomorphism verified, c/g/B all match (" << matched << " seeds matched)";
  } else {
    os << "MISMATCH after " << matched << " matched: " << mismatch;
  }
  return os.str();
}

CompareReport compare(const LabeledQuasiGraph& fw, const ExchangeGraph& oracle) {
  CompareReport rep;
  rep.framework_vertices = fw.vertices.size();
  rep.oracle_seeds = oracle.seeds.size();
  auto mismatch = [&](std::size_t v, const std::string& what) {
    rep.isomorphic = false;
    rep.mismatch_vertex = v;
    rep.mismatch = what + " at " + (fw.vertices[v].name.empty() ? fw.vertices[v].key : fw.vertices[v].name);
    return rep;
  };
  if (!fw.base) {
    rep.mismatch = "framework has no base vertex";
    return rep;
  }
  const int n = fw.n;
  const OmegaForm omega(n);
  const auto inc = fw.incidence();
  for (std::size_t v = 0; v < inc.size(); ++v) {
    if (static_cast<int>(inc[v].size()) != n) return mismatch(v, "vertex degree differs from rank");
    for (const auto& p : inc[v]) {
      if (!p.full || !p.label) return mismatch(v, "framework is not complete");
    }
  }

  // Reorder a seed so that direction j matches incident pair j at vertex v.
  auto align = [&](const Seed& s, std::size_t v) -> std::optional<Seed> {
    std::vector<int> perm(n, -1);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (s.C.column(k) == *inc[v][j].label) perm[j] = k;
      }
      if (perm[j] < 0) return std::nullopt;
    }
    return permute(s, perm);
  };

  std::vector<std::optional<Seed>> seed_at(fw.vertices.size());
  std::map<SeedKey, std::size_t> owner;
  const auto start = align(initial_seed(n), *fw.base);
  if (!start) return mismatch(*fw.base, "base labels are not the initial c-vectors");
  seed_at[*fw.base] = start;
  std::deque<std::size_t> queue{*fw.base};
  std::vector<bool> checked(fw.vertices.size(), false);

  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (checked[v]) continue;
    checked[v] = true;
    const Seed& s = *seed_at[v];
    std::vector<Root> labels;
    for (const auto& p : inc[v]) labels.push_back(*p.label);

    for (int j = 0; j < n; ++j) {
      if (s.C.column(j) != labels[j]) {
        rep.c_match = false;
        return mismatch(v, "c-vector differs from label");
      }
      for (int k = 0; k < n; ++k) {
        if (s.B(j, k) != omega(labels[j], labels[k])) {
          rep.b_match = false;
          return mismatch(v, "B entry differs from omega of labels");
        }
      }
    }
    const auto rays = dual_basis(labels);
    for (int j = 0; j < n; ++j) {
      for (int r = 0; r < n; ++r) {
        if (Rational(s.G(r, j)) != rays[j][r]) {
          rep.g_match = false;
          return mismatch(v, "g-vector differs from dual-basis ray");
        }
      }
    }
    const SeedKey key = seed_key(s);
    if (!oracle.index.contains(key)) return mismatch(v, "seed not present in the oracle exchange graph");
    if (auto [it, fresh] = owner.emplace(key, v); !fresh && it->second != v) {
      return mismatch(v, "two framework vertices map to the same seed");
    }
    ++rep.matched;

    for (int j = 0; j < n; ++j) {
      const std::size_t w = *inc[v][j].far;
      const Seed mutated = mutate(s, j);
      const auto aligned = align(mutated, w);
      if (!aligned) return mismatch(w, "mutated c-vectors differ from the neighbor's labels");
      if (seed_at[w]) {
        if (seed_key(*seed_at[w]) != seed_key(*aligned)) return mismatch(w, "neighbor reached with two different seeds");
      } else {
        seed_at[w] = aligned;
        queue.push_back(w);
      }
    }
  }
  if (rep.matched != fw.vertices.size()) {
    rep.mismatch = "framework is disconnected";
    return rep;
  }
  if (rep.matched != oracle.seeds.size()) {
    rep.mismatch = "vertex count differs from seed count";
    return rep;
  }
  rep.isomorphic = true;
  return rep;
}

}  // namespace dcamb
