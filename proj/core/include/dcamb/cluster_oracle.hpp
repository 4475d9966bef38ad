#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcamb/linalg.hpp"
#include "dcamb/quasi_graph.hpp"

namespace dcamb {

/// Principal-coefficients seed: exchange matrix B, c-vectors (columns of C)
/// and g-vectors (columns of G). Column j of C and G belong to direction j.
struct Seed {
  IntMatrix B;
  IntMatrix C;
  IntMatrix G;

  [[nodiscard]] int rank() const { return B.rows(); }
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Seeds compared up to a simultaneous permutation of directions.
struct SeedKey {
  std::vector<std::int64_t> data;
  friend auto operator<=>(const SeedKey&, const SeedKey&) = default;
};

/// B of the oriented n-cycle (b_{i,i+1} = 1), C = G = I.
Seed initial_seed(int n);

/// Mutation in direction k (0-based). B and C follow extended matrix
/// mutation; G follows the principal-coefficients g-vector recurrence with
/// epsilon the sign of c_k, and is cross-checked against G^T C = I. Throws
/// InvariantViolation if c_k is not sign-coherent or the two G routes disagree.
Seed mutate(const Seed& s, int k);

/// Reorders directions so C's columns are lexicographically increasing.
Seed canonical(const Seed& s);
SeedKey seed_key(const Seed& s);

/// Checks det C = +-1, det G = +-1, G^T C = I, and column sign-coherence.
bool seed_invariants_hold(const Seed& s, std::string* why = nullptr);

struct ExchangeGraph {
  int n = 0;
  std::vector<Seed> seeds;                         // canonical direction order
  std::vector<std::vector<std::size_t>> neighbor;  // neighbor[s][k] = mutate(seeds[s], k)
  std::map<SeedKey, std::size_t> index;
};

/// BFS closure of initial_seed(n) under mutation. Throws ResourceExhausted
/// past max_seeds.
ExchangeGraph exchange_graph(int n, std::size_t max_seeds = 1'000'000);

struct CompareReport {
  bool isomorphic = false;
  std::size_t framework_vertices = 0;
  std::size_t oracle_seeds = 0;
  std::size_t matched = 0;
  bool b_match = true;
  bool c_match = true;
  bool g_match = true;
  std::optional<std::size_t> mismatch_vertex;
  std::string mismatch;

  [[nodiscard]] std::string summary() const;
};

/// Walks the framework from its base vertex alongside seed mutation and
/// checks B = omega(labels), C = labels and G = dual basis at every vertex.
CompareReport compare(const LabeledQuasiGraph& framework, const ExchangeGraph& oracle);

}  // namespace dcamb
