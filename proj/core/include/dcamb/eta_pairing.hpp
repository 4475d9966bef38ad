#pragma once

#include <optional>

#include "dcamb/cyclic_sorting.hpp"

namespace dcamb {

/// Case A: |J(v)| <= n-2, all n labels defined. Case B(i): J(v) = S \ {s_i},
/// label C^{s_i} undefined.
struct VertexClass {
  std::optional<int> missing;  // i for case B, empty for case A

  [[nodiscard]] bool is_case_b() const { return missing.has_value(); }
  static VertexClass case_a() { return {}; }
  static VertexClass case_b(int i) { return {i}; }
  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

VertexClass classify(const Orientation& omega, const AffinePermutation& v);

/// c[i, j]: s_i s_{i+1} ... s_j for i <= j, s_i s_{i-1} ... s_j for i >= j,
/// indices mod n. Throws if the range would repeat a letter.
CoxeterWord interval_word(int n, int i, int j);

/// Applies the diagram rotation s_i -> s_{i+1} k times (k may be negative).
AffinePermutation rotate(const AffinePermutation& w, int k);
Root rotate(const Root& beta, int k);

/// Factorization v = c[i+1, i+n-1] * u for a case-B(i) vertex.
struct EtaFactorization {
  int i = 0;
  AffinePermutation u;        // c[i+1, i+n-2]-sortable
  AffinePermutation u_prime;  // antipode of u, c[i+n-2, i+1]-sortable
  AffinePermutation image;    // eta(v)
};

EtaFactorization eta_factorization(const Orientation& omega, const AffinePermutation& v);

/// The gluing map U_Omega(s_i) -> U_{-Omega}(s_{i+1}). Requires the forward
/// orientation and a case-B vertex.
AffinePermutation eta(const Orientation& omega, const AffinePermutation& v);

struct FunnyRoots {
  Root beta;   // C^{s_{i-1}} label of v, negative
  Root gamma;  // negated C^{s_{i+2}} label of eta(v), positive
  int g = 0;   // beta = -(alpha_{i+1} + ... + alpha_g), g taken in [i+1, i+n-1]
};

FunnyRoots funny_roots(const Orientation& omega, const AffinePermutation& v);

}  // namespace dcamb
