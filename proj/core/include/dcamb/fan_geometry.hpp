#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcamb/doubled_framework.hpp"
#include "dcamb/linalg.hpp"

namespace dcamb {

/// A point of V* in coordinates dual to the simple roots: x_i = <x, alpha_i>.
using RationalPoint = RationalVector;

/// Simplicial cone {x : <x, beta> >= 0 for all labels}; rays[e] is dual to
/// labels[e].
struct ConeDescription {
  std::vector<Root> labels;
  std::vector<RationalVector> rays;
};

Rational pairing(const RationalPoint& x, const Root& beta);

/// Rows of the inverse of the matrix whose columns are the labels. Throws
/// InvariantViolation when the labels are linearly dependent.
std::vector<RationalVector> dual_basis(const std::vector<Root>& labels);
ConeDescription make_cone(const std::vector<Root>& labels);

bool cone_contains(const std::vector<Root>& labels, const RationalPoint& x, bool strict);
bool cone_contains(const ConeDescription& cone, const RationalPoint& x, bool strict);

/// The interior point w(rho) of the chamber wD, rho = (1, ..., 1).
RationalPoint chamber_point(const AffinePermutation& w);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray.
std::vector<std::int64_t> primitive_ray(const RationalVector& r);

struct SimplicialReport {
  bool passed = true;
  std::vector<std::int64_t> determinants;  // per vertex, 0 if fewer than n labels
  std::optional<std::size_t> witness;
};

SimplicialReport check_simplicial(const LabeledQuasiGraph& g);

struct FanReport {
  std::size_t facets_checked = 0;
  std::vector<std::string> facet_failures;
  std::size_t samples = 0;
  std::size_t resampled = 0;
  std::size_t uncovered = 0;
  std::size_t multiply_covered = 0;
  std::vector<RationalPoint> uncovered_examples;

  [[nodiscard]] bool facets_paired() const { return facet_failures.empty(); }
  [[nodiscard]] bool passed() const { return facets_paired() && uncovered == 0 && multiply_covered == 0; }
};

/// Facet pairing across every full edge, then `samples` seeded generic
/// rational points located among the cones.
FanReport check_fan(const LabeledQuasiGraph& g, std::size_t samples, std::uint64_t seed);

struct BoundaryTrace {
  bool equal = false;
  std::vector<Root> omega_classes;  // C_Omega(v) mod delta
  std::vector<Root> neg_classes;    // -C_{-Omega}(eta(v)) mod delta
};

/// Compares the two halves of a glued vertex on the hyperplane delta-perp.
/// Throws std::invalid_argument for an unglued vertex.
BoundaryTrace boundary_trace(const DoubledFramework& fw, std::size_t vertex);

std::string to_string(const Rational& q);

}  // namespace dcamb
