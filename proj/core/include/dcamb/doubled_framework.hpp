#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "dcamb/cyclic_sorting.hpp"
#include "dcamb/eta_pairing.hpp"
#include "dcamb/framework_verify.hpp"
#include "dcamb/quasi_graph.hpp"

namespace dcamb {

struct GluePair {
  AffinePermutation v;        // Omega-sortable, case B(i)
  AffinePermutation v_prime;  // (-Omega)-sortable, case B(i+1), = eta(v)
  Root beta;
  Root gamma;
};

/// DCamb_Omega together with the data it was assembled from.
struct DoubledFramework {
  LabeledQuasiGraph graph;
  std::shared_ptr<const OmegaCambrian> omega_side;
  std::shared_ptr<const OmegaCambrian> neg_side;
  std::vector<GluePair> glue;
  /// Vertex index of each Omega-sortable / (-Omega)-sortable element.
  std::vector<std::size_t> omega_vertex;
  std::vector<std::size_t> neg_vertex;
};

/// Glues Camb_Omega and -Camb_{-Omega} along eta. Throws InvariantViolation
/// if the result is not n-regular with n distinct labels per vertex.
DoubledFramework build_doubled(int n);
LabeledQuasiGraph build(int n);

/// Camb_Omega for one orientation on its own, padded with half-edges. Vertices
/// short of labels receive unlabeled half-edges. Labels are negated when
/// `negate` is set, giving -Camb_{-Omega}.
LabeledQuasiGraph build_cambrian_only(const Orientation& omega, bool negate = false);

/// DC_Omega(v) recomputed from the vertex's origin (sorted).
std::vector<Root> dc_labels(const DoubledFramework& fw, std::size_t vertex);

/// The matching mu_e between incident pairs at `vertex` and at the far end of
/// `edge`: pairs (edge id at vertex, edge id at far vertex). Throws
/// InvariantViolation if some transition image is missing.
std::vector<std::pair<std::size_t, std::size_t>> mu_edge(const LabeledQuasiGraph& g, std::size_t vertex,
                                                         std::size_t edge);

/// Sorting-word name of an element for its orientation, e.g. "s1.s2.s1".
std::string sorting_name(const Orientation& omega, const AffinePermutation& w);

}  // namespace dcamb
