#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "dcamb/cluster_oracle.hpp"
#include "dcamb/fan_geometry.hpp"
#include "dcamb/framework_verify.hpp"
#include "dcamb/quasi_graph.hpp"

namespace dcamb {

/// Lossless document: vertices with labels (integers) and rays (num/den
/// pairs), full edges with both labels, half-edges, and the base vertex.
/// Key order and array order are fixed, so equal graphs serialize to equal
/// bytes.
nlohmann::json to_json(const LabeledQuasiGraph& g);

/// Inverse of to_json. Rays are derived data and are ignored. Throws
/// std::invalid_argument on structural problems (bad indices, wrong root
/// lengths); label values are taken as given so that corrupted files can be
/// handed to the verifier.
LabeledQuasiGraph graph_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const AxiomReport& report, const LabeledQuasiGraph& g);
nlohmann::json to_json(const ExchangeGraph& oracle);

/// Undirected DOT graph; nodes named by sorting words, edges annotated with
/// the two labels.
std::string to_dot(const LabeledQuasiGraph& g);

/// Two affine slices <x, delta> = 1 and <x, delta> = -1 of the fan, one cone
/// per vertex. Rank 3 only; throws std::invalid_argument otherwise.
std::string to_svg(const LabeledQuasiGraph& g);

}  // namespace dcamb
