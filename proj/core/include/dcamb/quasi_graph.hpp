#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dcamb/affine_permutation.hpp"

namespace dcamb {

enum class VertexSide { Omega, NegOmega, Glued };

std::string to_string(VertexSide side);

struct FrameworkVertex {
  std::string key;
  VertexSide side = VertexSide::Omega;
  std::optional<AffinePermutation> omega_element;
  std::optional<AffinePermutation> neg_element;
  /// Display name built from sorting words, e.g. "s1.s2" or "s1.s2=-s3.s2.s3".
  std::string name;
};

struct FullEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Root label_u;
  Root label_v;
};

/// A dangling edge. The label is empty when the construction had no root to
/// put there (the Cambrian graph of a cyclic orientation, taken alone).
struct HalfEdge {
  std::size_t vertex = 0;
  std::optional<Root> label;
};

/// One incident pair (v, e).
struct IncidentPair {
  std::size_t vertex = 0;
  bool full = true;
  std::size_t edge = 0;  // index into edges or half_edges
  std::optional<Root> label;
  std::optional<std::size_t> far;  // other endpoint of a full edge
};

/// An n-regular quasi-graph with root labels on incident pairs.
struct LabeledQuasiGraph {
  int n = 0;
  std::vector<FrameworkVertex> vertices;
  std::vector<FullEdge> edges;
  std::vector<HalfEdge> half_edges;
  std::optional<std::size_t> base;

  /// Incident pairs of every vertex, full edges first in edge order.
  [[nodiscard]] std::vector<std::vector<IncidentPair>> incidence() const;
  /// Labels C(v) of one vertex (unlabeled half-edges are skipped).
  [[nodiscard]] std::vector<Root> labels(std::size_t v) const;
  [[nodiscard]] std::optional<std::size_t> find(const std::string& key) const;
  /// Label of the pair (vertex, edge) for a full edge incident to vertex.
  [[nodiscard]] const Root& label_at(std::size_t edge, std::size_t vertex) const;
};

}  // namespace dcamb
