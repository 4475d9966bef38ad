#include "dcamb/quasi_graph.hpp"

#include <stdexcept>

namespace dcamb {

std::string to_string(VertexSide side) {
  switch (side) {
    case VertexSide::Omega:
      return "omega";
    case VertexSide::NegOmega:
      return "neg";
    case VertexSide::Glued:
      return "glued";
  }
  return "?";
}

std::vector<std::vector<IncidentPair>> LabeledQuasiGraph::incidence() const {
  std::vector<std::vector<IncidentPair>> out(vertices.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    out[e.u].push_back({e.u, true, k, e.label_u, e.v});
    out[e.v].push_back({e.v, true, k, e.label_v, e.u});
  }
  for (std::size_t k = 0; k < half_edges.size(); ++k) {
    const auto& h = half_edges[k];
    out[h.vertex].push_back({h.vertex, false, k, h.label, std::nullopt});
  }
  return out;
}

std::vector<Root> LabeledQuasiGraph::labels(std::size_t v) const {
  std::vector<Root> out;
  for (const auto& e : edges) {
    if (e.u == v) out.push_back(e.label_u);
    if (e.v == v) out.push_back(e.label_v);
  }
  for (const auto& h : half_edges) {
    if (h.vertex == v && h.label) out.push_back(*h.label);
  }
  return out;
}

std::optional<std::size_t> LabeledQuasiGraph::find(const std::string& key) const {
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k].key == key) return k;
  }
  return std::nullopt;
}

const Root& LabeledQuasiGraph::label_at(std::size_t edge, std::size_t vertex) const {
  const auto& e = edges.at(edge);
  if (e.u == vertex) return e.label_u;
  if (e.v == vertex) return e.label_v;
  throw std::invalid_argument("vertex is not an endpoint of edge " + std::to_string(edge));
}

}  // namespace dcamb
