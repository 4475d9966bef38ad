#include "dcamb/doubled_framework.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "dcamb/errors.hpp"

namespace dcamb {
namespace {

std::string element_key(const char* side, const AffinePermutation& w) { return std::string(side) + w.to_string(); }

std::vector<Root> label_values(const PartialLabeling& labels, bool negate) {
  std::vector<Root> out;
  for (const auto& [r, beta] : labels) out.push_back(negate ? -beta : beta);
  return out;
}

void add_edge(LabeledQuasiGraph& g, FullEdge e) {
  for (const auto& f : g.edges) {
    const bool same = (f.u == e.u && f.v == e.v && f.label_u == e.label_u && f.label_v == e.label_v) ||
                      (f.u == e.v && f.v == e.u && f.label_u == e.label_v && f.label_v == e.label_u);
    if (same) return;
  }
  g.edges.push_back(std::move(e));
}

// Half-edges for labels of `expected` not already carried by a full edge.
void pad_half_edges(LabeledQuasiGraph& g, std::size_t v, const std::vector<Root>& expected) {
  std::vector<Root> used;
  for (const auto& e : g.edges) {
    if (e.u == v) used.push_back(e.label_u);
    if (e.v == v) used.push_back(e.label_v);
  }
  for (const auto& beta : expected) {
    if (std::find(used.begin(), used.end(), beta) == used.end()) g.half_edges.push_back({v, beta});
  }
}

}  // namespace

std::string sorting_name(const Orientation& omega, const AffinePermutation& w) {
  const IndexSet J = support(w);
  if (J.empty()) return "e";
  return word_to_string(sorting_word(coxeter_element(omega, J), w).letters, ".");
}

DoubledFramework build_doubled(int n) {
  DoubledFramework fw;
  fw.omega_side = std::make_shared<OmegaCambrian>(Orientation::omega(n));
  fw.neg_side = std::make_shared<OmegaCambrian>(Orientation::neg_omega(n));
  const auto& om = *fw.omega_side;
  const auto& ng = *fw.neg_side;
  const Orientation fwd = Orientation::omega(n);
  const Orientation rev = Orientation::neg_omega(n);

  auto& g = fw.graph;
  g.n = n;
  fw.omega_vertex.assign(om.elements().size(), 0);
  fw.neg_vertex.assign(ng.elements().size(), SIZE_MAX);
  std::vector<std::vector<Root>> dc;

  for (std::size_t k = 0; k < om.elements().size(); ++k) {
    const auto& v = om.elements()[k];
    FrameworkVertex vx;
    vx.omega_element = v;
    vx.name = sorting_name(fwd, v);
    std::vector<Root> labels = label_values(om.labels(k), false);
    const VertexClass cls = classify(fwd, v);
    if (cls.is_case_b()) {
      const auto fac = eta_factorization(fwd, v);
      const auto& vp = fac.image;
      if (!ng.contains(vp)) throw InvariantViolation("eta(" + vx.name + ") is not (-Omega)-sortable");
      const VertexClass image_cls = classify(rev, vp);
      if (image_cls != VertexClass::case_b(wrap(*cls.missing + 1, n))) {
        throw InvariantViolation("eta(" + vx.name + ") has the wrong class");
      }
      const std::size_t nk = ng.index_of(vp);
      if (fw.neg_vertex[nk] != SIZE_MAX) throw InvariantViolation("eta is not injective at " + vx.name);
      fw.neg_vertex[nk] = g.vertices.size();
      vx.side = VertexSide::Glued;
      vx.neg_element = vp;
      vx.key = element_key("glued", v);
      vx.name += "=-" + sorting_name(rev, vp);
      for (const auto& beta : label_values(ng.labels(nk), true)) {
        if (std::find(labels.begin(), labels.end(), beta) == labels.end()) labels.push_back(beta);
      }
      const auto roots = funny_roots(fwd, v);
      fw.glue.push_back({v, vp, roots.beta, roots.gamma});
    } else {
      vx.side = VertexSide::Omega;
      vx.key = element_key("omega", v);
    }
    fw.omega_vertex[k] = g.vertices.size();
    g.vertices.push_back(std::move(vx));
    dc.push_back(std::move(labels));
  }

  for (std::size_t k = 0; k < ng.elements().size(); ++k) {
    if (fw.neg_vertex[k] != SIZE_MAX) continue;
    const auto& v = ng.elements()[k];
    FrameworkVertex vx;
    vx.side = VertexSide::NegOmega;
    vx.neg_element = v;
    vx.key = element_key("neg", v);
    vx.name = "-" + sorting_name(rev, v);
    fw.neg_vertex[k] = g.vertices.size();
    g.vertices.push_back(std::move(vx));
    dc.push_back(label_values(ng.labels(k), true));
  }

  g.base = fw.omega_vertex[om.index_of(AffinePermutation::identity(n))];

  for (const auto& [lo, hi] : om.covers()) {
    const Root beta = edge_flip_root(om.labels(lo), om.labels(hi));
    add_edge(g, {fw.omega_vertex[lo], fw.omega_vertex[hi], beta, -beta});
  }
  for (const auto& [lo, hi] : ng.covers()) {
    const Root beta = edge_flip_root(ng.labels(lo), ng.labels(hi));
    add_edge(g, {fw.neg_vertex[lo], fw.neg_vertex[hi], -beta, beta});
  }
  std::sort(fw.glue.begin(), fw.glue.end(), [](const GluePair& a, const GluePair& b) { return ShortLex{}(a.v, b.v); });

  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (static_cast<int>(dc[v].size()) != n) {
      throw InvariantViolation("vertex " + g.vertices[v].name + " has " + std::to_string(dc[v].size()) + " labels");
    }
    pad_half_edges(g, v, dc[v]);
  }
  if (!g.half_edges.empty()) {
    throw InvariantViolation("vertex " + g.vertices[g.half_edges.front().vertex].name + " needs a half-edge for label " +
                             g.half_edges.front().label->to_string());
  }
  const auto inc = g.incidence();
  for (std::size_t v = 0; v < inc.size(); ++v) {
    std::set<Root> seen;
    for (const auto& p : inc[v]) seen.insert(*p.label);
    if (static_cast<int>(inc[v].size()) != n || static_cast<int>(seen.size()) != n) {
      throw InvariantViolation("vertex " + g.vertices[v].name + " does not carry " + std::to_string(n) +
                               " distinct incident labels");
    }
  }
  return fw;
}

LabeledQuasiGraph build(int n) { return build_doubled(n).graph; }

LabeledQuasiGraph build_cambrian_only(const Orientation& omega, bool negate) {
  const OmegaCambrian camb(omega);
  LabeledQuasiGraph g;
  g.n = omega.n;
  for (const auto& v : camb.elements()) {
    FrameworkVertex vx;
    vx.side = negate ? VertexSide::NegOmega : VertexSide::Omega;
    vx.key = element_key(negate ? "neg" : "omega", v);
    (negate ? vx.neg_element : vx.omega_element) = v;
    vx.name = (negate ? "-" : "") + sorting_name(omega, v);
    g.vertices.push_back(std::move(vx));
  }
  g.base = camb.index_of(AffinePermutation::identity(omega.n));
  for (const auto& [lo, hi] : camb.covers()) {
    const Root beta = edge_flip_root(camb.labels(lo), camb.labels(hi));
    if (negate) {
      g.edges.push_back({lo, hi, -beta, beta});
    } else {
      g.edges.push_back({lo, hi, beta, -beta});
    }
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    pad_half_edges(g, v, label_values(camb.labels(v), negate));
    const int missing = omega.n - static_cast<int>(camb.labels(v).size());
    for (int k = 0; k < missing; ++k) g.half_edges.push_back({v, std::nullopt});
  }
  return g;
}

std::vector<Root> dc_labels(const DoubledFramework& fw, std::size_t vertex) {
  const auto& vx = fw.graph.vertices.at(vertex);
  std::set<Root> out;
  if (vx.omega_element) {
    for (const auto& [r, beta] : fw.omega_side->labels(fw.omega_side->index_of(*vx.omega_element))) out.insert(beta);
  }
  if (vx.neg_element) {
    for (const auto& [r, beta] : fw.neg_side->labels(fw.neg_side->index_of(*vx.neg_element))) out.insert(-beta);
  }
  return {out.begin(), out.end()};
}

std::vector<std::pair<std::size_t, std::size_t>> mu_edge(const LabeledQuasiGraph& g, std::size_t vertex,
                                                         std::size_t edge) {
  const auto& e = g.edges.at(edge);
  if (e.u != vertex && e.v != vertex) throw std::invalid_argument("edge is not incident to vertex");
  const std::size_t far = e.u == vertex ? e.v : e.u;
  const OmegaForm omega(g.n);
  const Root& beta = g.label_at(edge, vertex);
  const auto inc = g.incidence();
  std::vector<std::pair<std::size_t, std::size_t>> out{{edge, edge}};
  for (const auto& p : inc[vertex]) {
    if (!p.full || p.edge == edge) continue;
    const Root image = transition_image(omega, beta, *p.label);
    const auto hit = std::find_if(inc[far].begin(), inc[far].end(),
                                  [&](const IncidentPair& q) { return q.full && q.label && *q.label == image; });
    if (hit == inc[far].end()) {
      throw InvariantViolation("transition image " + image.to_string() + " absent at " + g.vertices[far].name);
    }
    out.emplace_back(p.edge, hit->edge);
  }
  return out;
}

}  // namespace dcamb
