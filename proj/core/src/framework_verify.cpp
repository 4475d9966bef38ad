#include "dcamb/framework_verify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dcamb {
namespace {

AxiomResult pass(std::string axiom, std::string info = {}) { return {std::move(axiom), true, std::nullopt, std::move(info)}; }

AxiomResult fail(std::string axiom, Witness w) { return {std::move(axiom), false, std::move(w), {}}; }

AxiomReport single(AxiomResult r) { return AxiomReport{{std::move(r)}}; }

bool contains(const std::vector<Root>& set, const Root& r) { return std::find(set.begin(), set.end(), r) != set.end(); }

std::string describe_vertex(const LabeledQuasiGraph& g, std::size_t v) {
  const auto& vx = g.vertices.at(v);
  return vx.name.empty() ? vx.key : vx.name;
}

// First failing (vertex, edge, gamma) of the Transition condition across one
// edge, read from `from`.
std::optional<Witness> transition_witness(const LabeledQuasiGraph& g, const OmegaForm& omega,
                                          const std::vector<std::vector<IncidentPair>>& inc, std::size_t edge,
                                          std::size_t from) {
  const auto& e = g.edges[edge];
  const std::size_t to = e.u == from ? e.v : e.u;
  const Root& beta = g.label_at(edge, from);
  const Root& beta_far = g.label_at(edge, to);
  if (beta_far != -beta) {
    return Witness{from, edge, beta, "labels across the edge are not negatives: " + beta.to_string() + " vs " +
                                         beta_far.to_string()};
  }
  const int sgn = beta.sign();
  if (sgn == 0) return Witness{from, edge, beta, "edge label has no sign"};
  std::vector<Root> far_labels;
  for (const auto& p : inc[to]) {
    if (p.label) far_labels.push_back(*p.label);
  }
  for (const auto& p : inc[from]) {
    if (p.full && p.edge == edge) continue;
    if (!p.label) return Witness{from, edge, std::nullopt, "unlabeled incident pair"};
    const Root image = transition_image(omega, beta, *p.label);
    if (!contains(far_labels, image)) {
      return Witness{from, edge, *p.label,
                     "transition image " + image.to_string() + " of " + p.label->to_string() + " missing at " +
                         describe_vertex(g, to)};
    }
  }
  return std::nullopt;
}

}  // namespace

OmegaForm::OmegaForm(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("rank must be at least 3");
}

std::int64_t OmegaForm::b(int i, int j) const {
  i = wrap(i, n_);
  j = wrap(j, n_);
  if (j == wrap(i + 1, n_)) return 1;
  if (i == wrap(j + 1, n_)) return -1;
  return 0;
}

std::int64_t OmegaForm::operator()(const Root& beta, const Root& gamma) const {
  std::int64_t acc = 0;
  for (int i = 1; i <= n_; ++i) {
    if (beta[i] == 0) continue;
    acc += beta[i] * (gamma[wrap(i + 1, n_)] - gamma[wrap(i - 1, n_)]);
  }
  return acc;
}

std::vector<std::vector<std::int64_t>> OmegaForm::matrix() const {
  std::vector<std::vector<std::int64_t>> m(n_, std::vector<std::int64_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) m[i - 1][j - 1] = b(i, j);
  }
  return m;
}

Root transition_image(const OmegaForm& omega, const Root& beta, const Root& gamma) {
  const std::int64_t coeff = std::max<std::int64_t>(0, beta.sign() * omega(beta, gamma));
  return gamma + coeff * beta;
}

bool AxiomReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* AxiomReport::find(const std::string& axiom) const {
  for (const auto& r : results) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

void AxiomReport::append(const AxiomReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

std::string AxiomReport::to_text(const LabeledQuasiGraph& g) const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.axiom;
    if (!r.info.empty()) os << "  (" << r.info << ")";
    os << "\n";
    if (r.witness) {
      const auto& w = *r.witness;
      os << "     witness:";
      if (w.vertex) os << " vertex=" << describe_vertex(g, *w.vertex);
      if (w.edge) os << " edge=" << *w.edge;
      if (w.label) os << " label=" << w.label->to_string();
      if (!w.detail.empty()) os << " : " << w.detail;
      os << "\n";
    }
  }
  return os.str();
}

AxiomReport check_sign(const LabeledQuasiGraph& g) {
  const auto inc = g.incidence();
  for (std::size_t v = 0; v < inc.size(); ++v) {
    for (const auto& p : inc[v]) {
      const std::optional<std::size_t> edge = p.full ? std::optional<std::size_t>(p.edge) : std::nullopt;
      if (!p.label) return single(fail("Sign", {v, edge, std::nullopt, "incident pair has no label"}));
      if (p.label->is_zero()) return single(fail("Sign", {v, edge, p.label, "label is zero"}));
      if (p.label->sign() == 0) return single(fail("Sign", {v, edge, p.label, "label has mixed signs"}));
    }
  }
  return single(pass("Sign"));
}

AxiomReport check_base(const LabeledQuasiGraph& g) {
  auto is_simple_set = [&](std::size_t v) {
    auto labels = g.labels(v);
    if (static_cast<int>(labels.size()) != g.n) return false;
    std::sort(labels.begin(), labels.end());
    std::vector<Root> simples;
    for (int i = 1; i <= g.n; ++i) simples.push_back(Root::simple(g.n, i));
    std::sort(simples.begin(), simples.end());
    return labels == simples;
  };
  std::vector<std::size_t> qualifying;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (is_simple_set(v)) qualifying.push_back(v);
  }
  const std::string info = std::to_string(qualifying.size()) + " vertex(es) carry the simple roots";
  if (g.base) {
    if (!is_simple_set(*g.base)) {
      return single(fail("Base", {*g.base, std::nullopt, std::nullopt, "designated base vertex labels are not the simple roots"}));
    }
    return single(pass("Base", info));
  }
  if (qualifying.empty()) return single(fail("Base", {std::nullopt, std::nullopt, std::nullopt, "no vertex carries the simple roots"}));
  return single(pass("Base", info));
}

bool transition_holds_from(const LabeledQuasiGraph& g, std::size_t edge, std::size_t from_vertex) {
  const OmegaForm omega(g.n);
  const auto inc = g.incidence();
  return !transition_witness(g, omega, inc, edge, from_vertex).has_value();
}

AxiomReport check_transition(const LabeledQuasiGraph& g) {
  const OmegaForm omega(g.n);
  const auto inc = g.incidence();
  // Antipodal labels first, so a single corrupted label is reported on its
  // own edge rather than on a neighbor whose transition image went missing.
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    if (e.label_v != -e.label_u) {
      return single(fail("Transition", {e.u, k, e.label_u,
                                        "labels across the edge are not negatives: " + e.label_u.to_string() + " vs " +
                                            e.label_v.to_string()}));
    }
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    for (std::size_t from : {g.edges[k].u, g.edges[k].v}) {
      if (auto w = transition_witness(g, omega, inc, k, from)) return single(fail("Transition", std::move(*w)));
    }
  }
  return single(pass("Transition", std::to_string(g.edges.size()) + " edges checked from both ends"));
}

std::vector<std::size_t> orientation_sinks(const LabeledQuasiGraph& g) {
  std::vector<int> out_degree(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    for (const auto& [at, label, far] : {std::tuple{e.u, e.label_u, e.v}, std::tuple{e.v, e.label_v, e.u}}) {
      if (label.sign() == 1) ++out_degree[far];
      if (label.sign() == -1) ++out_degree[at];
    }
  }
  std::vector<std::size_t> sinks;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (out_degree[v] == 0) sinks.push_back(v);
  }
  return sinks;
}

AxiomReport check_descending(const LabeledQuasiGraph& g) {
  AxiomReport report;
  const auto inc = g.incidence();

  // Unique minimum: only the base vertex may have all labels positive.
  {
    std::optional<Witness> bad;
    for (std::size_t v = 0; v < inc.size() && !bad; ++v) {
      const bool all_positive = std::all_of(inc[v].begin(), inc[v].end(),
                                            [](const IncidentPair& p) { return p.label && p.label->sign() == 1; });
      if (all_positive && (!g.base || *g.base != v)) bad = Witness{v, std::nullopt, std::nullopt, "non-base vertex with all labels positive"};
    }
    report.results.push_back(bad ? fail("Unique minimum", *bad) : pass("Unique minimum"));
  }

  // Full edge: negative labels only on full edges.
  {
    std::optional<Witness> bad;
    for (const auto& h : g.half_edges) {
      if (h.label && h.label->sign() == -1) {
        bad = Witness{h.vertex, std::nullopt, h.label, "negative label on a half-edge"};
        break;
      }
    }
    report.results.push_back(bad ? fail("Full edge", *bad) : pass("Full edge"));
  }

  // Descending chain: the orientation must be acyclic (the graph is finite).
  {
    const std::size_t V = g.vertices.size();
    std::vector<std::vector<std::size_t>> arcs(V);
    std::vector<int> indeg(V, 0);
    auto add_arc = [&](std::size_t a, std::size_t b) {
      arcs[a].push_back(b);
      ++indeg[b];
    };
    for (const auto& e : g.edges) {
      for (const auto& [at, label, far] : {std::tuple{e.u, e.label_u, e.v}, std::tuple{e.v, e.label_v, e.u}}) {
        if (label.sign() == 1) add_arc(far, at);
        if (label.sign() == -1) add_arc(at, far);
      }
    }
    std::deque<std::size_t> ready;
    for (std::size_t v = 0; v < V; ++v) {
      if (indeg[v] == 0) ready.push_back(v);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
      const auto v = ready.front();
      ready.pop_front();
      ++removed;
      for (auto w : arcs[v]) {
        if (--indeg[w] == 0) ready.push_back(w);
      }
    }
    if (removed == V) {
      report.results.push_back(pass("Descending chain"));
    } else {
      std::size_t on_cycle = 0;
      while (indeg[on_cycle] == 0) ++on_cycle;
      report.results.push_back(fail("Descending chain", {on_cycle, std::nullopt, std::nullopt, "vertex lies on a directed cycle"}));
    }
  }
  return report;
}

AxiomReport check_completeness(const LabeledQuasiGraph& g) {
  if (!g.half_edges.empty()) {
    const auto& h = g.half_edges.front();
    return single(fail("Completeness", {h.vertex, std::nullopt, h.label,
                                        std::to_string(g.half_edges.size()) + " half-edge(s) present"}));
  }
  return single(pass("Completeness"));
}

AxiomReport check_regularity(const LabeledQuasiGraph& g) {
  const auto inc = g.incidence();
  for (std::size_t v = 0; v < inc.size(); ++v) {
    if (static_cast<int>(inc[v].size()) != g.n) {
      return single(fail("Regularity", {v, std::nullopt, std::nullopt,
                                        "degree " + std::to_string(inc[v].size()) + " != " + std::to_string(g.n)}));
    }
    std::set<Root> seen;
    for (const auto& p : inc[v]) {
      if (p.label && !seen.insert(*p.label).second) {
        return single(fail("Regularity", {v, p.full ? std::optional<std::size_t>(p.edge) : std::nullopt, p.label,
                                          "label repeated at vertex"}));
      }
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    if (e.u == e.v) return single(fail("Regularity", {e.u, k, std::nullopt, "loop edge"}));
    if (!pairs.insert(std::minmax(e.u, e.v)).second) {
      return single(fail("Regularity", {e.u, k, std::nullopt, "parallel edges"}));
    }
  }
  return single(pass("Regularity", std::to_string(g.vertices.size()) + " vertices of degree " + std::to_string(g.n)));
}

AxiomReport verify_all(const LabeledQuasiGraph& g) {
  AxiomReport report;
  report.append(check_sign(g));
  report.append(check_base(g));
  report.append(check_transition(g));
  report.append(check_descending(g));
  report.append(check_completeness(g));
  report.append(check_regularity(g));
  return report;
}

}  // namespace dcamb
