// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "dcamb/cluster_oracle.hpp"
#include "dcamb/cyclic_sorting.hpp"
#include "dcamb/doubled_framework.hpp"
#include "dcamb/eta_pairing.hpp"
#include "dcamb/fan_geometry.hpp"
#include "dcamb/framework_verify.hpp"
#include "dcamb/linalg.hpp"
#include "dcamb/sorting.hpp"
#include "negative_controls.hpp"

using namespace dcamb;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

AffinePermutation word(int n, Word letters) { return AffinePermutation::from_word(n, letters); }

const DoubledFramework& framework(int n) {
  static std::map<int, DoubledFramework> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_doubled(n)).first;
  return it->second;
}

Outcome rank_three_census() {
  const std::set<AffinePermutation> omega_list{
      AffinePermutation::identity(3), word(3, {1}),       word(3, {1, 2}), word(3, {1, 2, 1}), word(3, {2}),
      word(3, {2, 3}),                word(3, {2, 3, 2}), word(3, {3}),    word(3, {3, 1}),    word(3, {3, 1, 3})};
  const std::set<AffinePermutation> neg_list{
      AffinePermutation::identity(3), word(3, {3}),       word(3, {3, 2}), word(3, {3, 2, 3}), word(3, {2}),
      word(3, {1, 3}),                word(3, {1, 3, 1}), word(3, {1}),    word(3, {2, 1}),    word(3, {2, 1, 2})};
  const std::set<std::string> glue_names{"s1.s2=-s3.s2.s3", "s1.s2.s1=-s3.s2", "s2.s3=-s1.s3.s1",
                                         "s2.s3.s2=-s1.s3", "s3.s1=-s2.s1.s2", "s3.s1.s3=-s2.s1"};
  const auto om = enumerate_omega_sortables(Orientation::omega(3));
  const auto ng = enumerate_omega_sortables(Orientation::neg_omega(3));
  std::set<std::string> glued;
  for (const auto& v : framework(3).graph.vertices) {
    if (v.side == VertexSide::Glued) glued.insert(v.name);
  }
  Outcome out;
  out.ok = om.size() == 10 && ng.size() == 10 && std::set(om.begin(), om.end()) == omega_list &&
           std::set(ng.begin(), ng.end()) == neg_list && glued == glue_names && framework(3).glue.size() == 6;
  out.detail = std::to_string(om.size()) + " + " + std::to_string(ng.size()) + " sortables, " +
               std::to_string(glued.size()) + " gluings";
  return out;
}

Outcome rank_three_shape() {
  const auto& g = framework(3).graph;
  const auto inc = g.incidence();
  bool regular = true;
  bool unimodular = true;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    regular = regular && inc[v].size() == 3;
    const auto det = determinant(IntMatrix::from_columns(g.labels(v)));
    unimodular = unimodular && (det == 1 || det == -1);
  }
  Outcome out;
  out.ok = g.vertices.size() == 14 && g.edges.size() == 21 && g.half_edges.empty() && regular && unimodular;
  out.detail = std::to_string(g.vertices.size()) + " vertices, " + std::to_string(g.edges.size()) + " edges, " +
               std::to_string(g.half_edges.size()) + " half-edges";
  return out;
}

Outcome axioms() {
  Outcome out;
  for (int n = 3; n <= 6; ++n) {
    const auto rep = verify_all(framework(n).graph);
    if (!rep.passed()) {
      out.ok = false;
      out.detail += "n=" + std::to_string(n) + " failed; ";
    }
  }
  if (out.ok) out.detail = "all axioms hold for n=3..6";
  return out;
}

Outcome oracle() {
  Outcome out;
  const std::map<int, std::size_t> sizes{{3, 14}, {4, 50}, {5, 182}};
  for (const auto& [n, size] : sizes) {
    const auto eg = exchange_graph(n);
    const auto rep = compare(framework(n).graph, eg);
    out.ok = out.ok && eg.seeds.size() == size && rep.isomorphic && rep.b_match && rep.c_match && rep.g_match;
    out.detail += "n=" + std::to_string(n) + ": " + rep.summary() + "; ";
  }
  return out;
}

Outcome delta_sum() {
  Outcome out;
  std::size_t checked = 0;
  for (int n = 3; n <= 6; ++n) {
    const auto omega = Orientation::omega(n);
    for (const auto& v : enumerate_omega_sortables(omega)) {
      if (!classify(omega, v).is_case_b()) continue;
      const auto fr = funny_roots(omega, v);
      ++checked;
      if (!fr.beta.is_negative() || !fr.gamma.is_positive() || fr.gamma - fr.beta != Root::delta(n)) {
        out.ok = false;
        out.detail = "fails at " + v.to_string() + "; ";
      }
    }
  }
  out.detail += std::to_string(checked) + " glued vertices";
  return out;
}

Outcome tail_shift() {
  Outcome out;
  std::size_t checked = 0;
  for (int k = 3; k <= 7; ++k) {
    Word letters;
    for (int i = 1; i < k; ++i) letters.push_back(i);
    const CoxeterWord c(k, letters);
    for (const auto& u : enumerate_sortables(c)) {
      const int g = first_block_tail(c, u, ChainDirection::Ascending);
      const int gp = first_block_tail(c.reversed(), antipode_finite(c, u), ChainDirection::Descending);
      ++checked;
      if (gp != g - 1) {
        out.ok = false;
        out.detail = "k=" + std::to_string(k) + " u=" + u.to_string() + "; ";
      }
    }
  }
  out.detail += std::to_string(checked) + " sortable elements";
  return out;
}

Outcome fan() {
  Outcome out;
  for (int n : {3, 4}) {
    const auto& g = framework(n).graph;
    const auto simp = check_simplicial(g);
    const auto rep = check_fan(g, 10000, 20240611);
    out.ok = out.ok && simp.passed && rep.passed();
    out.detail += "n=" + std::to_string(n) + ": " + std::to_string(rep.facets_checked) + " facets, " +
                  std::to_string(rep.uncovered) + " uncovered, " + std::to_string(rep.multiply_covered) +
                  " overlaps; ";
  }
  return out;
}

Outcome fiber() {
  Outcome out;
  std::size_t checked = 0;
  for (int n : {3, 4}) {
    const auto omega = Orientation::omega(n);
    const OmegaCambrian camb(omega);
    std::vector<std::vector<Root>> cones;
    for (std::size_t k = 0; k < camb.elements().size(); ++k) {
      std::vector<Root> labels;
      for (const auto& [r, beta] : camb.labels(k)) labels.push_back(beta);
      cones.push_back(std::move(labels));
    }
    for (const auto& w : elements_up_to_length(n, 8)) {
      const auto x = chamber_point(w);
      const auto v = pi_down_omega(omega, w);
      for (std::size_t k = 0; k < cones.size(); ++k) {
        if (cone_contains(cones[k], x, true) != (camb.elements()[k] == v)) {
          out.ok = false;
          out.detail = "w=" + w.to_string() + "; ";
        }
      }
      ++checked;
    }
  }
  out.detail += std::to_string(checked) + " elements";
  return out;
}

Outcome shi() {
  Outcome out;
  for (int n = 3; n <= 5; ++n) {
    std::set<Root> positive;
    const auto& g = framework(n).graph;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      for (const auto& beta : g.labels(v)) {
        if (beta.is_positive()) positive.insert(beta);
      }
    }
    out.ok = out.ok && positive.size() == static_cast<std::size_t>(n * (n - 1));
    out.detail += "n=" + std::to_string(n) + ": " + std::to_string(positive.size()) + "; ";
  }
  return out;
}

Outcome negative_controls() {
  const auto res = negative::sweep(framework(3).graph);
  Outcome out;
  out.ok = res.total > 0 && res.caught == res.total && res.correct_witness == res.total;
  out.detail = std::to_string(res.caught) + "/" + std::to_string(res.total) + " caught, " +
               std::to_string(res.correct_witness) + " with correct witness";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"n=3 sortable lists and gluings", rank_three_census},
      {"n=3 framework shape", rank_three_shape},
      {"framework axioms n=3..6", axioms},
      {"mutation oracle isomorphism", oracle},
      {"glued roots sum to delta", delta_sum},
      {"first block tail shift", tail_shift},
      {"fan checks n=3,4", fan},
      {"fiber property", fiber},
      {"positive label census", shi},
      {"single-label corruptions", negative_controls},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    failures += !out.ok;
    std::printf("%s %2zu  %-32s %7.2fs  %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                took.count(), out.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
