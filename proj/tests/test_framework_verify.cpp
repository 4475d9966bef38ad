#include <gtest/gtest.h>

#include "dcamb/doubled_framework.hpp"
#include "dcamb/errors.hpp"
#include "dcamb/framework_verify.hpp"
#include "negative_controls.hpp"

using namespace dcamb;

namespace {

Root r(std::vector<std::int64_t> c) { return Root(std::move(c)); }

const LabeledQuasiGraph& dcamb_graph(int n) {
  static std::map<int, LabeledQuasiGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build(n)).first;
  return it->second;
}

std::size_t by_name(const LabeledQuasiGraph& g, const std::string& name) {
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].name == name) return v;
  }
  throw std::out_of_range(name);
}

std::size_t edge_between(const LabeledQuasiGraph& g, std::size_t a, std::size_t b) {
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if ((g.edges[k].u == a && g.edges[k].v == b) || (g.edges[k].u == b && g.edges[k].v == a)) return k;
  }
  throw std::out_of_range("no edge");
}

}  // namespace

TEST(OmegaForm, Examples) {
  const OmegaForm w3(3);
  EXPECT_EQ(w3(Root::simple(3, 1), Root::simple(3, 2)), 1);
  EXPECT_EQ(w3(r({2, -1, 3}), r({2, -1, 3})), 0);
  EXPECT_EQ(w3(r({-1, -1, 0}), r({0, 0, 1})), 0);
  EXPECT_EQ(w3.matrix(), (std::vector<std::vector<std::int64_t>>{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
  EXPECT_THROW(OmegaForm(2), std::invalid_argument);
}

TEST(OmegaForm, SkewSymmetricWithCycleCartanCompanion) {
  for (int n = 3; n <= 7; ++n) {
    const OmegaForm w(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        EXPECT_EQ(w.b(i, j), -w.b(j, i));
        const int adjacent = (wrap(j - i, n) == 1 || wrap(i - j, n) == 1) ? 1 : 0;
        EXPECT_EQ(std::abs(w.b(i, j)), adjacent);
        EXPECT_EQ(w(Root::simple(n, i), Root::simple(n, j)), w.b(i, j));
      }
    }
    // delta is in the radical of the form.
    for (int i = 1; i <= n; ++i) EXPECT_EQ(w(Root::delta(n), Root::simple(n, i)), 0);
  }
}

TEST(TransitionImage, Examples) {
  const OmegaForm w(3);
  EXPECT_EQ(transition_image(w, r({1, 0, 0}), r({0, 1, 0})), r({1, 1, 0}));
  EXPECT_EQ(transition_image(w, r({1, 0, 0}), r({0, 0, 1})), r({0, 0, 1}));
  EXPECT_EQ(transition_image(w, r({-1, 0, 0}), r({0, 0, 1})), r({0, 0, 1}));
  EXPECT_EQ(transition_image(w, r({-1, 0, 0}), r({0, 1, 0})), r({-1, 1, 0}));
}

TEST(VerifyAll, PassesForRanksThreeToSix) {
  for (int n = 3; n <= 6; ++n) {
    const auto report = verify_all(dcamb_graph(n));
    EXPECT_TRUE(report.passed()) << report.to_text(dcamb_graph(n));
    for (const char* axiom : {"Sign", "Base", "Transition", "Unique minimum", "Full edge", "Descending chain",
                              "Completeness", "Regularity"}) {
      ASSERT_NE(report.find(axiom), nullptr) << axiom;
    }
  }
}

TEST(VerifyAll, CambrianAloneIsIncomplete) {
  const auto g = build_cambrian_only(Orientation::omega(3));
  const auto report = verify_all(g);
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.find("Completeness")->passed);
  ASSERT_TRUE(report.find("Completeness")->witness.has_value());
}

TEST(Sign, ZeroAndMixedLabelsFail) {
  auto g = dcamb_graph(3);
  g.edges[4].label_u = Root::zero(3);
  auto res = check_sign(g).results.front();
  EXPECT_FALSE(res.passed);
  ASSERT_TRUE(res.witness && res.witness->edge);
  EXPECT_EQ(*res.witness->edge, 4u);

  auto h = dcamb_graph(3);
  h.edges[2].label_v = r({1, -1, 0});
  res = check_sign(h).results.front();
  EXPECT_FALSE(res.passed);
  EXPECT_EQ(*res.witness->label, r({1, -1, 0}));
}

TEST(Base, MissingBaseFails) {
  auto g = dcamb_graph(3);
  const std::size_t b = *g.base;
  for (auto& e : g.edges) {
    if (e.u == b) e.label_u = -e.label_u;
    if (e.v == b) e.label_v = -e.label_v;
  }
  EXPECT_FALSE(check_base(g).passed());
  g.base.reset();
  EXPECT_FALSE(check_base(g).passed());
  EXPECT_TRUE(check_base(dcamb_graph(3)).passed());
}

TEST(Transition, PerturbedLabelIsReportedOnItsEdge) {
  const auto& base = dcamb_graph(3);
  for (std::size_t k = 0; k < base.edges.size(); ++k) {
    auto g = base;
    g.edges[k].label_u += Root::simple(3, 1);
    const auto res = check_transition(g).results.front();
    ASSERT_FALSE(res.passed);
    ASSERT_TRUE(res.witness && res.witness->edge);
    EXPECT_EQ(*res.witness->edge, k);
  }
}

TEST(Transition, ExampleEdgeFromBase) {
  const auto& g = dcamb_graph(3);
  const auto e = *g.base;
  const auto s1 = by_name(g, "s1");
  const auto k = edge_between(g, e, s1);
  EXPECT_EQ(g.label_at(k, e), r({1, 0, 0}));
  const auto image = transition_image(OmegaForm(3), r({1, 0, 0}), r({0, 1, 0}));
  const auto far = g.labels(s1);
  EXPECT_NE(std::find(far.begin(), far.end(), image), far.end());
}

TEST(Transition, SymmetricInTheTwoEndpoints) {
  for (int n = 3; n <= 6; ++n) {
    const auto& g = dcamb_graph(n);
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      EXPECT_TRUE(transition_holds_from(g, k, g.edges[k].u));
      EXPECT_TRUE(transition_holds_from(g, k, g.edges[k].v));
    }
  }
}

TEST(Transition, MuEdgeExistsExactlyWhenTheCheckPasses) {
  for (const auto& c : negative::single_label_corruptions(dcamb_graph(3))) {
    for (std::size_t k = 0; k < c.graph.edges.size(); ++k) {
      for (std::size_t v : {c.graph.edges[k].u, c.graph.edges[k].v}) {
        // mu_edge does not look at the far label of the edge itself, so only
        // compare when that label is the exact negative.
        if (c.graph.edges[k].label_u != -c.graph.edges[k].label_v) continue;
        if (c.graph.label_at(k, v).sign() == 0) continue;
        bool built = true;
        try {
          (void)mu_edge(c.graph, v, k);
        } catch (const InvariantViolation&) {
          built = false;
        }
        ASSERT_EQ(built, transition_holds_from(c.graph, k, v)) << c.kind << " edge " << c.edge;
      }
    }
  }
}

TEST(Descending, BaseIsTheOnlySinkAndOnlyAllPositiveVertex) {
  for (int n = 3; n <= 6; ++n) {
    const auto& g = dcamb_graph(n);
    EXPECT_EQ(orientation_sinks(g), std::vector<std::size_t>{*g.base});
    std::size_t all_positive = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      const auto labels = g.labels(v);
      all_positive += std::all_of(labels.begin(), labels.end(), [](const Root& b) { return b.is_positive(); });
    }
    EXPECT_EQ(all_positive, 1u);
  }
}

TEST(Descending, NegativeSideCarriesNegativeLabels) {
  const auto& g = dcamb_graph(3);
  const auto labels = g.labels(by_name(g, "-s2"));
  EXPECT_TRUE(std::any_of(labels.begin(), labels.end(), [](const Root& b) { return b.is_negative(); }));
}

TEST(Descending, TwoCycleFails) {
  LabeledQuasiGraph g;
  g.n = 3;
  g.vertices = {{"a", VertexSide::Omega, std::nullopt, std::nullopt, "a"},
                {"b", VertexSide::Omega, std::nullopt, std::nullopt, "b"}};
  g.edges = {{0, 1, r({1, 0, 0}), r({-1, 0, 0})}, {0, 1, r({0, -1, 0}), r({0, 1, 0})}};
  g.half_edges = {{0, r({0, 0, 1})}, {1, r({0, 0, 1})}};
  const auto report = check_descending(g);
  const auto* chain = report.find("Descending chain");
  ASSERT_NE(chain, nullptr);
  EXPECT_FALSE(chain->passed);
  ASSERT_TRUE(chain->witness && chain->witness->vertex);
}

TEST(Descending, NegativeHalfEdgeFails) {
  auto g = dcamb_graph(3);
  g.half_edges.push_back({0, r({-1, 0, 0})});
  EXPECT_FALSE(check_descending(g).find("Full edge")->passed);
}

TEST(Regularity, DetectsDegreeLoopsAndParallelEdges) {
  auto g = dcamb_graph(3);
  g.edges.push_back(g.edges.front());
  EXPECT_FALSE(check_regularity(g).passed());
  auto h = dcamb_graph(3);
  h.edges.pop_back();
  EXPECT_FALSE(check_regularity(h).passed());
  auto l = dcamb_graph(3);
  l.edges[0].v = l.edges[0].u;
  EXPECT_FALSE(check_regularity(l).passed());
}

TEST(Report, TextHasOneLinePerAxiom) {
  const auto& g = dcamb_graph(3);
  const auto text = verify_all(g).to_text(g);
  EXPECT_NE(text.find("PASS Sign"), std::string::npos);
  EXPECT_EQ(text.find("FAIL"), std::string::npos);
  auto bad = g;
  bad.edges[0].label_u = Root::zero(3);
  EXPECT_NE(verify_all(bad).to_text(bad).find("FAIL Sign"), std::string::npos);
}

TEST(NegativeControls, EverySingleLabelCorruptionIsCaughtWithALocalWitness) {
  const auto result = negative::sweep(dcamb_graph(3));
  EXPECT_EQ(result.total, 21u * 2 * 6);
  EXPECT_EQ(result.caught, result.total);
  EXPECT_EQ(result.correct_witness, result.total);
  for (const auto& m : result.misses) ADD_FAILURE() << m;
}
