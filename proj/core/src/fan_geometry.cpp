#include "dcamb/fan_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "dcamb/errors.hpp"

namespace dcamb {

Rational pairing(const RationalPoint& x, const Root& beta) {
  Rational acc(0);
  for (int i = 1; i <= beta.rank(); ++i) {
    if (beta[i] != 0) acc += x[i - 1] * beta[i];
  }
  return acc;
}

std::vector<RationalVector> dual_basis(const std::vector<Root>& labels) {
  auto inv = rational_inverse(IntMatrix::from_columns(labels));
  if (!inv) throw InvariantViolation("label set is linearly dependent");
  return std::move(*inv);
}

ConeDescription make_cone(const std::vector<Root>& labels) { return {labels, dual_basis(labels)}; }

bool cone_contains(const std::vector<Root>& labels, const RationalPoint& x, bool strict) {
  return std::all_of(labels.begin(), labels.end(), [&](const Root& beta) {
    const Rational p = pairing(x, beta);
    return strict ? sign(p) > 0 : sign(p) >= 0;
  });
}

bool cone_contains(const ConeDescription& cone, const RationalPoint& x, bool strict) {
  return cone_contains(cone.labels, x, strict);
}

RationalPoint chamber_point(const AffinePermutation& w) {
  const int n = w.rank();
  const auto inv_word = w.inverse().reduced_word();
  RationalPoint x(n);
  for (int i = 1; i <= n; ++i) x[i - 1] = Rational(act_on_root_by_word(inv_word, Root::simple(n, i)).height());
  return x;
}

std::vector<std::int64_t> primitive_ray(const RationalVector& r) {
  std::int64_t l = 1;
  for (const auto& q : r) l = std::lcm(l, q.denominator());
  std::vector<std::int64_t> out;
  std::int64_t g = 0;
  for (const auto& q : r) {
    out.push_back(q.numerator() * (l / q.denominator()));
    g = std::gcd(g, out.back());
  }
  if (g == 0) throw std::invalid_argument("zero vector has no primitive ray");
  for (auto& v : out) v /= g;
  return out;
}

SimplicialReport check_simplicial(const LabeledQuasiGraph& g) {
  SimplicialReport report;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto labels = g.labels(v);
    std::int64_t det = 0;
    if (static_cast<int>(labels.size()) == g.n) det = determinant(IntMatrix::from_columns(labels));
    report.determinants.push_back(det);
    if ((det != 1 && det != -1) && report.passed) {
      report.passed = false;
      report.witness = v;
    }
  }
  return report;
}

namespace {

RationalPoint random_point(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-60, 60);
  std::uniform_int_distribution<std::int64_t> den(0, 7);
  RationalPoint x(n);
  for (auto& c : x) c = Rational(num(rng), 2 * den(rng) + 1);
  return x;
}

}  // namespace

FanReport check_fan(const LabeledQuasiGraph& g, std::size_t samples, std::uint64_t seed) {
  FanReport report;
  const auto inc = g.incidence();
  std::vector<std::vector<Root>> cone_labels(g.vertices.size());
  std::vector<std::vector<RationalVector>> rays(g.vertices.size());
  std::vector<std::vector<Root>> ordered(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (const auto& p : inc[v]) {
      if (p.label) ordered[v].push_back(*p.label);
    }
    cone_labels[v] = ordered[v];
    if (static_cast<int>(ordered[v].size()) == g.n) {
      if (auto inv = rational_inverse(IntMatrix::from_columns(ordered[v]))) rays[v] = std::move(*inv);
    }
  }

  // Facet pairing across every full edge.
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    ++report.facets_checked;
    if (rays[e.u].empty() || rays[e.v].empty()) {
      report.facet_failures.push_back("edge " + std::to_string(k) + ": endpoint cone is not simplicial");
      continue;
    }
    auto facet = [&](std::size_t v, const Root& beta, RationalVector& opposite) {
      std::set<std::vector<std::int64_t>> out;
      for (std::size_t j = 0; j < ordered[v].size(); ++j) {
        if (ordered[v][j] == beta) {
          opposite = rays[v][j];
        } else {
          out.insert(primitive_ray(rays[v][j]));
        }
      }
      return out;
    };
    RationalVector opp_u, opp_v;
    const auto fu = facet(e.u, e.label_u, opp_u);
    const auto fv = facet(e.v, e.label_v, opp_v);
    std::vector<std::vector<std::int64_t>> common;
    std::set_intersection(fu.begin(), fu.end(), fv.begin(), fv.end(), std::back_inserter(common));
    if (static_cast<int>(common.size()) != g.n - 1 || fu != fv) {
      report.facet_failures.push_back("edge " + std::to_string(k) + ": cones share " + std::to_string(common.size()) +
                                      " rays");
      continue;
    }
    if (sign(pairing(opp_u, e.label_u)) <= 0 || sign(pairing(opp_v, e.label_u)) >= 0) {
      report.facet_failures.push_back("edge " + std::to_string(k) + ": cones lie on the same side of the shared wall");
    }
  }

  std::vector<Root> all_labels;
  for (const auto& ls : cone_labels) all_labels.insert(all_labels.end(), ls.begin(), ls.end());
  std::sort(all_labels.begin(), all_labels.end());
  all_labels.erase(std::unique(all_labels.begin(), all_labels.end()), all_labels.end());

  std::mt19937_64 rng(seed);
  while (report.samples < samples) {
    const RationalPoint x = random_point(g.n, rng);
    const bool degenerate = std::any_of(all_labels.begin(), all_labels.end(),
                                        [&](const Root& beta) { return sign(pairing(x, beta)) == 0; });
    if (degenerate) {
      ++report.resampled;
      continue;
    }
    ++report.samples;
    std::size_t hits = 0;
    for (std::size_t v = 0; v < cone_labels.size(); ++v) {
      // Only simplicial cones take part; a vertex short of labels has none.
      if (!rays[v].empty() && cone_contains(cone_labels[v], x, true)) ++hits;
    }
    if (hits == 0) {
      ++report.uncovered;
      if (report.uncovered_examples.size() < 5) report.uncovered_examples.push_back(x);
    } else if (hits > 1) {
      ++report.multiply_covered;
    }
  }
  return report;
}

BoundaryTrace boundary_trace(const DoubledFramework& fw, std::size_t vertex) {
  const auto& vx = fw.graph.vertices.at(vertex);
  if (vx.side != VertexSide::Glued) throw std::invalid_argument("boundary_trace needs a glued vertex, got " + vx.name);
  BoundaryTrace out;
  for (const auto& [r, beta] : fw.omega_side->labels(fw.omega_side->index_of(*vx.omega_element))) {
    out.omega_classes.push_back(beta.mod_delta());
  }
  for (const auto& [r, beta] : fw.neg_side->labels(fw.neg_side->index_of(*vx.neg_element))) {
    out.neg_classes.push_back((-beta).mod_delta());
  }
  std::sort(out.omega_classes.begin(), out.omega_classes.end());
  std::sort(out.neg_classes.begin(), out.neg_classes.end());
  out.equal = out.omega_classes == out.neg_classes;
  return out;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace dcamb
