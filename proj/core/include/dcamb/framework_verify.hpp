#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcamb/quasi_graph.hpp"

namespace dcamb {

/// The skew-symmetric form of the oriented n-cycle exchange matrix:
/// b_{i,i+1} = 1, b_{i+1,i} = -1, all other entries 0.
class OmegaForm {
 public:
  explicit OmegaForm(int n);

  [[nodiscard]] int rank() const { return n_; }
  /// b_{ij}, 1-based, indices taken mod n.
  [[nodiscard]] std::int64_t b(int i, int j) const;
  [[nodiscard]] std::int64_t operator()(const Root& beta, const Root& gamma) const;
  [[nodiscard]] std::vector<std::vector<std::int64_t>> matrix() const;

 private:
  int n_;
};

/// gamma + [sgn(beta) omega(beta, gamma)]_+ beta.
Root transition_image(const OmegaForm& omega, const Root& beta, const Root& gamma);

struct Witness {
  std::optional<std::size_t> vertex;
  std::optional<std::size_t> edge;
  std::optional<Root> label;
  std::string detail;
};

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::optional<Witness> witness;  // present iff !passed
  std::string info;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const AxiomResult* find(const std::string& axiom) const;
  void append(const AxiomReport& other);
  /// One "PASS"/"FAIL" line per axiom, with witness details on failure.
  [[nodiscard]] std::string to_text(const LabeledQuasiGraph& g) const;
};

AxiomReport check_sign(const LabeledQuasiGraph& g);
AxiomReport check_base(const LabeledQuasiGraph& g);
AxiomReport check_transition(const LabeledQuasiGraph& g);
/// Transition condition for a single full edge, read from one endpoint.
bool transition_holds_from(const LabeledQuasiGraph& g, std::size_t edge, std::size_t from_vertex);
/// Unique minimum, Full edge and Descending chain.
AxiomReport check_descending(const LabeledQuasiGraph& g);
AxiomReport check_completeness(const LabeledQuasiGraph& g);
AxiomReport check_regularity(const LabeledQuasiGraph& g);
AxiomReport verify_all(const LabeledQuasiGraph& g);

/// Vertices with no outgoing arc when each edge is directed toward the
/// endpoint where its label is positive.
std::vector<std::size_t> orientation_sinks(const LabeledQuasiGraph& g);

}  // namespace dcamb
