#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcamb/sorting.hpp"

namespace dcamb {

/// One of the two cyclic orientations of the n-cycle diagram.
/// Forward is s_1 <- s_2 <- ... <- s_n <- s_1 (s_i precedes s_{i+1} in
/// Coxeter words); Reverse is the opposite.
struct Orientation {
  int n = 3;
  bool forward = true;

  static Orientation omega(int n) { return {n, true}; }
  static Orientation neg_omega(int n) { return {n, false}; }
  [[nodiscard]] Orientation opposite() const { return {n, !forward}; }

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Labels C_Omega^r(v), defined exactly for those r with J(v) + {r} acyclic.
using PartialLabeling = std::map<int, Root>;

bool is_acyclic(const Orientation& omega, IndexSet J);
CoxeterWord coxeter_element(const Orientation& omega, IndexSet J);
bool is_omega_sortable(const Orientation& omega, const AffinePermutation& w);
std::vector<AffinePermutation> enumerate_omega_sortables(const Orientation& omega);
PartialLabeling labels_omega(const Orientation& omega, const AffinePermutation& v);
AffinePermutation pi_down_omega(const Orientation& omega, const AffinePermutation& w);

/// Precomputed Omega-Cambrian semilattice: the sortable elements (ShortLex
/// order), their partial labelings, and the Hasse covers of the induced
/// subposet of the weak order. Immutable after construction.
class OmegaCambrian {
 public:
  explicit OmegaCambrian(const Orientation& omega);

  [[nodiscard]] const Orientation& orientation() const { return omega_; }
  [[nodiscard]] int rank() const { return omega_.n; }
  [[nodiscard]] const std::vector<AffinePermutation>& elements() const { return elements_; }
  [[nodiscard]] const PartialLabeling& labels(std::size_t idx) const { return labels_[idx]; }
  [[nodiscard]] std::size_t index_of(const AffinePermutation& w) const;
  [[nodiscard]] bool contains(const AffinePermutation& w) const { return index_.contains(w); }
  /// Pairs (lo, hi) with lo covered by hi.
  [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return leq_[a * elements_.size() + b]; }

  /// Brute-force maximum over the sortables weakly below w.
  [[nodiscard]] AffinePermutation pi_down(const AffinePermutation& w) const;

 private:
  Orientation omega_;
  std::vector<AffinePermutation> elements_;
  std::unordered_map<AffinePermutation, std::size_t, AffinePermutationHash> index_;
  std::vector<PartialLabeling> labels_;
  std::vector<char> leq_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// The unique positive root beta with beta in lo_labels and -beta in
/// hi_labels. Throws InvariantViolation when there is not exactly one.
Root edge_flip_root(const PartialLabeling& lo_labels, const PartialLabeling& hi_labels);

}  // namespace dcamb
