#include "dcamb/cyclic_sorting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dcamb/errors.hpp"

namespace dcamb {

bool is_acyclic(const Orientation& omega, IndexSet J) {
  // Every proper induced subgraph of the n-cycle is a disjoint union of paths.
  return J != IndexSet::full(omega.n);
}

CoxeterWord coxeter_element(const Orientation& omega, IndexSet J) {
  if (!is_acyclic(omega, J)) throw std::invalid_argument("index set " + J.to_string() + " is not acyclic");
  const int n = omega.n;
  const int back = omega.forward ? -1 : 1;  // predecessor of s_j is s_{j+back}
  Word out;
  IndexSet remaining = J;
  while (!remaining.empty()) {
    for (int j : remaining.items()) {
      if (!remaining.contains(wrap(j + back, n))) {
        out.push_back(j);
        remaining.erase(j);
        break;
      }
    }
  }
  return CoxeterWord(n, std::move(out));
}

bool is_omega_sortable(const Orientation& omega, const AffinePermutation& w) {
  const IndexSet J = support(w);
  if (!is_acyclic(omega, J)) return false;
  return is_sortable(coxeter_element(omega, J), w);
}

std::vector<AffinePermutation> enumerate_omega_sortables(const Orientation& omega) {
  std::set<AffinePermutation, ShortLex> all;
  for (int i = 1; i <= omega.n; ++i) {
    for (auto& w : enumerate_sortables(coxeter_element(omega, IndexSet::all_but(omega.n, i)))) all.insert(std::move(w));
  }
  return {all.begin(), all.end()};
}

PartialLabeling labels_omega(const Orientation& omega, const AffinePermutation& v) {
  const IndexSet J = support(v);
  if (!is_acyclic(omega, J) || !is_sortable(coxeter_element(omega, J), v)) {
    throw std::invalid_argument(v.to_string() + " is not Omega-sortable");
  }
  PartialLabeling out;
  for (int r = 1; r <= omega.n; ++r) {
    IndexSet K = J;
    K.insert(r);
    if (!is_acyclic(omega, K)) continue;
    out.emplace(r, label(coxeter_element(omega, K), v, r));
  }
  return out;
}

AffinePermutation pi_down_omega(const Orientation& omega, const AffinePermutation& w) {
  std::vector<AffinePermutation> below;
  for (auto& v : enumerate_omega_sortables(omega)) {
    if (weak_leq(v, w)) below.push_back(std::move(v));
  }
  const auto& top = below.back();
  for (const auto& v : below) {
    if (!weak_leq(v, top)) throw InvariantViolation("no unique maximal Omega-sortable below " + w.to_string());
  }
  return top;
}

OmegaCambrian::OmegaCambrian(const Orientation& omega) : omega_(omega), elements_(enumerate_omega_sortables(omega)) {
  const std::size_t N = elements_.size();
  labels_.reserve(N);
  for (std::size_t k = 0; k < N; ++k) {
    index_.emplace(elements_[k], k);
    labels_.push_back(labels_omega(omega_, elements_[k]));
  }
  leq_.assign(N * N, 0);
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) leq_[a * N + b] = weak_leq(elements_[a], elements_[b]) ? 1 : 0;
  }
  // hi covers lo iff lo < hi with nothing strictly between, inside the subposet.
  for (std::size_t hi = 0; hi < N; ++hi) {
    std::vector<std::size_t> lower;
    for (std::size_t lo = 0; lo < N; ++lo) {
      if (lo != hi && leq(lo, hi)) lower.push_back(lo);
    }
    for (std::size_t lo : lower) {
      const bool blocked = std::any_of(lower.begin(), lower.end(), [&](std::size_t mid) { return mid != lo && leq(lo, mid); });
      if (!blocked) covers_.emplace_back(lo, hi);
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

std::size_t OmegaCambrian::index_of(const AffinePermutation& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) throw std::invalid_argument(w.to_string() + " is not a vertex of this Cambrian semilattice");
  return it->second;
}

AffinePermutation OmegaCambrian::pi_down(const AffinePermutation& w) const {
  std::vector<std::size_t> below;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (weak_leq(elements_[k], w)) below.push_back(k);
  }
  const std::size_t top = below.back();
  for (std::size_t k : below) {
    if (!leq(k, top)) throw InvariantViolation("no unique maximal Omega-sortable below " + w.to_string());
  }
  return elements_[top];
}

Root edge_flip_root(const PartialLabeling& lo_labels, const PartialLabeling& hi_labels) {
  std::vector<Root> hits;
  for (const auto& [r, beta] : lo_labels) {
    if (!beta.is_positive()) continue;
    const Root neg = -beta;
    for (const auto& [r2, gamma] : hi_labels) {
      if (gamma == neg) {
        hits.push_back(beta);
        break;
      }
    }
  }
  if (hits.size() != 1) {
    throw InvariantViolation("expected exactly one flip root across a Cambrian cover, found " +
                             std::to_string(hits.size()));
  }
  return hits.front();
}

}  // namespace dcamb
