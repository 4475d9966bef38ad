#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dcamb/affine_permutation.hpp"

namespace dcamb {

/// A reduced word for a Coxeter element of a finite standard parabolic:
/// pairwise distinct letters, whose set is the parabolic's index set.
class CoxeterWord {
 public:
  CoxeterWord(int n, Word letters);

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] const Word& letters() const { return letters_; }
  [[nodiscard]] IndexSet index_set() const { return set_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  /// The word read backwards, a reduced word for c^{-1}.
  [[nodiscard]] CoxeterWord reversed() const;
  [[nodiscard]] AffinePermutation element() const { return AffinePermutation::from_word(n_, letters_); }

  friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;

 private:
  int n_;
  Word letters_;
  IndexSet set_;
};

/// The c-sorting word of an element together with its block decomposition
/// and, for each letter r of c, the prefix length at which r is first skipped.
struct SortingWord {
  Word letters;
  std::vector<Word> blocks;
  std::map<int, std::size_t> skips;

  [[nodiscard]] bool blocks_nested() const;
};

SortingWord sorting_word(const CoxeterWord& c, const AffinePermutation& w);
bool is_sortable(const CoxeterWord& c, const AffinePermutation& w);

/// C_c^r(v): the sorting-word prefix before the skip of r, applied to alpha_r.
Root label(const CoxeterWord& c, const AffinePermutation& v, int r);
/// All labels C_c(v), keyed by letter.
std::map<int, Root> labels(const CoxeterWord& c, const AffinePermutation& v);

std::vector<AffinePermutation> enumerate_sortables(const CoxeterWord& c);

/// Largest c-sortable element weakly below w (w must lie in W_J).
AffinePermutation pi_down(const CoxeterWord& c, const AffinePermutation& w);

/// The c^{-1}-sortable u' with C_c(u) = -C_{c^{-1}}(u'), i.e. pi_down of
/// u * w_0 for the reversed word.
AffinePermutation antipode_finite(const CoxeterWord& c, const AffinePermutation& u);

enum class ChainDirection { Ascending, Descending };

/// Tail index of the first block of the sorting word of u, for a Coxeter word
/// on a path t_1 - t_2 - ... - t_{k-1}.
///
/// Ascending: c = t_1 t_2 ... t_{k-1}; returns g where the first block ends
/// with the run t_g t_{g+1} ... t_{k-1} (g = k when t_{k-1} is absent).
/// Descending: c = t_{k-1} ... t_1; returns g' where the first block ends with
/// t_{g'} ... t_1 (g' = 0 when t_1 is absent).
/// The word's letters must be consecutive modulo n, in the stated direction.
int first_block_tail(const CoxeterWord& c, const AffinePermutation& u, ChainDirection dir);

}  // namespace dcamb
