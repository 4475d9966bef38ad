#include "dcamb/sorting.hpp"

#include <algorithm>
#include <stdexcept>

#include "dcamb/errors.hpp"

namespace dcamb {
namespace {

void require_support(const CoxeterWord& c, const AffinePermutation& w) {
  if (w.rank() != c.rank()) throw std::invalid_argument("rank mismatch between word and element");
  if (!support(w).is_subset_of(c.index_set())) {
    throw std::invalid_argument("support " + support(w).to_string() + " not contained in Coxeter word letters " +
                                c.index_set().to_string());
  }
}

void require_sortable(const CoxeterWord& c, const SortingWord& sw, const AffinePermutation& w) {
  if (!sw.blocks_nested()) {
    throw std::invalid_argument(w.to_string() + " is not " + word_to_string(c.letters()) + "-sortable");
  }
}

}  // namespace

CoxeterWord::CoxeterWord(int n, Word letters) : n_(n), letters_(std::move(letters)) {
  if (n < 3) throw std::invalid_argument("rank must be at least 3");
  for (int& s : letters_) {
    s = wrap(s, n);
    if (set_.contains(s)) throw std::invalid_argument("Coxeter word repeats letter s" + std::to_string(s));
    set_.insert(s);
  }
  if (set_ == IndexSet::full(n)) throw std::invalid_argument("Coxeter word must omit at least one letter");
}

CoxeterWord CoxeterWord::reversed() const {
  Word rev(letters_.rbegin(), letters_.rend());
  return CoxeterWord(n_, std::move(rev));
}

bool SortingWord::blocks_nested() const {
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    for (int s : blocks[b]) {
      if (std::find(blocks[b - 1].begin(), blocks[b - 1].end(), s) == blocks[b - 1].end()) return false;
    }
  }
  return true;
}

SortingWord sorting_word(const CoxeterWord& c, const AffinePermutation& w) {
  require_support(c, w);
  SortingWord out;
  AffinePermutation rest = w;
  const auto& letters = c.letters();
  while (true) {
    Word block;
    for (int s : letters) {
      if (!rest.is_identity() && rest.has_left_descent(s)) {
        rest = rest.multiply_by_simple(s, Side::Left);
        out.letters.push_back(s);
        block.push_back(s);
      } else if (!out.skips.contains(s)) {
        out.skips[s] = out.letters.size();
      }
    }
    if (!block.empty()) out.blocks.push_back(std::move(block));
    if (rest.is_identity() && out.skips.size() == letters.size()) break;
  }
  return out;
}

bool is_sortable(const CoxeterWord& c, const AffinePermutation& w) { return sorting_word(c, w).blocks_nested(); }

Root label(const CoxeterWord& c, const AffinePermutation& v, int r) {
  const SortingWord sw = sorting_word(c, v);
  require_sortable(c, sw, v);
  r = wrap(r, c.rank());
  const auto it = sw.skips.find(r);
  if (it == sw.skips.end()) throw std::invalid_argument("letter s" + std::to_string(r) + " not in Coxeter word");
  return act_on_root_by_word(std::span<const int>(sw.letters).subspan(0, it->second), Root::simple(c.rank(), r));
}

std::map<int, Root> labels(const CoxeterWord& c, const AffinePermutation& v) {
  const SortingWord sw = sorting_word(c, v);
  require_sortable(c, sw, v);
  std::map<int, Root> out;
  for (const auto& [r, pos] : sw.skips) {
    out.emplace(r, act_on_root_by_word(std::span<const int>(sw.letters).subspan(0, pos), Root::simple(c.rank(), r)));
  }
  return out;
}

std::vector<AffinePermutation> enumerate_sortables(const CoxeterWord& c) {
  std::vector<AffinePermutation> out;
  for (auto& w : parabolic_elements(c.rank(), c.index_set())) {
    if (is_sortable(c, w)) out.push_back(std::move(w));
  }
  return out;
}

AffinePermutation pi_down(const CoxeterWord& c, const AffinePermutation& w) {
  require_support(c, w);
  std::vector<AffinePermutation> below;
  for (auto& v : enumerate_sortables(c)) {
    if (weak_leq(v, w)) below.push_back(std::move(v));
  }
  // ShortLex order: the maximum, if it exists, is the last entry.
  const auto& top = below.back();
  for (const auto& v : below) {
    if (!weak_leq(v, top)) throw InvariantViolation("no unique maximal sortable element below " + w.to_string());
  }
  return top;
}

AffinePermutation antipode_finite(const CoxeterWord& c, const AffinePermutation& u) {
  const SortingWord sw = sorting_word(c, u);
  require_sortable(c, sw, u);
  const auto w0 = longest_element(c.rank(), c.index_set());
  return pi_down(c.reversed(), u * w0);
}

int first_block_tail(const CoxeterWord& c, const AffinePermutation& u, ChainDirection dir) {
  const int n = c.rank();
  const auto& letters = c.letters();
  const int step = dir == ChainDirection::Ascending ? 1 : -1;
  for (std::size_t p = 1; p < letters.size(); ++p) {
    if (letters[p] != wrap(letters[p - 1] + step, n)) {
      throw std::invalid_argument("first_block_tail needs a path word in the stated direction");
    }
  }
  const SortingWord sw = sorting_word(c, u);
  require_sortable(c, sw, u);
  const int m = static_cast<int>(letters.size());  // m = k - 1
  const Word first = sw.blocks.empty() ? Word{} : sw.blocks.front();
  // Positions (1-based, in word order) of the first block's letters.
  std::vector<int> pos;
  for (int s : first) {
    pos.push_back(static_cast<int>(std::find(letters.begin(), letters.end(), s) - letters.begin()) + 1);
  }
  // Start position of the maximal run of consecutive positions ending at m.
  int start = m + 1;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    if (*it != start - 1) break;
    start = *it;
  }
  // Ascending: position p is t_p, so g = start. Descending: position p is
  // t_{k-p}, and the run ends at t_1, so g' = k - start.
  return dir == ChainDirection::Ascending ? start : (m + 1) - start;
}

}  // namespace dcamb
