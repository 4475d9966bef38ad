#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dcamb/index_set.hpp"
#include "dcamb/root.hpp"

namespace dcamb {

using Word = std::vector<int>;

enum class Side { Left, Right };

/// Element of the affine symmetric group ~A_{n-1} in window notation.
///
/// The window (f(1), ..., f(n)) determines a bijection f of Z with
/// f(i + n) = f(i) + n. Generator s_i (1 <= i < n) swaps positions i and i+1;
/// s_n swaps positions n and n+1, which moves values across the window edge.
class AffinePermutation {
 public:
  AffinePermutation() = default;
  /// Validates the window (residues form a permutation, entries sum to
  /// n(n+1)/2). Throws std::invalid_argument otherwise.
  explicit AffinePermutation(std::vector<std::int64_t> window);

  static AffinePermutation identity(int n);
  static AffinePermutation simple(int n, int i);
  /// Product s_{w_1} s_{w_2} ... s_{w_k}; the word need not be reduced.
  static AffinePermutation from_word(int n, std::span<const int> word);

  [[nodiscard]] int rank() const { return static_cast<int>(window_.size()); }
  [[nodiscard]] const std::vector<std::int64_t>& window() const { return window_; }
  /// f(x) for any integer x.
  [[nodiscard]] std::int64_t operator()(std::int64_t x) const;

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] AffinePermutation inverse() const;
  [[nodiscard]] AffinePermutation multiply_by_simple(int i, Side side) const;
  friend AffinePermutation operator*(const AffinePermutation& a, const AffinePermutation& b);

  [[nodiscard]] std::int64_t length() const;
  [[nodiscard]] bool has_right_descent(int i) const;
  [[nodiscard]] bool has_left_descent(int i) const;

  /// Reduced word obtained by repeatedly stripping the smallest right descent.
  [[nodiscard]] Word reduced_word() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  std::vector<std::int64_t> window_;
};

std::ostream& operator<<(std::ostream& os, const AffinePermutation& w);

struct AffinePermutationHash {
  std::size_t operator()(const AffinePermutation& w) const noexcept;
};

/// Orders by length, then window. Used wherever enumeration output must be
/// deterministic.
struct ShortLex {
  bool operator()(const AffinePermutation& a, const AffinePermutation& b) const;
};

// ---- affine-coxeter operations -------------------------------------------

AffinePermutation multiply_by_simple(const AffinePermutation& w, int i, Side side);
std::int64_t length(const AffinePermutation& w);

/// Left inversions as positive roots, in reduced-word prefix order.
std::vector<Root> inversion_set(const AffinePermutation& w);
/// Same set computed from a caller-supplied reduced word.
std::vector<Root> inversion_set_from_word(int n, std::span<const int> reduced_word);

/// Right weak order.
bool weak_leq(const AffinePermutation& x, const AffinePermutation& y);

Root act_on_root(const AffinePermutation& w, const Root& beta);
Root act_on_root_by_word(std::span<const int> word, Root beta);

IndexSet support(const AffinePermutation& w);

/// beta_t for every cover reflection t of w.
std::vector<Root> cover_reflections(const AffinePermutation& w);

/// w_J: the unique maximal element of W_J below w. Requires J != S.
AffinePermutation parabolic_projection(const AffinePermutation& w, IndexSet J);

/// Longest element of the finite parabolic W_J. Requires J != S.
AffinePermutation longest_element(int n, IndexSet J);

/// All elements of the finite parabolic W_J, in ShortLex order.
std::vector<AffinePermutation> parabolic_elements(int n, IndexSet J);

/// All elements of length <= max_length, in ShortLex order.
std::vector<AffinePermutation> elements_up_to_length(int n, int max_length);

/// Positive roots of the finite root subsystem for W_J.
std::vector<Root> parabolic_positive_roots(int n, IndexSet J);

std::string word_to_string(std::span<const int> word, const std::string& sep = "");

}  // namespace dcamb
