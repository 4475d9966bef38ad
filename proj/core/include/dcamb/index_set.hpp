#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dcamb {

/// Simple reflections are indexed 1..n with cyclic arithmetic; wrap() folds
/// any integer into that range.
constexpr int wrap(int i, int n) {
  int r = ((i - 1) % n + n) % n;
  return r + 1;
}

/// A subset of the simple reflections {s_1, ..., s_n}, stored as a bitmask
/// (bit i-1 for s_i). Supports n <= 31.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<int> items) {
    for (int i : items) insert(i);
  }

  static IndexSet full(int n) { return IndexSet(n >= 32 ? ~0u : ((1u << n) - 1u)); }
  /// S \ {s_i}, written <s_i>.
  static IndexSet all_but(int n, int i) {
    IndexSet s = full(n);
    s.erase(wrap(i, n));
    return s;
  }
  static constexpr IndexSet from_bits(std::uint32_t bits) { return IndexSet(bits); }

  void insert(int i) { bits_ |= bit(i); }
  void erase(int i) { bits_ &= ~bit(i); }
  [[nodiscard]] bool contains(int i) const { return (bits_ & bit(i)) != 0; }
  [[nodiscard]] int size() const { return std::popcount(bits_); }
  [[nodiscard]] bool empty() const { return bits_ == 0; }
  [[nodiscard]] std::uint32_t bits() const { return bits_; }

  [[nodiscard]] bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  [[nodiscard]] IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }

  [[nodiscard]] std::vector<int> items() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(IndexSet, IndexSet) = default;
  friend auto operator<=>(IndexSet a, IndexSet b) { return a.bits_ <=> b.bits_; }

 private:
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  static std::uint32_t bit(int i) { return 1u << (i - 1); }

  std::uint32_t bits_ = 0;
};

inline std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : items()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace dcamb
