#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace dcamb {

/// An integer vector in the simple-root basis alpha_1..alpha_n.
///
/// Real roots, the imaginary root delta and framework labels all use this
/// type. Nothing here forces the vector to be a root: frameworks read from
/// disk may carry arbitrary lattice vectors and the Sign check is what
/// rejects them.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  static Root zero(int n) { return Root(std::vector<std::int64_t>(n, 0)); }
  static Root simple(int n, int i);
  /// delta = alpha_1 + ... + alpha_n.
  static Root delta(int n) { return Root(std::vector<std::int64_t>(n, 1)); }

  [[nodiscard]] int rank() const { return static_cast<int>(coords_.size()); }
  /// Coefficient of alpha_i, i in 1..n.
  [[nodiscard]] std::int64_t operator[](int i) const { return coords_[i - 1]; }
  std::int64_t& operator[](int i) { return coords_[i - 1]; }
  [[nodiscard]] const std::vector<std::int64_t>& coords() const { return coords_; }

  [[nodiscard]] bool is_zero() const;
  /// Nonzero with every coordinate >= 0.
  [[nodiscard]] bool is_positive() const;
  [[nodiscard]] bool is_negative() const;
  /// +1 for positive, -1 for negative, 0 for zero or mixed-sign vectors.
  [[nodiscard]] int sign() const;
  [[nodiscard]] std::int64_t height() const;

  /// Canonical representative modulo R*delta: shift so the minimum
  /// coordinate is zero.
  [[nodiscard]] Root mod_delta() const;

  Root& operator+=(const Root& o);
  Root& operator-=(const Root& o);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator-(Root a);
  friend Root operator*(std::int64_t k, Root a);

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

  /// "a1+a2", "-a1-a2", "2a1+a3", "0".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const Root& r);

/// Symmetric Cartan pairing K(alpha_i, beta) for type affine A_{n-1}.
std::int64_t cartan_pairing(int i, const Root& beta);

/// s_i(beta) = beta - K(alpha_i, beta) alpha_i.
Root reflect(int i, const Root& beta);

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

}  // namespace dcamb
