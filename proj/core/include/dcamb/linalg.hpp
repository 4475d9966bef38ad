#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "dcamb/root.hpp"

namespace dcamb {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// Sign of a rational. Boost.Rational's mixed integer comparisons recurse
/// forever under C++20 rewritten operators, so code compares through this.
inline int sign(const Rational& q) { return q.numerator() > 0 ? 1 : q.numerator() < 0 ? -1 : 0; }

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  static IntMatrix identity(int n);
  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<Root>& cols);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  [[nodiscard]] std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  [[nodiscard]] Root column(int c) const;
  [[nodiscard]] IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
std::int64_t determinant(const IntMatrix& m);

/// Exact inverse over Q, or nullopt when singular. Entry [r][c].
std::optional<std::vector<RationalVector>> rational_inverse(const IntMatrix& m);

}  // namespace dcamb
