#include "dcamb/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace dcamb {
namespace {
__extension__ using Wide = __int128;
}  // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Root>& cols) {
  if (cols.empty()) return {};
  IntMatrix m(cols.front().rank(), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (cols[c].rank() != m.rows()) throw std::invalid_argument("ragged column set");
    for (int r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r + 1];
  }
  return m;
}

Root IntMatrix::column(int c) const {
  std::vector<std::int64_t> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return Root(std::move(v));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const auto x = a(r, k);
      if (x == 0) continue;
      for (int c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        const Wide num = static_cast<Wide>(a(r, c)) * a(k, k) - static_cast<Wide>(a(r, k)) * a(k, c);
        a(r, c) = static_cast<std::int64_t>(num / prev);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<std::vector<RationalVector>> rational_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = m.rows();
  std::vector<RationalVector> a(n, RationalVector(2 * n, Rational(0)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = Rational(m(r, c));
    a[r][n + r] = Rational(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (sign(a[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || sign(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<RationalVector> inv(n, RationalVector(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inv[r][c] = a[r][n + c];
  }
  return inv;
}

}  // namespace dcamb
