#include "dcamb/affine_permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace dcamb {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_rank(int n) {
  if (n < 3) throw std::invalid_argument("rank must be at least 3, got " + std::to_string(n));
}

void require_index(int i, int n) {
  if (i < 1 || i > n) {
    throw std::invalid_argument("simple index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

void require_proper(int n, IndexSet J) {
  if (!J.is_subset_of(IndexSet::full(n))) throw std::invalid_argument("index set " + J.to_string() + " exceeds rank");
  if (J == IndexSet::full(n)) throw std::invalid_argument("parabolic W_S is infinite; J must be a proper subset");
}

}  // namespace

AffinePermutation::AffinePermutation(std::vector<std::int64_t> window) : window_(std::move(window)) {
  const int n = rank();
  require_rank(n);
  std::vector<bool> seen(n, false);
  std::int64_t sum = 0;
  for (auto v : window_) {
    const int r = static_cast<int>(((v - 1) % n + n) % n);
    if (seen[r]) throw std::invalid_argument("window residues are not a permutation of 1..n");
    seen[r] = true;
    sum += v;
  }
  if (sum != static_cast<std::int64_t>(n) * (n + 1) / 2) {
    throw std::invalid_argument("window entries must sum to n(n+1)/2");
  }
}

AffinePermutation AffinePermutation::identity(int n) {
  require_rank(n);
  std::vector<std::int64_t> w(n);
  std::iota(w.begin(), w.end(), 1);
  AffinePermutation out;
  out.window_ = std::move(w);
  return out;
}

AffinePermutation AffinePermutation::simple(int n, int i) {
  return identity(n).multiply_by_simple(i, Side::Right);
}

AffinePermutation AffinePermutation::from_word(int n, std::span<const int> word) {
  AffinePermutation w = identity(n);
  for (int i : word) w = w.multiply_by_simple(i, Side::Right);
  return w;
}

std::int64_t AffinePermutation::operator()(std::int64_t x) const {
  const std::int64_t n = rank();
  const std::int64_t q = floor_div(x - 1, n);
  return window_[static_cast<std::size_t>(x - 1 - q * n)] + q * n;
}

bool AffinePermutation::is_identity() const {
  for (std::size_t k = 0; k < window_.size(); ++k) {
    if (window_[k] != static_cast<std::int64_t>(k) + 1) return false;
  }
  return true;
}

AffinePermutation AffinePermutation::inverse() const {
  const std::int64_t n = rank();
  std::vector<std::int64_t> inv(window_.size());
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t v = window_[i - 1];
    const std::int64_t q = floor_div(v - 1, n);
    inv[v - 1 - q * n] = i - q * n;
  }
  AffinePermutation out;
  out.window_ = std::move(inv);
  return out;
}

AffinePermutation AffinePermutation::multiply_by_simple(int i, Side side) const {
  const int n = rank();
  require_index(i, n);
  AffinePermutation out = *this;
  auto& w = out.window_;
  if (side == Side::Right) {
    if (i < n) {
      std::swap(w[i - 1], w[i]);
    } else {
      const auto first = w[0];
      w[0] = w[n - 1] - n;
      w[n - 1] = first + n;
    }
  } else {
    for (auto& v : w) {
      const int r = wrap(static_cast<int>(((v - 1) % n + n) % n) + 1, n);
      if (r == i) {
        v += 1;
      } else if (r == wrap(i + 1, n)) {
        v -= 1;
      }
    }
  }
  return out;
}

AffinePermutation operator*(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in product");
  AffinePermutation out = b;
  for (auto& v : out.window_) v = a(v);
  return out;
}

std::int64_t AffinePermutation::length() const {
  const int n = rank();
  std::int64_t len = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto q = floor_div(window_[j] - window_[i], n);
      len += q < 0 ? -q : q;
    }
  }
  return len;
}

bool AffinePermutation::has_right_descent(int i) const {
  const int n = rank();
  require_index(i, n);
  if (i < n) return window_[i - 1] > window_[i];
  return window_[n - 1] > window_[0] + n;
}

bool AffinePermutation::has_left_descent(int i) const { return inverse().has_right_descent(i); }

Word AffinePermutation::reduced_word() const {
  const int n = rank();
  Word rev;
  AffinePermutation w = *this;
  while (!w.is_identity()) {
    int found = 0;
    for (int i = 1; i <= n; ++i) {
      if (w.has_right_descent(i)) {
        found = i;
        break;
      }
    }
    rev.push_back(found);
    w = w.multiply_by_simple(found, Side::Right);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::string AffinePermutation::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < window_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(window_[k]);
  }
  return out + "]";
}

std::size_t AffinePermutationHash::operator()(const AffinePermutation& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : w.window()) h = (h ^ std::hash<std::int64_t>{}(v)) * 0x100000001b3ull;
  return h;
}

bool ShortLex::operator()(const AffinePermutation& a, const AffinePermutation& b) const {
  const auto la = a.length();
  const auto lb = b.length();
  if (la != lb) return la < lb;
  return a.window() < b.window();
}

AffinePermutation multiply_by_simple(const AffinePermutation& w, int i, Side side) {
  return w.multiply_by_simple(i, side);
}

std::int64_t length(const AffinePermutation& w) { return w.length(); }

std::vector<Root> inversion_set_from_word(int n, std::span<const int> reduced_word) {
  std::vector<Root> out;
  out.reserve(reduced_word.size());
  for (std::size_t m = 0; m < reduced_word.size(); ++m) {
    out.push_back(act_on_root_by_word(reduced_word.subspan(0, m), Root::simple(n, reduced_word[m])));
  }
  return out;
}

std::vector<Root> inversion_set(const AffinePermutation& w) {
  const Word word = w.reduced_word();
  return inversion_set_from_word(w.rank(), word);
}

bool weak_leq(const AffinePermutation& x, const AffinePermutation& y) {
  return (x.inverse() * y).length() == y.length() - x.length();
}

Root act_on_root_by_word(std::span<const int> word, Root beta) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) beta = reflect(*it, beta);
  return beta;
}

Root act_on_root(const AffinePermutation& w, const Root& beta) {
  if (beta.rank() != w.rank()) throw std::invalid_argument("rank mismatch in root action");
  const Word word = w.reduced_word();
  return act_on_root_by_word(word, beta);
}

IndexSet support(const AffinePermutation& w) {
  IndexSet J;
  for (int i : w.reduced_word()) J.insert(i);
  return J;
}

std::vector<Root> cover_reflections(const AffinePermutation& w) {
  const int n = w.rank();
  const Word word = w.reduced_word();
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i) {
    if (w.has_right_descent(i)) out.push_back(-act_on_root_by_word(word, Root::simple(n, i)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AffinePermutation parabolic_projection(const AffinePermutation& w, IndexSet J) {
  const int n = w.rank();
  require_proper(n, J);
  // Peel left descents lying in J: w = w_J * (minimal coset representative).
  AffinePermutation proj = AffinePermutation::identity(n);
  AffinePermutation rest = w;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int i : J.items()) {
      if (rest.has_left_descent(i)) {
        rest = rest.multiply_by_simple(i, Side::Left);
        proj = proj.multiply_by_simple(i, Side::Right);
        progressed = true;
        break;
      }
    }
  }
  return proj;
}

AffinePermutation longest_element(int n, IndexSet J) {
  require_rank(n);
  require_proper(n, J);
  AffinePermutation w = AffinePermutation::identity(n);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : J.items()) {
      if (!w.has_right_descent(i)) {
        w = w.multiply_by_simple(i, Side::Right);
        grew = true;
        break;
      }
    }
  }
  return w;
}

std::vector<AffinePermutation> parabolic_elements(int n, IndexSet J) {
  require_rank(n);
  require_proper(n, J);
  std::unordered_set<AffinePermutation, AffinePermutationHash> seen;
  std::deque<AffinePermutation> queue;
  const auto e = AffinePermutation::identity(n);
  seen.insert(e);
  queue.push_back(e);
  const auto gens = J.items();
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (int i : gens) {
      auto y = x.multiply_by_simple(i, Side::Right);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<AffinePermutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), ShortLex{});
  return out;
}

std::vector<AffinePermutation> elements_up_to_length(int n, int max_length) {
  require_rank(n);
  std::vector<AffinePermutation> out{AffinePermutation::identity(n)};
  std::vector<AffinePermutation> layer = out;
  for (int len = 1; len <= max_length; ++len) {
    std::unordered_set<AffinePermutation, AffinePermutationHash> next;
    for (const auto& x : layer) {
      for (int i = 1; i <= n; ++i) {
        if (!x.has_right_descent(i)) next.insert(x.multiply_by_simple(i, Side::Right));
      }
    }
    layer.assign(next.begin(), next.end());
    std::sort(layer.begin(), layer.end(), ShortLex{});
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Root> parabolic_positive_roots(int n, IndexSet J) {
  auto roots = inversion_set(longest_element(n, J));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string word_to_string(std::span<const int> word, const std::string& sep) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += sep;
    out += "s" + std::to_string(word[k]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const AffinePermutation& w) { return os << w.to_string(); }

}  // namespace dcamb
