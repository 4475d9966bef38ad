#include "dcamb/root.hpp"

#include <algorithm>
#include <ostream>

#include "dcamb/index_set.hpp"

namespace dcamb {

Root Root::simple(int n, int i) {
  Root r = zero(n);
  r[wrap(i, n)] = 1;
  return r;
}

bool Root::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c <= 0; });
}

int Root::sign() const {
  if (is_positive()) return 1;
  if (is_negative()) return -1;
  return 0;
}

std::int64_t Root::height() const {
  std::int64_t h = 0;
  for (auto c : coords_) h += c;
  return h;
}

Root Root::mod_delta() const {
  if (coords_.empty()) return *this;
  const auto lo = *std::min_element(coords_.begin(), coords_.end());
  Root out = *this;
  for (auto& c : out.coords_) c -= lo;
  return out;
}

Root& Root::operator+=(const Root& o) {
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

Root& Root::operator-=(const Root& o) {
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

Root operator-(Root a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Root operator*(std::int64_t k, Root a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::string Root::to_string() const {
  std::string out;
  for (int i = 1; i <= rank(); ++i) {
    const auto c = (*this)[i];
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += "a" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::int64_t cartan_pairing(int i, const Root& beta) {
  const int n = beta.rank();
  return 2 * beta[i] - beta[wrap(i - 1, n)] - beta[wrap(i + 1, n)];
}

Root reflect(int i, const Root& beta) {
  Root out = beta;
  out[i] -= cartan_pairing(i, beta);
  return out;
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto c : r.coords()) h = (h ^ std::hash<std::int64_t>{}(c)) * 0x100000001b3ull;
  return h;
}

std::ostream& operator<<(std::ostream& os, const Root& r) { return os << r.to_string(); }

}  // namespace dcamb
