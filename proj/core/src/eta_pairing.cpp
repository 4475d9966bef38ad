#include "dcamb/eta_pairing.hpp"

#include <stdexcept>

#include "dcamb/errors.hpp"

namespace dcamb {
namespace {

void require_forward(const Orientation& omega) {
  if (!omega.forward) throw std::invalid_argument("eta is defined on the forward orientation");
}

int require_case_b(const Orientation& omega, const AffinePermutation& v) {
  const VertexClass cls = classify(omega, v);
  if (!cls.is_case_b()) throw std::invalid_argument(v.to_string() + " is a case-A vertex; eta is undefined");
  return *cls.missing;
}

}  // namespace

VertexClass classify(const Orientation& omega, const AffinePermutation& v) {
  if (!is_omega_sortable(omega, v)) throw std::invalid_argument(v.to_string() + " is not Omega-sortable");
  const IndexSet J = support(v);
  if (J.size() == omega.n - 1) {
    for (int i = 1; i <= omega.n; ++i) {
      if (!J.contains(i)) return VertexClass::case_b(i);
    }
  }
  return VertexClass::case_a();
}

CoxeterWord interval_word(int n, int i, int j) {
  const int span = i <= j ? j - i : i - j;
  if (span > n - 1) {
    throw std::invalid_argument("c[" + std::to_string(i) + "," + std::to_string(j) + "] repeats a letter");
  }
  Word letters;
  const int step = i <= j ? 1 : -1;
  for (int k = 0; k <= span; ++k) letters.push_back(wrap(i + step * k, n));
  return CoxeterWord(n, std::move(letters));
}

AffinePermutation rotate(const AffinePermutation& w, int k) {
  // Conjugation by the shift x -> x + 1: new f(j) = f(j-1) + 1.
  const int n = w.rank();
  std::vector<std::int64_t> win = w.window();
  const int steps = ((k % n) + n) % n;
  for (int t = 0; t < steps; ++t) {
    std::vector<std::int64_t> next(n);
    const AffinePermutation cur(win);
    for (int j = 1; j <= n; ++j) next[j - 1] = cur(j - 1) + 1;
    win = std::move(next);
  }
  return AffinePermutation(std::move(win));
}

Root rotate(const Root& beta, int k) {
  const int n = beta.rank();
  Root out = Root::zero(n);
  for (int i = 1; i <= n; ++i) out[wrap(i + k, n)] = beta[i];
  return out;
}

EtaFactorization eta_factorization(const Orientation& omega, const AffinePermutation& v) {
  require_forward(omega);
  const int i = require_case_b(omega, v);
  const int n = omega.n;
  const AffinePermutation head = interval_word(n, i + 1, i + n - 1).element();
  EtaFactorization out;
  out.i = i;
  out.u = head.inverse() * v;
  if (out.u.length() + head.length() != v.length()) {
    throw InvariantViolation("case-B vertex " + v.to_string() + " does not factor through c[i+1,i+n-1]");
  }
  const CoxeterWord inner = interval_word(n, i + 1, i + n - 2);
  out.u_prime = antipode_finite(inner, out.u);
  out.image = interval_word(n, i + n, i + 2).element() * rotate(out.u_prime, 2);
  return out;
}

AffinePermutation eta(const Orientation& omega, const AffinePermutation& v) { return eta_factorization(omega, v).image; }

FunnyRoots funny_roots(const Orientation& omega, const AffinePermutation& v) {
  const auto fac = eta_factorization(omega, v);
  const int n = omega.n;
  const int i = fac.i;
  FunnyRoots out;
  out.beta = label(interval_word(n, i + 1, i + n - 1), v, i - 1);
  out.gamma = -label(interval_word(n, i + n, i + 2), fac.image, i + 2);
  // Read g off beta = -(alpha_{i+1} + ... + alpha_g).
  Root acc = Root::zero(n);
  for (int g = i + 1; g <= i + n - 1; ++g) {
    acc -= Root::simple(n, g);
    if (acc == out.beta) {
      out.g = g;
      break;
    }
  }
  if (out.g == 0) throw InvariantViolation("beta " + out.beta.to_string() + " is not a negative interval root");
  return out;
}

}  // namespace dcamb
