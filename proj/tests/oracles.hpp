#pragma once

// Independent reference computations for the tests. None of these call the
// library routine they are used to check.

#include <chieuler/characters.hpp>
#include <chieuler/padic.hpp>
#include <chieuler/rational.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using chieuler::Integer;
using chieuler::Rational;

/// Phi_m from its roots exp(2 pi i k/m), gcd(k, m) = 1, rounded to integers.
inline std::vector<long> cyclotomic_by_roots(unsigned long m) {
  std::vector<std::complex<long double>> c = {1.0L};
  const long double two_pi = 2.0L * std::acos(-1.0L);
  for (unsigned long k = 1; k <= m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    const auto root = std::polar(1.0L, two_pi * static_cast<long double>(k) / static_cast<long double>(m));
    std::vector<std::complex<long double>> next(c.size() + 1, 0.0L);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  std::vector<long> out;
  for (const auto& z : c) out.push_back(std::lround(static_cast<double>(z.real())));
  return out;
}

/// Eulerian numbers A(n, k) = #permutations of n with k descents.
inline std::vector<long> eulerian_by_descents(unsigned n) {
  if (n == 0) return {1};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long> counts(n, 0);
  do {
    int descents = 0;
    for (unsigned i = 0; i + 1 < n; ++i) descents += perm[i] > perm[i + 1];
    ++counts[static_cast<std::size_t>(descents)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

inline unsigned long mult_order(unsigned long a, unsigned long d) {
  unsigned long x = a % d, k = 1;
  while (x != 1 % d) {
    x = x * a % d;
    ++k;
  }
  return k;
}

inline unsigned long totient(unsigned long d) {
  unsigned long c = 0;
  for (unsigned long a = 0; a < d; ++a) c += std::gcd(a, d) == 1;
  return d == 1 ? 1 : c;
}

inline std::vector<std::pair<unsigned long, unsigned>> factor(unsigned long d) {
  std::vector<std::pair<unsigned long, unsigned>> f;
  for (unsigned long p = 2; p * p <= d; ++p) {
    unsigned e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (d > 1) f.emplace_back(d, 1);
  return f;
}

/// Conductor from the prime-power components: a character of order o on the
/// cyclic group mod p^e has conductor 1 if o = 1, else p^{v_p(o) + 1}.
inline unsigned long conductor_by_components(const chieuler::DirichletCharacter& chi) {
  const auto& orders = chi.group()->orders();
  const auto fac = factor(chi.modulus());
  unsigned long f = 1;
  for (std::size_t i = 0; i < fac.size(); ++i) {
    const auto [p, e] = fac[i];
    const unsigned long o = orders[i] / std::gcd(orders[i], chi.exponents()[i]);
    if (o == 1) continue;
    unsigned long oo = o, pp = p;
    while (oo % p == 0) {
      oo /= p;
      pp *= p;
    }
    f *= pp;
  }
  return f;
}

/// Exact rational truncated integral (1/[count]_Q) sum_{x<count} Q^x g(x),
/// then embedded mod p^k. Uses only Rational arithmetic.
template <typename G>
chieuler::PadicResidue rational_riemann_sum(G g, const Rational& Q, unsigned long count, std::uint64_t p,
                                            unsigned k) {
  Rational s(0), norm(0), qp(1);
  for (unsigned long x = 0; x < count; ++x) {
    s += qp * g(x);
    norm += qp;
    qp *= Q;
  }
  return chieuler::PadicResidue::from_rational(s / norm, p, k);
}

inline Rational random_rational(std::mt19937_64& rng, long span = 50) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace oracle
