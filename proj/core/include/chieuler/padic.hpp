#pragma once

#include <chieuler/rational.hpp>

#include <cstdint>
#include <string>

namespace chieuler {

/// Residue modulo p^k: the truncation of a p-adic integer. p^k must fit in
/// 62 bits so products can be formed in 128-bit arithmetic.
class PadicResidue {
 public:
  /// Placeholder with modulus 1; assign before use.
  PadicResidue() = default;
  PadicResidue(std::uint64_t p, unsigned k, std::uint64_t residue = 0);
  /// Embedding Q ∩ Z_(p) -> Z/p^k. Throws NotPadicIntegral when p | den.
  static PadicResidue from_rational(const Rational& r, std::uint64_t p, unsigned k);
  static PadicResidue from_integer(const Integer& v, std::uint64_t p, unsigned k);

  std::uint64_t prime() const { return p_; }
  unsigned precision() const { return k_; }
  std::uint64_t modulus() const { return mod_; }
  std::uint64_t residue() const { return r_; }

  /// v_p of the residue, capped at k (k means "zero mod p^k").
  unsigned valuation() const;
  bool is_unit() const { return p_ != 0 && r_ % p_ != 0; }
  PadicResidue inverse() const;
  PadicResidue pow(std::uint64_t e) const;

  PadicResidue& operator+=(const PadicResidue& o);
  PadicResidue& operator-=(const PadicResidue& o);
  PadicResidue& operator*=(const PadicResidue& o);
  friend PadicResidue operator+(PadicResidue a, const PadicResidue& b) { return a += b; }
  friend PadicResidue operator-(PadicResidue a, const PadicResidue& b) { return a -= b; }
  friend PadicResidue operator*(PadicResidue a, const PadicResidue& b) { return a *= b; }
  friend PadicResidue operator/(const PadicResidue& a, const PadicResidue& b) { return a * b.inverse(); }
  friend PadicResidue operator-(const PadicResidue& a);
  friend bool operator==(const PadicResidue& a, const PadicResidue& b) = default;

  std::string to_string() const;

 private:
  void check_compatible(const PadicResidue& o) const;
  std::uint64_t p_ = 0;
  unsigned k_ = 0;
  std::uint64_t mod_ = 1;
  std::uint64_t r_ = 0;
};

std::uint64_t ipow(std::uint64_t base, unsigned e);
bool is_prime(std::uint64_t n);
/// v_p(n) for n != 0.
unsigned valuation(const Integer& n, std::uint64_t p);

}  // namespace chieuler
