#include <chieuler/error.hpp>
#include <chieuler/padic.hpp>

namespace chieuler {

namespace {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t reduce(const Integer& v, std::uint64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return r.get_ui();
}

}  // namespace

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && r > kMaxModulus / base) {
      throw Error(ErrorKind::InvalidArgument, "p^k exceeds the 62-bit residue range");
    }
    r *= base;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

PadicResidue::PadicResidue(std::uint64_t p, unsigned k, std::uint64_t residue)
    : p_(p), k_(k), mod_(0), r_(0) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "precision k must be >= 1");
  mod_ = ipow(p, k);
  r_ = residue % mod_;
}

PadicResidue PadicResidue::from_integer(const Integer& v, std::uint64_t p, unsigned k) {
  PadicResidue r(p, k);
  r.r_ = reduce(v, r.mod_);
  return r;
}

PadicResidue PadicResidue::from_rational(const Rational& v, std::uint64_t p, unsigned k) {
  if (mpz_divisible_ui_p(v.raw().get_den_mpz_t(), p)) {
    throw Error(ErrorKind::NotPadicIntegral, v.to_string() + " has p = " + std::to_string(p) + " in its denominator");
  }
  PadicResidue num = from_integer(v.numerator(), p, k);
  PadicResidue den = from_integer(v.denominator(), p, k);
  return num * den.inverse();
}

unsigned PadicResidue::valuation() const {
  if (r_ == 0) return k_;
  unsigned v = 0;
  std::uint64_t x = r_;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

PadicResidue PadicResidue::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::ZeroDenominator, "residue " + to_string() + " is not a unit");
  // Extended Euclid on (r, p^k).
  i128 old_r = static_cast<i128>(r_), r = static_cast<i128>(mod_);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 quot = old_r / r;
    i128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  i128 m = static_cast<i128>(mod_);
  i128 inv = ((old_s % m) + m) % m;
  return PadicResidue(p_, k_, static_cast<std::uint64_t>(inv));
}

PadicResidue PadicResidue::pow(std::uint64_t e) const {
  PadicResidue result(p_, k_, 1);
  PadicResidue base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

void PadicResidue::check_compatible(const PadicResidue& o) const {
  if (p_ != o.p_ || k_ != o.k_) {
    throw Error(ErrorKind::InvalidArgument, "mixing residues of different (p, k)");
  }
}

PadicResidue& PadicResidue::operator+=(const PadicResidue& o) {
  check_compatible(o);
  r_ += o.r_;
  if (r_ >= mod_) r_ -= mod_;
  return *this;
}

PadicResidue& PadicResidue::operator-=(const PadicResidue& o) {
  check_compatible(o);
  r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + mod_ - o.r_;
  return *this;
}

PadicResidue& PadicResidue::operator*=(const PadicResidue& o) {
  check_compatible(o);
  r_ = mulmod(r_, o.r_, mod_);
  return *this;
}

PadicResidue operator-(const PadicResidue& a) {
  return PadicResidue(a.p_, a.k_, a.r_ == 0 ? 0 : a.mod_ - a.r_);
}

std::string PadicResidue::to_string() const {
  return std::to_string(r_) + " mod " + std::to_string(p_) + "^" + std::to_string(k_);
}

}  // namespace chieuler
