#include <chieuler/error.hpp>
#include <chieuler/rational.hpp>

#include <cctype>
#include <ostream>

namespace chieuler {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
  }
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  Integer den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, std::string(text));
  return Rational(num, den);
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "inverse of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
  // Powers of a reduced fraction stay reduced.
  mpq_class r;
  mpz_swap(r.get_num_mpz_t(), num.get_mpz_t());
  mpz_swap(r.get_den_mpz_t(), den.get_mpz_t());
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational q_number(long x, const Rational& Q) {
  if (Q == Rational(1)) throw Error(ErrorKind::QisOne, "[x]_Q is undefined at Q = 1");
  if (x >= 0) {
    Rational sum(0), power(1);
    for (long j = 0; j < x; ++j) {
      sum += power;
      power *= Q;
    }
    return sum;
  }
  return (Rational(1) - Q.pow(x)) / (Rational(1) - Q);
}

}  // namespace chieuler
