#include <chieuler/error.hpp>
#include <chieuler/series.hpp>

namespace chieuler {

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least c_0");
}

TruncSeries TruncSeries::constant(const Rational& c, std::size_t order) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::exp(const Rational& a, std::size_t order) {
  TruncSeries s(order);
  Rational power(1);
  for (std::size_t n = 0; n <= order; ++n) {
    s.coeffs_[n] = power;
    power *= a;
  }
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order() != order()) throw Error(ErrorKind::InvalidArgument, "series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order() != order()) throw Error(ErrorKind::InvalidArgument, "series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::InvalidArgument, "series order mismatch");
  TruncSeries out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) {
    Rational acc(0);
    for (std::size_t k = 0; k <= n; ++k) {
      acc += Rational(binomial(n, k)) * a[k] * b[n - k];
    }
    out[n] = acc;
  }
  return out;
}

TruncSeries series_div(const TruncSeries& num, const TruncSeries& den) {
  if (num.order() != den.order()) throw Error(ErrorKind::InvalidArgument, "series order mismatch");
  if (den[0].is_zero()) throw Error(ErrorKind::ZeroConstantTerm, "denominator has c_0 = 0");
  const Rational inv0 = den[0].inverse();
  TruncSeries q(num.order());
  for (std::size_t n = 0; n <= num.order(); ++n) {
    Rational acc = num[n];
    for (std::size_t k = 0; k < n; ++k) acc -= Rational(binomial(n, k)) * q[k] * den[n - k];
    q[n] = acc * inv0;
  }
  return q;
}

}  // namespace chieuler
