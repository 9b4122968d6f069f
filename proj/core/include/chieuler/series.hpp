#pragma once

#include <chieuler/rational.hpp>

#include <cstddef>
#include <vector>

namespace chieuler {

/// Truncated power series in exponential-generating form:
///   S(t) = sum_{n=0}^{N} c_n t^n / n!
/// Products and quotients use the binomial convolution.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order);
  explicit TruncSeries(std::vector<Rational> coeffs);

  static TruncSeries constant(const Rational& c, std::size_t order);
  /// e^{a t}: c_n = a^n.
  static TruncSeries exp(const Rational& a, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }
  Rational& operator[](std::size_t n) { return coeffs_[n]; }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Quotient Q with sum_k C(n,k) Q_k den_{n-k} = num_n for n <= N.
/// Throws ZeroConstantTerm when den.c_0 = 0.
TruncSeries series_div(const TruncSeries& num, const TruncSeries& den);

}  // namespace chieuler
