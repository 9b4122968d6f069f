#include <chieuler/cyclotomic.hpp>
#include <chieuler/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace chieuler {

namespace {

PolyQ cyclotomic_memo(unsigned long m, std::map<unsigned long, PolyQ>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  PolyQ p = PolyQ::x_pow_minus_one(m);
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [quot, rem] = divmod(p, cyclotomic_memo(d, memo));
    p = std::move(quot);
  }
  memo.emplace(m, p);
  return p;
}

}  // namespace

PolyQ cyclotomic_polynomial(unsigned long m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
  std::map<unsigned long, PolyQ> memo;
  return cyclotomic_memo(m, memo);
}

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(unsigned long m) {
  return std::shared_ptr<const CyclotomicField>(new CyclotomicField(m));
}

CyclotomicField::CyclotomicField(unsigned long m) : order_(m), modulus_(cyclotomic_polynomial(m)) {}

std::vector<Rational> CyclotomicField::reduce(const PolyQ& raw) const {
  std::vector<Rational> out(degree());
  PolyQ rem = raw.degree() >= modulus_.degree() ? divmod(raw, modulus_).second : raw;
  const auto& c = rem.coefficients();
  std::copy(c.begin(), c.end(), out.begin());
  return out;
}

CycElem::CycElem() : field_(CyclotomicField::make(1)), coeffs_(1) {}

CycElem::CycElem(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree()) coeffs_ = field_->reduce(PolyQ(coeffs_));
}

CycElem CycElem::rational(const Rational& r, std::shared_ptr<const CyclotomicField> field) {
  std::vector<Rational> c(field->degree());
  c[0] = r;
  return CycElem(std::move(field), std::move(c));
}

CycElem CycElem::rational(const Rational& r) { return rational(r, CyclotomicField::make(1)); }

CycElem CycElem::zeta_power(std::shared_ptr<const CyclotomicField> field, long e) {
  long m = static_cast<long>(field->order());
  long r = ((e % m) + m) % m;
  auto coeffs = field->reduce(PolyQ::monomial(1, static_cast<std::size_t>(r)));
  return CycElem(std::move(field), std::move(coeffs));
}

bool CycElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool CycElem::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

CycElem CycElem::lift(unsigned long L) const {
  if (L == order()) return *this;
  if (L % order() != 0) throw Error(ErrorKind::InvalidArgument, "lift target must be a multiple of the order");
  auto target = CyclotomicField::make(L);
  auto coeffs = target->reduce(PolyQ(coeffs_).inflate(L / order()));
  return CycElem(std::move(target), std::move(coeffs));
}

CycElem CycElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "inverse of zero in Q(zeta)");
  if (is_rational()) return rational(coeffs_[0].inverse(), field_);
  auto g = xgcd(PolyQ(coeffs_), field_->modulus());
  // Phi_m is irreducible, so g = 1.
  return CycElem(field_, field_->reduce(g.s));
}

CycElem CycElem::conj() const {
  const std::size_t m = order();
  std::vector<Rational> raw(m);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) raw[(m - j) % m] += coeffs_[j];
  return CycElem(field_, field_->reduce(PolyQ(std::move(raw))));
}

namespace {

// Brings two operands into one field.
void unify(CycElem& a, CycElem& b) {
  if (a.order() == b.order()) return;
  unsigned long L = std::lcm(a.order(), b.order());
  // Rational elements are cheap to move between fields.
  auto target = CyclotomicField::make(L);
  a = a.is_rational() ? CycElem::rational(a.rational_part(), target) : a.lift(L);
  b = b.is_rational() ? CycElem::rational(b.rational_part(), target) : b.lift(L);
}

}  // namespace

CycElem& CycElem::operator+=(const CycElem& o) {
  if (o.order() != order()) {
    CycElem rhs = o;
    unify(*this, rhs);
    return *this += rhs;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& o) {
  if (o.order() != order()) {
    CycElem rhs = o;
    unify(*this, rhs);
    return *this -= rhs;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycElem& CycElem::operator*=(const CycElem& o) {
  if (o.order() != order()) {
    if (o.is_rational()) return *this *= o.rational_part();
    if (is_rational()) {
      Rational r = rational_part();
      *this = o;
      return *this *= r;
    }
    CycElem rhs = o;
    unify(*this, rhs);
    return *this *= rhs;
  }
  if (o.is_rational()) return *this *= o.rational_part();
  coeffs_ = field_->reduce(PolyQ(coeffs_) * PolyQ(o.coeffs_));
  return *this;
}

CycElem& CycElem::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycElem& CycElem::operator/=(const Rational& r) {
  if (r.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero");
  return *this *= r.inverse();
}

CycElem operator-(const CycElem& a) { return a * Rational(-1); }

bool operator==(const CycElem& a, const CycElem& b) {
  if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
  CycElem x = a, y = b;
  unify(x, y);
  return x.coeffs_ == y.coeffs_;
}

std::string CycElem::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << "(" << coeffs_[i].to_string() << ")";
  }
  os << "]@zeta" << order();
  return os.str();
}

CycElem CycElem::parse(std::string_view text) {
  auto fail = [&]() { return Error(ErrorKind::ParseError, "not a cyclotomic element: '" + std::string(text) + "'"); };
  auto at = text.rfind("]@zeta");
  if (text.empty() || text.front() != '[' || at == std::string_view::npos) throw fail();
  unsigned long m = 0;
  try {
    m = std::stoul(std::string(text.substr(at + 6)));
  } catch (const std::exception&) {
    throw fail();
  }
  if (m == 0) throw fail();
  std::vector<Rational> coeffs;
  std::string_view body = text.substr(1, at - 1);
  while (!body.empty()) {
    if (body.front() != '(') throw fail();
    auto close = body.find(')');
    if (close == std::string_view::npos) throw fail();
    coeffs.push_back(Rational::parse(body.substr(1, close - 1)));
    body.remove_prefix(close + 1);
    if (!body.empty()) {
      if (body.front() != ',') throw fail();
      body.remove_prefix(1);
    }
  }
  auto field = CyclotomicField::make(m);
  if (coeffs.size() != field->degree()) throw fail();
  return CycElem(std::move(field), std::move(coeffs));
}

CycElem cyc_reduce(const PolyQ& raw, unsigned long m) {
  auto field = CyclotomicField::make(m);
  auto coeffs = field->reduce(raw);
  return CycElem(std::move(field), std::move(coeffs));
}

namespace {

long magnitude_bits(const Rational& r) {
  if (r.is_zero()) return 0;
  long nb = static_cast<long>(mpz_sizeinbase(r.raw().get_num_mpz_t(), 2));
  long db = static_cast<long>(mpz_sizeinbase(r.raw().get_den_mpz_t(), 2));
  return std::max(0L, nb - db + 1);
}

}  // namespace

Complex cyc_embed(const CycElem& e, long bits) {
  long mag = 0;
  for (const auto& c : e.coefficients()) mag = std::max(mag, magnitude_bits(c));
  const mpfr_prec_t w = static_cast<mpfr_prec_t>(bits + 24 + mag);
  Complex acc(w);
  const Real two_pi_over_m = Real::pi(w) * Real(2, w) / Real(static_cast<long>(e.order()), w);
  const auto& c = e.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    Real coef(c[j], w);
    if (j == 0) {
      acc.re += coef;
      continue;
    }
    Real angle = two_pi_over_m * Real(static_cast<long>(j), w);
    acc.re += coef * cos(angle);
    acc.im += coef * sin(angle);
  }
  return acc;
}

}  // namespace chieuler
