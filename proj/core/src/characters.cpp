#include <chieuler/characters.hpp>
#include <chieuler/error.hpp>

#include <numeric>
#include <sstream>

namespace chieuler {

namespace {

struct PrimePower {
  unsigned long p;
  unsigned long pe;
};

std::vector<PrimePower> factor_odd(unsigned long d) {
  std::vector<PrimePower> out;
  for (unsigned long p = 3; p * p <= d; p += 2) {
    if (d % p != 0) continue;
    unsigned long pe = 1;
    while (d % p == 0) {
      d /= p;
      pe *= p;
    }
    out.push_back({p, pe});
  }
  if (d > 1) out.push_back({d, d});
  return out;
}

__extension__ typedef unsigned __int128 u128;

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long m) {
  return static_cast<unsigned long>(static_cast<u128>(a) * b % m);
}

unsigned long multiplicative_order(unsigned long g, unsigned long m) {
  unsigned long x = g % m, k = 1;
  while (x != 1) {
    x = mulmod(x, g, m);
    ++k;
  }
  return k;
}

unsigned long reduce(long a, unsigned long m) {
  long r = a % static_cast<long>(m);
  return static_cast<unsigned long>(r < 0 ? r + static_cast<long>(m) : r);
}

// x = a mod m1, x = b mod m2 (coprime moduli), by search over the smaller
// residue class; moduli here are small.
unsigned long crt(unsigned long a, unsigned long m1, unsigned long b, unsigned long m2) {
  for (unsigned long x = a % m1; x < m1 * m2; x += m1) {
    if (x % m2 == b % m2) return x;
  }
  throw Error(ErrorKind::InvalidArgument, "CRT failed: moduli not coprime");
}

}  // namespace

bool UnitGroupStructure::is_unit(long a) const {
  if (modulus_ == 1) return true;
  return unit_[reduce(a, modulus_)] != 0;
}

const std::vector<unsigned long>& UnitGroupStructure::dlog(long a) const {
  static const std::vector<unsigned long> kEmpty;
  if (modulus_ == 1) return kEmpty;
  unsigned long r = reduce(a, modulus_);
  if (!unit_[r]) throw Error(ErrorKind::InvalidArgument, "dlog of a non-unit");
  return dlog_[r];
}

std::shared_ptr<const UnitGroupStructure> unit_group(long d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
  if (d % 2 == 0) throw Error(ErrorKind::EvenModulus, "modulus " + std::to_string(d) + " is even");
  auto g = std::shared_ptr<UnitGroupStructure>(new UnitGroupStructure());
  const auto m = static_cast<unsigned long>(d);
  g->modulus_ = m;
  g->totient_ = euler_phi(m);
  for (const auto& [p, pe] : factor_odd(m)) {
    const unsigned long phi = pe / p * (p - 1);
    unsigned long root = 2;
    while (std::gcd(root, p) != 1 || multiplicative_order(root, pe) != phi) ++root;
    g->generators_.push_back(crt(root, pe, 1, m / pe));
    g->orders_.push_back(phi);
  }

  if (m > 1) {
    g->dlog_.assign(m, {});
    g->unit_.assign(m, 0);
    const std::size_t r = g->orders_.size();
    std::vector<unsigned long> e(r, 0);
    // Walk every exponent tuple like an odometer.
    for (bool more = true; more;) {
      unsigned long x = 1;
      for (std::size_t i = 0; i < r; ++i) {
        for (unsigned long j = 0; j < e[i]; ++j) x = mulmod(x, g->generators_[i], m);
      }
      if (g->unit_[x]) throw Error(ErrorKind::InvalidArgument, "generators are not independent");
      g->unit_[x] = 1;
      g->dlog_[x] = e;
      more = false;
      for (std::size_t i = r; i-- > 0;) {
        if (++e[i] < g->orders_[i]) {
          more = true;
          break;
        }
        e[i] = 0;
      }
    }
  }
  return g;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group,
                                       std::vector<unsigned long> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto& orders = group_->orders();
  if (exponents_.size() != orders.size()) {
    throw Error(ErrorKind::InvalidArgument, "exponent tuple has the wrong length");
  }
  order_ = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (exponents_[i] >= orders[i]) throw Error(ErrorKind::InvalidArgument, "exponent out of range");
    order_ = std::lcm(order_, orders[i] / std::gcd(exponents_[i], orders[i]));
  }
  field_ = CyclotomicField::make(order_);
}

unsigned long DirichletCharacter::value_exponent(long a) const {
  if (modulus() == 1) return 0;
  const auto& log = group_->dlog(a);
  const auto& orders = group_->orders();
  unsigned long acc = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (exponents_[i] == 0) continue;
    unsigned long g = std::gcd(exponents_[i], orders[i]);
    unsigned long step = (exponents_[i] / g) * (order_ / (orders[i] / g)) % order_;
    acc = (acc + mulmod(log[i] % order_, step, order_)) % order_;
  }
  return acc;
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<unsigned long> e = exponents_;
  const auto& orders = group_->orders();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (orders[i] - e[i]) % orders[i];
  return DirichletCharacter(group_, std::move(e));
}

std::string DirichletCharacter::exponents_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) os << ",";
    os << exponents_[i];
  }
  os << ")";
  return os.str();
}

std::vector<DirichletCharacter> enumerate_characters(long d) {
  auto group = unit_group(d);
  const auto& orders = group->orders();
  std::vector<DirichletCharacter> out;
  out.reserve(group->totient());
  std::vector<unsigned long> e(orders.size(), 0);
  for (;;) {
    out.emplace_back(group, e);
    std::size_t i = orders.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++e[i] < orders[i]) {
        done = false;
        break;
      }
      e[i] = 0;
    }
    if (done) break;
  }
  return out;
}

CycElem char_eval(const DirichletCharacter& chi, long a) {
  if (chi.modulus() == 1) return CycElem::rational(1, chi.value_field());
  if (!chi.group()->is_unit(a)) return CycElem::rational(0, chi.value_field());
  return CycElem::zeta_power(chi.value_field(), static_cast<long>(chi.value_exponent(a)));
}

unsigned long conductor(const DirichletCharacter& chi) {
  const unsigned long d = chi.modulus();
  if (chi.is_principal()) return 1;
  for (unsigned long f = 1; f <= d; ++f) {
    if (d % f != 0) continue;
    bool trivial = true;
    for (unsigned long a = 1; a < d && trivial; a += f) {
      if (chi.group()->is_unit(static_cast<long>(a)) && chi.value_exponent(static_cast<long>(a)) != 0) {
        trivial = false;
      }
    }
    if (trivial) return f;
  }
  return d;
}

}  // namespace chieuler
