#pragma once

#include <chieuler/cyclotomic.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace chieuler {

/// (Z/dZ)^* as an internal direct product of cyclic groups, one per odd
/// prime power of d, each generated by the CRT lift of the smallest
/// primitive root modulo that prime power.
class UnitGroupStructure {
 public:
  unsigned long modulus() const { return modulus_; }
  const std::vector<unsigned long>& generators() const { return generators_; }
  const std::vector<unsigned long>& orders() const { return orders_; }
  unsigned long totient() const { return totient_; }

  bool is_unit(long a) const;
  /// Exponent tuple of a unit a; empty vector for modulus 1.
  const std::vector<unsigned long>& dlog(long a) const;

  friend std::shared_ptr<const UnitGroupStructure> unit_group(long d);

 private:
  UnitGroupStructure() = default;
  unsigned long modulus_ = 1;
  unsigned long totient_ = 1;
  std::vector<unsigned long> generators_;
  std::vector<unsigned long> orders_;
  // Indexed by residue; empty entries for non-units.
  std::vector<std::vector<unsigned long>> dlog_;
  std::vector<char> unit_;
};

/// Throws EvenModulus for even d and InvalidArgument for d < 1.
std::shared_ptr<const UnitGroupStructure> unit_group(long d);

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group,
                     std::vector<unsigned long> exponents);

  unsigned long modulus() const { return group_->modulus(); }
  const std::vector<unsigned long>& exponents() const { return exponents_; }
  /// Least m with chi^m principal.
  unsigned long order() const { return order_; }
  /// All values lie in Q(zeta_value_order); equal to order().
  unsigned long value_order() const { return order_; }
  const std::shared_ptr<const UnitGroupStructure>& group() const { return group_; }
  const std::shared_ptr<const CyclotomicField>& value_field() const { return field_; }

  bool is_principal() const { return order_ == 1; }
  /// Exponent of zeta_{value_order} for the unit a.
  unsigned long value_exponent(long a) const;

  DirichletCharacter conj() const;
  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

  /// "(e1,e2,...)"
  std::string exponents_string() const;

 private:
  std::shared_ptr<const UnitGroupStructure> group_;
  std::vector<unsigned long> exponents_;
  unsigned long order_ = 1;
  std::shared_ptr<const CyclotomicField> field_;
};

/// All phi(d) characters, lexicographic in the exponent tuple; index 0 is
/// the principal character.
std::vector<DirichletCharacter> enumerate_characters(long d);

/// chi(a) as an element of Q(zeta_value_order). Modulus 1 gives 1 everywhere.
CycElem char_eval(const DirichletCharacter& chi, long a);

/// Smallest f | d such that chi is trivial on units congruent to 1 mod f.
unsigned long conductor(const DirichletCharacter& chi);

}  // namespace chieuler
