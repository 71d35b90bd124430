#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "salie/arith.hpp"

namespace salie {

// Dirichlet characters. Real kinds (trivial, quadratic, products of
// quadratics) cover everything the moment experiments need; the general kind
// carries an exponent vector on unit-group generators and exists for
// completeness (complex characters).
//
// Quadratic kind: chi_d for odd squarefree d > 0, the character of the real
// field of discriminant d or 4d:
//   d = 1 (mod 4): chi_d(n) = (n/d), conductor d
//   d = 3 (mod 4): chi_d(n) = 0 if gcd(4d,n) > 1, else (-1)^((n-1)/2) (n/d),
//                  conductor 4d
class DirichletCharacter {
 public:
  enum class Kind { Trivial, Quadratic, Product, General };

  // principal character mod m (chi(n) = [gcd(n,m) = 1])
  static DirichletCharacter trivial(i64 modulus = 1);
  // chi_d, d odd squarefree >= 1 (d = 1 gives the trivial character mod 1)
  static DirichletCharacter quadratic(i64 d);
  // chi_{d1} * chi_{d2}, modulus lcm of the two conductors
  static DirichletCharacter product(i64 d1, i64 d2);
  // exponent vector on the unit-group generators mod modulus; component
  // order: the 2-part generators (-1 then 5, when present) followed by one
  // generator per odd prime power, primes ascending
  static DirichletCharacter general(i64 modulus, std::vector<i64> exponents);

  Kind kind() const { return kind_; }
  i64 modulus() const { return modulus_; }
  i64 conductor() const { return conductor_; }
  bool is_even() const { return even_; }
  bool is_primitive() const { return conductor_ == modulus_; }
  bool is_real() const { return kind_ != Kind::General || general_real_; }

  // squarefree kernel of the underlying primitive quadratic character
  // (1 for the trivial character); only defined for real kinds
  i64 quadratic_kernel() const;

  std::complex<double> eval(i64 n) const;
  // -1/0/1 for real kinds; throws for a non-real general character
  int real_eval(i64 n) const;

  // textual form used by the CLI: trivial | kronecker:<d> | product:<d1>,<d2>
  std::string spec_string() const;

  bool operator==(const DirichletCharacter& o) const;

 private:
  DirichletCharacter() = default;

  Kind kind_ = Kind::Trivial;
  i64 modulus_ = 1;
  i64 conductor_ = 1;
  bool even_ = true;
  i64 d_ = 1;          // quadratic kind
  i64 d1_ = 1, d2_ = 1;  // product kind
  bool general_real_ = false;
  struct UnitGroup;
  std::shared_ptr<const UnitGroup> group_;  // general kind
  std::vector<i64> exponents_;
};

// conductor of the primitive character underlying chi * chi_d, for odd
// squarefree d and a real (trivial/quadratic/product) even chi.
// Rejects general-kind characters.
i64 conductor_of_product(const DirichletCharacter& chi, i64 d);

// does chi represent the primitive character chi_f?
bool represents_kronecker(const DirichletCharacter& chi, i64 f);

// parse "trivial", "kronecker:<d>", "product:<d1>,<d2>"
DirichletCharacter parse_character(const std::string& spec);

}  // namespace salie
