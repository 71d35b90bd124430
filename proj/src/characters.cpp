#include "salie/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace salie {

namespace {

bool is_squarefree(i64 n) { return arith_functions(n).mu != 0; }

// chi_d(n) by the conductor-d / conductor-4d case split.
int kronecker_eval(i64 d, i64 n) {
  if (d == 1) return 1;
  if (d % 4 == 1) return jacobi_symbol(n, d);
  // d = 3 (mod 4): conductor 4d
  i64 m = 4 * d;
  i64 r = ((n % m) + m) % m;
  if (std::gcd(r, m) != 1) return 0;
  int sign = (r % 4 == 1) ? 1 : -1;  // (-1)^((r-1)/2), r odd
  return sign * jacobi_symbol(r, d);
}

i64 kronecker_conductor(i64 d) {
  if (d == 1) return 1;
  return d % 4 == 1 ? d : 4 * d;
}

void require_quadratic_d(i64 d) {
  if (d < 1 || d % 2 == 0 || !is_squarefree(d))
    throw std::domain_error("quadratic character: d must be odd, squarefree, positive");
}

}  // namespace

// Unit group structure mod m with per-component discrete-log tables.
struct DirichletCharacter::UnitGroup {
  struct Component {
    i64 prime_power;             // p^e, or the 2-part markers below
    i64 order;                   // order of the generator
    i64 generator;
    std::vector<std::int32_t> dlog;  // residue -> exponent, -1 for non-units
  };
  i64 modulus = 1;
  // components: for 2^e with e >= 3 two entries ({-1} of order 2, {5} of
  // order 2^(e-2)); for 2^2 one entry (-1, order 2); none for 2^0, 2^1;
  // then one entry per odd p^e.
  std::vector<Component> components;

  static std::shared_ptr<const UnitGroup> build(i64 m);
};

namespace {

i64 primitive_root_prime_power(i64 p, int e) {
  i64 pe = 1;
  for (int k = 0; k < e; ++k) pe *= p;
  i64 phi_p = p - 1;
  auto fac = factorize(phi_p);
  auto is_proot_mod_p = [&](i64 g) {
    for (auto [q, ex] : fac) {
      (void)ex;
      if (pow_mod(g, phi_p / q, p) == 1) return false;
    }
    return true;
  };
  i64 g = 2;
  while (!is_proot_mod_p(g)) ++g;
  if (e == 1) return g;
  // lift: g generates mod p^e unless g^(p-1) = 1 (mod p^2)
  if (pow_mod(g, p - 1, p * p) == 1) g += p;
  return g % pe;
}

}  // namespace

std::shared_ptr<const DirichletCharacter::UnitGroup>
DirichletCharacter::UnitGroup::build(i64 m) {
  auto fill_dlog = [](Component& comp) {
    comp.dlog.assign(static_cast<std::size_t>(comp.prime_power), -1);
    i64 x = 1;
    for (i64 k = 0; k < comp.order; ++k) {
      comp.dlog[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(k);
      x = mul_mod(x, comp.generator, comp.prime_power);
    }
  };
  if (m < 1 || m > (1LL << 24))
    throw std::domain_error("general character: modulus out of range");
  auto g = std::make_shared<UnitGroup>();
  g->modulus = m;
  for (auto [p, e] : factorize(m)) {
    i64 pe = 1;
    for (int k = 0; k < e; ++k) pe *= p;
    if (p == 2) {
      if (e == 1) continue;
      if (e == 2) {
        Component c{pe, 2, pe - 1, {}};
        fill_dlog(c);
        g->components.push_back(std::move(c));
      } else {
        Component c1{pe, 2, pe - 1, {}};
        // dlog on <-1> alone is ambiguous; handled jointly in eval via
        // a combined table: build it as x = (-1)^a 5^b
        Component c2{pe, i64(1) << (e - 2), 5, {}};
        c1.dlog.assign(static_cast<std::size_t>(pe), -1);
        c2.dlog.assign(static_cast<std::size_t>(pe), -1);
        i64 x = 1;
        for (i64 b = 0; b < c2.order; ++b) {
          c1.dlog[static_cast<std::size_t>(x)] = 0;
          c2.dlog[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(b);
          i64 y = pe - x;  // -x
          c1.dlog[static_cast<std::size_t>(y)] = 1;
          c2.dlog[static_cast<std::size_t>(y)] = static_cast<std::int32_t>(b);
          x = mul_mod(x, 5, pe);
        }
        g->components.push_back(std::move(c1));
        g->components.push_back(std::move(c2));
      }
    } else {
      Component c{pe, pe - pe / p, primitive_root_prime_power(p, e), {}};
      fill_dlog(c);
      g->components.push_back(std::move(c));
    }
  }
  return g;
}

DirichletCharacter DirichletCharacter::trivial(i64 modulus) {
  if (modulus < 1) throw std::domain_error("trivial character: bad modulus");
  DirichletCharacter chi;
  chi.kind_ = Kind::Trivial;
  chi.modulus_ = modulus;
  chi.conductor_ = 1;
  chi.even_ = true;
  return chi;
}

DirichletCharacter DirichletCharacter::quadratic(i64 d) {
  require_quadratic_d(d);
  if (d == 1) return trivial(1);
  DirichletCharacter chi;
  chi.kind_ = Kind::Quadratic;
  chi.d_ = d;
  chi.modulus_ = kronecker_conductor(d);
  chi.conductor_ = chi.modulus_;
  chi.even_ = true;  // chi_d(-1) = 1 for d > 0
  return chi;
}

DirichletCharacter DirichletCharacter::product(i64 d1, i64 d2) {
  require_quadratic_d(d1);
  require_quadratic_d(d2);
  DirichletCharacter chi;
  chi.kind_ = Kind::Product;
  chi.d1_ = d1;
  chi.d2_ = d2;
  chi.modulus_ = std::lcm(kronecker_conductor(d1), kronecker_conductor(d2));
  i64 g = std::gcd(d1, d2);
  i64 kernel = (d1 / g) * (d2 / g);
  chi.conductor_ = kronecker_conductor(kernel);
  chi.even_ = true;
  return chi;
}

DirichletCharacter DirichletCharacter::general(i64 modulus,
                                               std::vector<i64> exponents) {
  DirichletCharacter chi;
  chi.kind_ = Kind::General;
  chi.modulus_ = modulus;
  chi.group_ = UnitGroup::build(modulus);
  if (exponents.size() != chi.group_->components.size())
    throw std::domain_error("general character: exponent count mismatch");
  chi.exponents_ = std::move(exponents);
  for (std::size_t i = 0; i < chi.exponents_.size(); ++i) {
    i64 ord = chi.group_->components[i].order;
    chi.exponents_[i] = ((chi.exponents_[i] % ord) + ord) % ord;
  }
  // conductor: product of local conductors
  i64 cond = 1;
  i64 cond2 = 1;
  for (std::size_t i = 0; i < chi.exponents_.size(); ++i) {
    const auto& comp = chi.group_->components[i];
    i64 k = chi.exponents_[i];
    if (k == 0) continue;
    i64 ord_chi = comp.order / std::gcd(k, comp.order);
    if (comp.prime_power % 2 == 0) {
      if (comp.generator == comp.prime_power - 1) {
        cond2 = std::max<i64>(cond2, 4);
      } else {
        // character on <5> of order 2^t has conductor 2^(t+2)
        cond2 = std::max<i64>(cond2, 4 * ord_chi);
      }
    } else {
      i64 p = factorize(comp.prime_power)[0].p;
      i64 pb = p;
      i64 phi = p - 1;
      while (phi % ord_chi != 0) {
        pb *= p;
        phi *= p;
      }
      cond *= pb;
    }
  }
  chi.conductor_ = cond * cond2;
  // parity: chi(-1)
  bool real = true;
  for (std::size_t i = 0; i < chi.exponents_.size(); ++i) {
    i64 k = chi.exponents_[i];
    i64 ord = chi.group_->components[i].order;
    if (k != 0 && 2 * k != ord) real = false;
  }
  chi.general_real_ = real;
  chi.even_ = std::abs(chi.eval(-1).real() - 1.0) < 1e-9;
  return chi;
}

i64 DirichletCharacter::quadratic_kernel() const {
  switch (kind_) {
    case Kind::Trivial:
      return 1;
    case Kind::Quadratic:
      return d_;
    case Kind::Product: {
      i64 g = std::gcd(d1_, d2_);
      return (d1_ / g) * (d2_ / g);
    }
    case Kind::General:
      if (exponents_.empty() ||
          std::all_of(exponents_.begin(), exponents_.end(),
                      [](i64 k) { return k == 0; }))
        return 1;
      throw std::domain_error("quadratic_kernel: general character");
  }
  return 1;
}

std::complex<double> DirichletCharacter::eval(i64 n) const {
  if (kind_ != Kind::General)
    return {static_cast<double>(real_eval(n)), 0.0};
  i64 m = modulus_;
  i64 r = ((n % m) + m) % m;
  if (m == 1) return {1.0, 0.0};
  if (std::gcd(r, m) != 1) return {0.0, 0.0};
  // exact rational phase, then one complex exponential
  i64 num = 0, den = 1;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const auto& comp = group_->components[i];
    i64 a = comp.dlog[static_cast<std::size_t>(r % comp.prime_power)];
    i64 k = exponents_[i];
    if (k == 0) continue;
    // accumulate k*a/order
    i64 g = std::gcd(den, comp.order);
    i64 nden = den / g * comp.order;
    num = num * (comp.order / g) + (k * a) % comp.order * (den / g);
    den = nden;
    num %= den;
  }
  return unit_phase(num, den);
}

int DirichletCharacter::real_eval(i64 n) const {
  switch (kind_) {
    case Kind::Trivial: {
      if (modulus_ == 1) return 1;
      i64 r = ((n % modulus_) + modulus_) % modulus_;
      return std::gcd(r, modulus_) == 1 ? 1 : 0;
    }
    case Kind::Quadratic:
      return kronecker_eval(d_, n);
    case Kind::Product:
      return kronecker_eval(d1_, n) * kronecker_eval(d2_, n);
    case Kind::General: {
      if (!general_real_)
        throw std::domain_error("real_eval: character is not real");
      std::complex<double> v = eval(n);
      if (std::abs(v.real()) < 0.5) return 0;
      return v.real() > 0 ? 1 : -1;
    }
  }
  return 0;
}

std::string DirichletCharacter::spec_string() const {
  switch (kind_) {
    case Kind::Trivial:
      return modulus_ == 1 ? "trivial" : "trivial:" + std::to_string(modulus_);
    case Kind::Quadratic:
      return "kronecker:" + std::to_string(d_);
    case Kind::Product:
      return "product:" + std::to_string(d1_) + "," + std::to_string(d2_);
    case Kind::General:
      return "general:" + std::to_string(modulus_);
  }
  return "trivial";
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
  return kind_ == o.kind_ && modulus_ == o.modulus_ && d_ == o.d_ &&
         d1_ == o.d1_ && d2_ == o.d2_ && exponents_ == o.exponents_;
}

i64 conductor_of_product(const DirichletCharacter& chi, i64 d) {
  require_quadratic_d(d);
  if (!chi.is_even())
    throw std::domain_error("conductor_of_product: chi must be even");
  i64 k;
  try {
    k = chi.quadratic_kernel();
  } catch (const std::domain_error&) {
    throw std::domain_error(
        "conductor_of_product: unsupported character kind");
  }
  i64 g = std::gcd(k, d);
  i64 kernel = (k / g) * (d / g);
  return kronecker_conductor(kernel);
}

bool represents_kronecker(const DirichletCharacter& chi, i64 f) {
  if (f == 1)
    return chi.is_real() && chi.conductor() == 1 && chi.modulus() == 1;
  if (!chi.is_real()) return false;
  try {
    return chi.quadratic_kernel() == f &&
           chi.conductor() == kronecker_conductor(f) &&
           chi.modulus() == chi.conductor();
  } catch (const std::domain_error&) {
    return false;
  }
}

DirichletCharacter parse_character(const std::string& spec) {
  if (spec == "trivial") return DirichletCharacter::trivial(1);
  auto starts = [&](const char* p) { return spec.rfind(p, 0) == 0; };
  try {
    if (starts("kronecker:")) {
      i64 d = std::stoll(spec.substr(10));
      return DirichletCharacter::quadratic(d);
    }
    if (starts("product:")) {
      std::string rest = spec.substr(8);
      auto comma = rest.find(',');
      if (comma == std::string::npos)
        throw std::domain_error("parse_character: product needs two values");
      i64 d1 = std::stoll(rest.substr(0, comma));
      i64 d2 = std::stoll(rest.substr(comma + 1));
      return DirichletCharacter::product(d1, d2);
    }
  } catch (const std::invalid_argument&) {
    throw std::domain_error("parse_character: malformed spec '" + spec + "'");
  } catch (const std::out_of_range&) {
    throw std::domain_error("parse_character: malformed spec '" + spec + "'");
  }
  throw std::domain_error("parse_character: unknown spec '" + spec + "'");
}

}  // namespace salie
