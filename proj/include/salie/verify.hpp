#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "salie/arith.hpp"

namespace salie {

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // worst residual / excess ratio seen, scale per check
  std::string detail;
};

// Exponential-sum identities.
CheckResult check_fast_matches_direct(i64 c_limit = 5000, int pairs_per_c = 50,
                                      std::uint64_t seed = 0x5a11e5);
CheckResult check_gauss_closed(i64 c_limit = 5000);
CheckResult check_prime_closed_form(i64 p_limit = 1000, int random_pairs = 20,
                                    std::uint64_t seed = 0x5a11e5);
CheckResult check_short_sum_relation(int samples = 500, std::uint64_t seed = 0x5a11e5);
// Reality of K2 conj(eps_c), symmetry in (m,n), divisor bound: three results.
std::vector<CheckResult> check_sum_properties(i64 samples = 100000,
                                              std::uint64_t seed = 0x5a11e5);
CheckResult check_t_kernel_classes(i64 c_limit = 2000, i64 mn_limit = 200,
                                   int raw_samples = 200,
                                   std::uint64_t seed = 0x5a11e5);

// Theta basis.
CheckResult check_basis_norms(i64 level_limit = 1000);
CheckResult check_basis_enumeration(i64 level_limit = 1000);
CheckResult check_gram(i64 u_limit = 500);
CheckResult check_twist_conductors(i64 level_limit = 1000);

// Coefficient pairing.
CheckResult check_spectral_identity(i64 level_limit = 2000, i64 index_limit = 500);
CheckResult check_spectral_vanishing(int samples = 300, std::uint64_t seed = 0x5a11e5);
CheckResult check_zeta_unit_pair();

// Moment constants and the series engine.
CheckResult check_preset_constants();
CheckResult check_corollary_constants();
CheckResult check_constant_pairing_identity(i64 level_limit = 400, i64 index_limit = 200);
CheckResult check_decomposition_round_trip(int samples = 400,
                                           std::uint64_t seed = 0x5a11e5);
CheckResult check_series_determinism();
CheckResult check_series_resume();

std::vector<CheckResult> verify_sums();
std::vector<CheckResult> verify_basis();
std::vector<CheckResult> verify_spectral();
std::vector<CheckResult> verify_moments();
std::vector<CheckResult> verify_all();

}  // namespace salie
