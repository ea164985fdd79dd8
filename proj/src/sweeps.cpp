#include "cuspcert/sweeps.hpp"

#include <numeric>

#include "cuspcert/error.hpp"
#include "cuspcert/fp_poly.hpp"

namespace cuspcert {

std::vector<std::uint64_t> find_admissible_primes(std::uint64_t bound, const BigInt& forbidden_divisor) {
  if (bound > 10'000'000) throw CapacityError("admissible prime search limited to bound <= 10^7");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 5; p <= bound; p += 168) {
    if (!is_prime(p)) continue;
    if (forbidden_divisor != 0 && forbidden_divisor % p == 0) continue;
    out.push_back(p);
  }
  return out;
}

BigInt n_value(std::uint64_t p, int f) {
  BigInt pf;
  mpz_ui_pow_ui(pf.get_mpz_t(), p, static_cast<unsigned long>(f));
  return (pf * pf * pf - pf) / 2;
}

std::uint64_t n_mod(std::uint64_t p, int f, std::uint64_t m) {
  // p^(3f) - p^f is even, so its residue mod 2m halves to N mod m.
  const std::uint64_t two_m = 2 * m;
  const std::uint64_t a = mod_pow(p, 3 * static_cast<std::uint64_t>(f), two_m);
  const std::uint64_t b = mod_pow(p, static_cast<std::uint64_t>(f), two_m);
  return ((a + two_m - b) % two_m) / 2;
}

std::vector<NDivisibilityRow> sweep_n_divisibility(std::uint64_t p_max, const std::vector<int>& f_set) {
  std::vector<NDivisibilityRow> rows;
  for (auto p : find_admissible_primes(p_max))
    for (int f : f_set) {
      const std::uint64_t r = n_mod(p, f, 7);
      rows.push_back({p, f, r, std::gcd(f, 3) == 1, r == 0});
    }
  return rows;
}

NthPowerOracle::NthPowerOracle() : group_(enumerate_group(7)), exponent_(group_exponent(*group_)) {
  generates_by_residue_.resize(exponent_);
  for (std::uint64_t r = 0; r < exponent_; ++r) generates_by_residue_[r] = power_closure_order(r) == group_->order();
}

std::size_t NthPowerOracle::power_closure_order(std::uint64_t residue) const {
  std::vector<ElementId> powers;
  for (ElementId g = 0; g < group_->order(); ++g) powers.push_back(group_->pow(g, static_cast<long long>(residue)));
  return subgroup_closure(*group_, powers).order();
}

bool NthPowerOracle::generates(const BigInt& n) const {
  BigInt r = n % static_cast<unsigned long>(exponent_);
  if (r < 0) r += static_cast<unsigned long>(exponent_);
  return generates_by_residue_[r.get_ui()];
}

bool NthPowerSweep::all_pass() const {
  for (const auto& r : rows)
    if (!r.generates) return false;
  return true;
}

NthPowerSweep sweep_nth_power_generation(const NthPowerOracle& oracle, std::uint64_t p_max,
                                         const std::vector<int>& f_set) {
  NthPowerSweep sweep{oracle.exponent(), {}, {}};
  for (auto p : find_admissible_primes(p_max))
    for (int f : f_set) {
      if (std::gcd(f, 3) != 1) continue;
      const std::uint64_t r = n_mod(p, f, oracle.exponent());
      sweep.rows.push_back({p, f, r, oracle.generates(r)});
      sweep.residues.insert(r);
    }
  return sweep;
}

BigInt cover_degree(const BigInt& q) { return 11 * (q * q * q - q) / 2; }

}  // namespace cuspcert
