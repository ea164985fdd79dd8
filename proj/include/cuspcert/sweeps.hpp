#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cuspcert/psl2.hpp"
#include "cuspcert/zpoly.hpp"

namespace cuspcert {

// Primes p = 5 mod 168, p <= bound, p not dividing forbidden_divisor (0 means
// no restriction). Throws CapacityError for bound > 10^7.
std::vector<std::uint64_t> find_admissible_primes(std::uint64_t bound, const BigInt& forbidden_divisor = 0);

// N(p, f) = (p^(3f) - p^f) / 2, exactly and modulo m (p odd).
BigInt n_value(std::uint64_t p, int f);
std::uint64_t n_mod(std::uint64_t p, int f, std::uint64_t m);

struct NDivisibilityRow {
  std::uint64_t p;
  int f;
  std::uint64_t n_mod_7;
  bool asserted;  // gcd(f, 3) = 1: 7 must not divide N
  bool seven_divides;
  [[nodiscard]] bool pass() const { return !asserted || !seven_divides; }
};

std::vector<NDivisibilityRow> sweep_n_divisibility(std::uint64_t p_max, const std::vector<int>& f_set);

/// Decides whether {g^N : g in PSL(2,7)} generates PSL(2,7). N is reduced
/// modulo the group exponent, which is computed from the element orders.
class NthPowerOracle {
 public:
  NthPowerOracle();

  [[nodiscard]] std::size_t exponent() const { return exponent_; }
  [[nodiscard]] const FiniteGroup& group() const { return *group_; }
  [[nodiscard]] bool generates(const BigInt& n) const;
  [[nodiscard]] bool generates(std::uint64_t n) const { return generates(BigInt(static_cast<unsigned long>(n))); }
  // Size of the subgroup generated by the N-th powers.
  [[nodiscard]] std::size_t power_closure_order(std::uint64_t residue) const;

 private:
  GroupPtr group_;
  std::size_t exponent_;
  std::vector<bool> generates_by_residue_;
};

struct NthPowerRow {
  std::uint64_t p;
  int f;
  std::uint64_t n_mod_exponent;
  bool generates;
};

struct NthPowerSweep {
  std::size_t exponent;
  std::vector<NthPowerRow> rows;
  std::set<std::uint64_t> residues;
  [[nodiscard]] bool all_pass() const;
};

// Only (p, f) with gcd(f, 3) = 1 are admissible rows.
NthPowerSweep sweep_nth_power_generation(const NthPowerOracle& oracle, std::uint64_t p_max,
                                         const std::vector<int>& f_set);

// Degree of the congruence cover over the base: 11 |PSL(2,q)| = (11/2)(q^3 - q).
BigInt cover_degree(const BigInt& q);

}  // namespace cuspcert
