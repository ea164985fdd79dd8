#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cuspcert/zpoly.hpp"

namespace cuspcert {

/// Polynomial over F_p, p an odd or even prime below 2^31, constant term first.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static FpPoly from_zpoly(const ZPoly& f, std::uint64_t p);
  static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }
  static FpPoly constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

  [[nodiscard]] std::uint64_t prime() const { return p_; }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  [[nodiscard]] const std::vector<std::uint64_t>& coeffs() const { return c_; }
  [[nodiscard]] std::uint64_t coeff(int i) const;
  [[nodiscard]] std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  [[nodiscard]] FpPoly monic() const;
  [[nodiscard]] FpPoly derivative() const;
  [[nodiscard]] std::uint64_t evaluate(std::uint64_t x) const;
  // Lift to Z with coefficients in [0, p).
  [[nodiscard]] ZPoly to_zpoly() const;
  [[nodiscard]] std::string to_string(const std::string& var = "t") const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  // Deterministic order: degree, then coefficients from the top down.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

  // Quotient and remainder; divisor must be nonzero.
  friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

 private:
  void trim();

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);

// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
// base^e mod m, e given as an arbitrary-precision exponent.
FpPoly pow_mod(const FpPoly& base, const BigInt& e, const FpPoly& m);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  int multiplicity = 1;
  friend bool operator==(const FpFactor&, const FpFactor&) = default;
};

// Complete factorization of f mod p into monic irreducibles: squarefree
// split, distinct-degree split, then Cantor-Zassenhaus equal-degree split
// driven by a fixed-seed generator. Output sorted by (degree, coefficients).
// Throws DegenerateInputError if f vanishes mod p, DomainError if p is not prime.
std::vector<FpFactor> factor_mod_p(const ZPoly& f, std::uint64_t p);
std::vector<FpFactor> factor_mod_p(const FpPoly& f);

bool is_irreducible(const FpPoly& f);

inline constexpr std::uint64_t kRootSearchLimit = 1'000'000;

// All r in [0, p) with f(r) = 0 mod p, ascending, by exhaustive evaluation.
// Throws CapacityError above kRootSearchLimit.
std::vector<std::uint64_t> find_linear_roots(const ZPoly& f, std::uint64_t p);

}  // namespace cuspcert
