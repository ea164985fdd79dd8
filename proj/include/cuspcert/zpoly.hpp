#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cuspcert {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense univariate polynomial over Z, coefficients stored constant term first.
///
/// The coefficient vector never has a zero leading entry; the zero
/// polynomial is the empty vector and has degree -1.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<BigInt> coeffs);
  ZPoly(std::initializer_list<long> coeffs);

  static ZPoly constant(const BigInt& c);
  static ZPoly monomial(const BigInt& c, int degree);
  static ZPoly x() { return monomial(1, 1); }

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }
  [[nodiscard]] const BigInt& leading() const;
  // Coefficient of x^i; zero beyond the degree.
  [[nodiscard]] BigInt coeff(int i) const;

  [[nodiscard]] ZPoly derivative() const;
  [[nodiscard]] BigInt evaluate(const BigInt& x) const;
  // Residue of f(r) modulo m, r in [0, m).
  [[nodiscard]] std::uint64_t evaluate_mod(std::uint64_t r, std::uint64_t m) const;

  // Remainder on division by a monic polynomial.
  [[nodiscard]] ZPoly rem_monic(const ZPoly& modulus) const;

  // Human-readable, highest degree first, variable name configurable.
  [[nodiscard]] std::string to_string(const std::string& var = "t") const;

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f). Throws DomainError for
// constant f.
BigInt poly_discriminant(const ZPoly& f);

// Res(f, g) computed through the Euclidean remainder sequence over Q.
BigInt resultant(const ZPoly& f, const ZPoly& g);

}  // namespace cuspcert
