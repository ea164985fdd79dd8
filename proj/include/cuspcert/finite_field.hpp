#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cuspcert/fp_poly.hpp"

namespace cuspcert {

/// F_q = F_p[x]/(g) with g monic irreducible of degree d, q = p^d < 2^31.
///
/// Elements are encoded as integers in [0, q): the coordinate vector
/// (c_0, ..., c_{d-1}) in the power basis maps to sum c_i p^i. Comparing codes
/// is therefore lexicographic comparison of coordinates read from the highest
/// index down.
class FiniteField {
 public:
  using Code = std::uint32_t;

  // Irreducibility of g is certified with factor_mod_p; throws DomainError.
  FiniteField(std::uint64_t p, FpPoly modulus);

  static std::shared_ptr<const FiniteField> prime_field(std::uint64_t p);
  static std::shared_ptr<const FiniteField> make(std::uint64_t p, FpPoly modulus);
  // Some irreducible of degree d, the lexicographically smallest monic one.
  static std::shared_ptr<const FiniteField> extension(std::uint64_t p, int degree);

  [[nodiscard]] std::uint64_t characteristic() const { return p_; }
  [[nodiscard]] int degree() const { return d_; }
  [[nodiscard]] std::uint64_t order() const { return q_; }
  [[nodiscard]] const FpPoly& modulus() const { return g_; }

  [[nodiscard]] Code zero() const { return 0; }
  [[nodiscard]] Code one() const { return 1; }
  [[nodiscard]] Code from_int(long long v) const;
  [[nodiscard]] Code from_coeffs(const std::vector<std::uint64_t>& coeffs) const;
  [[nodiscard]] std::vector<std::uint64_t> coeffs(Code a) const;
  // Class of x in F_p[x]/(g).
  [[nodiscard]] Code generator_x() const;

  [[nodiscard]] Code add(Code a, Code b) const;
  [[nodiscard]] Code sub(Code a, Code b) const;
  [[nodiscard]] Code neg(Code a) const;
  [[nodiscard]] Code mul(Code a, Code b) const;
  [[nodiscard]] Code inv(Code a) const;
  [[nodiscard]] Code pow(Code a, std::uint64_t e) const;

  // Canonical half of F_q^*: x is positive iff code(x) < code(-x). In
  // characteristic 2 every element is positive.
  [[nodiscard]] bool is_positive(Code a) const { return a != 0 && (p_ == 2 || a < neg(a)); }

  [[nodiscard]] std::string format(Code a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b);

 private:
  [[nodiscard]] Code mul_slow(Code a, Code b) const;

  std::uint64_t p_;
  int d_;
  std::uint64_t q_;
  FpPoly g_;
  std::vector<Code> mul_table_;  // q*q entries, only when q is small
  std::vector<Code> inv_table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Value wrapper around a field code.
class FqElement {
 public:
  FqElement(FieldPtr field, FiniteField::Code code) : field_(std::move(field)), code_(code) {}

  [[nodiscard]] const FieldPtr& field() const { return field_; }
  [[nodiscard]] FiniteField::Code code() const { return code_; }
  [[nodiscard]] std::vector<std::uint64_t> coeffs() const { return field_->coeffs(code_); }
  [[nodiscard]] FqElement pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
  [[nodiscard]] FqElement inverse() const { return {field_, field_->inv(code_)}; }

  friend FqElement operator+(const FqElement& a, const FqElement& b);
  friend FqElement operator-(const FqElement& a, const FqElement& b);
  friend FqElement operator*(const FqElement& a, const FqElement& b);
  friend bool operator==(const FqElement& a, const FqElement& b);

 private:
  FieldPtr field_;
  FiniteField::Code code_;
};

}  // namespace cuspcert
