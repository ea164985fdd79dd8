#pragma once

#include <memory>
#include <vector>

#include "cuspcert/finite_field.hpp"
#include "cuspcert/fp_poly.hpp"
#include "cuspcert/order.hpp"

namespace cuspcert {

/// Prime of Z[t]/(f) above an unramified rational prime p, identified with
/// a monic irreducible factor of f mod p (Kummer-Dedekind).
struct PrimeIdeal {
  std::uint64_t p = 0;
  FpPoly local_factor;
  int inertia_degree = 0;
  int ramification_degree = 1;
  std::shared_ptr<const ZPoly> modulus;

  // Root r for a degree-one ideal (t - r); throws DomainError otherwise.
  [[nodiscard]] std::uint64_t root() const;
  // "(7, t - 1)" style label.
  [[nodiscard]] std::string label() const;
};

// One ideal per irreducible factor of f mod p, sorted by (degree, factor).
// Throws PreconditionError when p divides disc(f).
std::vector<PrimeIdeal> split_prime(std::shared_ptr<const ZPoly> f, std::uint64_t p);
std::vector<PrimeIdeal> split_prime(const ZPoly& f, std::uint64_t p);

std::vector<PrimeIdeal> degree_one_ideals(std::shared_ptr<const ZPoly> f, std::uint64_t p);

// The degree-one ideal (p, t - r); throws PreconditionError if f(r) != 0 mod p.
PrimeIdeal degree_one_ideal(std::shared_ptr<const ZPoly> f, std::uint64_t p, std::uint64_t r);

/// O -> O/ideal = F_p[x]/(local_factor), sending t to the class of x.
class ResidueMap {
 public:
  explicit ResidueMap(PrimeIdeal ideal);

  [[nodiscard]] const PrimeIdeal& ideal() const { return ideal_; }
  [[nodiscard]] const FieldPtr& field() const { return field_; }
  // Throws DomainError when e lives in another order.
  [[nodiscard]] FqElement operator()(const OrderElement& e) const;

 private:
  PrimeIdeal ideal_;
  FieldPtr field_;
  FiniteField::Code t_image_;
};

FqElement residue_of(const OrderElement& e, const PrimeIdeal& ideal);

}  // namespace cuspcert
