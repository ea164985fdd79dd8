#include "cuspcert/splitting.hpp"

#include "cuspcert/error.hpp"

namespace cuspcert {

std::uint64_t PrimeIdeal::root() const {
  if (inertia_degree != 1) throw DomainError("ideal " + label() + " has no root: inertia degree > 1");
  return (p - local_factor.coeff(0)) % p;
}

std::string PrimeIdeal::label() const { return "(" + std::to_string(p) + ", " + local_factor.to_string("t") + ")"; }

std::vector<PrimeIdeal> split_prime(std::shared_ptr<const ZPoly> f, std::uint64_t p) {
  const BigInt disc = poly_discriminant(*f);
  if (disc % p == 0)
    throw PreconditionError(std::to_string(p) + " divides disc(f) = " + disc.get_str() + "; ramified primes unsupported");
  std::vector<PrimeIdeal> ideals;
  for (auto& [factor, mult] : factor_mod_p(*f, p)) {
    if (mult != 1) throw InternalError("repeated factor mod an unramified prime");
    const int deg = factor.degree();
    ideals.push_back({p, std::move(factor), deg, 1, f});
  }
  return ideals;
}

std::vector<PrimeIdeal> split_prime(const ZPoly& f, std::uint64_t p) {
  return split_prime(std::make_shared<const ZPoly>(f), p);
}

std::vector<PrimeIdeal> degree_one_ideals(std::shared_ptr<const ZPoly> f, std::uint64_t p) {
  std::vector<PrimeIdeal> out;
  for (auto& ideal : split_prime(std::move(f), p))
    if (ideal.inertia_degree == 1) out.push_back(std::move(ideal));
  return out;
}

PrimeIdeal degree_one_ideal(std::shared_ptr<const ZPoly> f, std::uint64_t p, std::uint64_t r) {
  const FpPoly linear(p, {(p - r % p) % p, 1});
  for (auto& ideal : split_prime(f, p))
    if (ideal.local_factor == linear) return ideal;
  throw PreconditionError("t - " + std::to_string(r) + " does not divide f mod " + std::to_string(p));
}

ResidueMap::ResidueMap(PrimeIdeal ideal) : ideal_(std::move(ideal)) {
  field_ = ideal_.inertia_degree == 1 ? FiniteField::prime_field(ideal_.p) : FiniteField::make(ideal_.p, ideal_.local_factor);
  t_image_ = ideal_.inertia_degree == 1 ? static_cast<FiniteField::Code>(ideal_.root()) : field_->generator_x();
}

FqElement ResidueMap::operator()(const OrderElement& e) const {
  if (!(e.modulus() == *ideal_.modulus)) throw DomainError("element and ideal come from different orders");
  const auto& f = *field_;
  FiniteField::Code acc = 0;
  const auto& c = e.rep().coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    BigInt r = *it % ideal_.p;
    if (r < 0) r += ideal_.p;
    acc = f.add(f.mul(acc, t_image_), static_cast<FiniteField::Code>(r.get_ui()));
  }
  return {field_, acc};
}

FqElement residue_of(const OrderElement& e, const PrimeIdeal& ideal) { return ResidueMap(ideal)(e); }

}  // namespace cuspcert
