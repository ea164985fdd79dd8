#pragma once

#include <memory>

#include "cuspcert/zpoly.hpp"

namespace cuspcert {

/// Element of Z[t]/(f) for a monic f, kept as its reduced remainder.
///
/// Elements sharing a ring hold the same modulus pointer; mixing rings is a
/// DomainError.
class OrderElement {
 public:
  OrderElement(ZPoly rep, std::shared_ptr<const ZPoly> modulus);

  static OrderElement zero(std::shared_ptr<const ZPoly> modulus) { return {ZPoly{}, std::move(modulus)}; }
  static OrderElement one(std::shared_ptr<const ZPoly> modulus) { return {ZPoly{1}, std::move(modulus)}; }

  [[nodiscard]] const ZPoly& rep() const { return rep_; }
  [[nodiscard]] const ZPoly& modulus() const { return *modulus_; }
  [[nodiscard]] const std::shared_ptr<const ZPoly>& modulus_ptr() const { return modulus_; }
  [[nodiscard]] bool is_zero() const { return rep_.is_zero(); }

  friend OrderElement operator+(const OrderElement& a, const OrderElement& b);
  friend OrderElement operator-(const OrderElement& a, const OrderElement& b);
  friend OrderElement operator*(const OrderElement& a, const OrderElement& b);
  friend OrderElement operator-(const OrderElement& a);
  friend bool operator==(const OrderElement& a, const OrderElement& b);

 private:
  ZPoly rep_;
  std::shared_ptr<const ZPoly> modulus_;
};

// The unique remainder of a modulo a monic f. Throws DomainError otherwise.
OrderElement order_reduce(const ZPoly& a, std::shared_ptr<const ZPoly> f);
OrderElement order_reduce(const ZPoly& a, const ZPoly& f);

}  // namespace cuspcert
