#include "cuspcert/order.hpp"

#include "cuspcert/error.hpp"

namespace cuspcert {

namespace {

void require_same_ring(const OrderElement& a, const OrderElement& b) {
  if (a.modulus_ptr() != b.modulus_ptr() && !(a.modulus() == b.modulus()))
    throw DomainError("order elements belong to different rings");
}

}  // namespace

OrderElement::OrderElement(ZPoly rep, std::shared_ptr<const ZPoly> modulus) : modulus_(std::move(modulus)) {
  if (!modulus_ || !modulus_->is_monic()) throw DomainError("order modulus must be monic");
  rep_ = rep.degree() >= modulus_->degree() ? rep.rem_monic(*modulus_) : std::move(rep);
}

OrderElement operator+(const OrderElement& a, const OrderElement& b) {
  require_same_ring(a, b);
  return {a.rep_ + b.rep_, a.modulus_};
}

OrderElement operator-(const OrderElement& a, const OrderElement& b) {
  require_same_ring(a, b);
  return {a.rep_ - b.rep_, a.modulus_};
}

OrderElement operator*(const OrderElement& a, const OrderElement& b) {
  require_same_ring(a, b);
  return {a.rep_ * b.rep_, a.modulus_};
}

OrderElement operator-(const OrderElement& a) { return {-a.rep_, a.modulus_}; }

bool operator==(const OrderElement& a, const OrderElement& b) {
  return a.rep_ == b.rep_ && (a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_);
}

OrderElement order_reduce(const ZPoly& a, std::shared_ptr<const ZPoly> f) { return {a, std::move(f)}; }

OrderElement order_reduce(const ZPoly& a, const ZPoly& f) { return {a, std::make_shared<const ZPoly>(f)}; }

}  // namespace cuspcert
