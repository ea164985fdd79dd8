#include "cuspcert/finite_field.hpp"

#include <sstream>

#include "cuspcert/error.hpp"

namespace cuspcert {

namespace {

constexpr std::uint64_t kMaxFieldOrder = (1ULL << 31) - 1;
constexpr std::uint64_t kTableLimit = 1024;

}  // namespace

FiniteField::FiniteField(std::uint64_t p, FpPoly modulus) : p_(p), g_(modulus.monic()) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (g_.prime() != p) throw DomainError("field modulus lives over a different prime");
  d_ = g_.degree();
  if (d_ < 1) throw DomainError("field modulus must have positive degree");
  if (d_ > 1 && !is_irreducible(g_)) throw DomainError("field modulus " + g_.to_string("x") + " is reducible");
  q_ = 1;
  for (int i = 0; i < d_; ++i) {
    q_ *= p_;
    if (q_ > kMaxFieldOrder) throw CapacityError("field order exceeds 2^31");
  }
  if (q_ <= kTableLimit) {
    mul_table_.resize(q_ * q_);
    for (Code a = 0; a < q_; ++a)
      for (Code b = 0; b < q_; ++b) mul_table_[a * q_ + b] = mul_slow(a, b);
    inv_table_.assign(q_, 0);
    for (Code a = 1; a < q_; ++a)
      for (Code b = 1; b < q_; ++b)
        if (mul_table_[a * q_ + b] == 1) {
          inv_table_[a] = b;
          break;
        }
  }
}

std::shared_ptr<const FiniteField> FiniteField::prime_field(std::uint64_t p) {
  return std::make_shared<const FiniteField>(p, FpPoly::x(p));
}

std::shared_ptr<const FiniteField> FiniteField::make(std::uint64_t p, FpPoly modulus) {
  return std::make_shared<const FiniteField>(p, std::move(modulus));
}

std::shared_ptr<const FiniteField> FiniteField::extension(std::uint64_t p, int degree) {
  if (degree == 1) return prime_field(p);
  // Enumerate monic candidates x^d + lower terms in increasing code order.
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1);
    std::uint64_t v = code;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<std::size_t>(i)] = v % p;
      v /= p;
    }
    c.back() = 1;
    FpPoly g(p, std::move(c));
    if (g.coeff(0) != 0 && is_irreducible(g)) return make(p, std::move(g));
  }
  throw InternalError("no irreducible polynomial found");
}

FiniteField::Code FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<Code>(r);
}

FiniteField::Code FiniteField::from_coeffs(const std::vector<std::uint64_t>& coeffs) const {
  // Reduce modulo g first so callers may pass any polynomial.
  FpPoly r = FpPoly(p_, coeffs) % g_;
  std::uint64_t code = 0;
  for (int i = r.degree(); i >= 0; --i) code = code * p_ + r.coeff(i);
  return static_cast<Code>(code);
}

std::vector<std::uint64_t> FiniteField::coeffs(Code a) const {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(d_));
  std::uint64_t v = a;
  for (auto& x : c) {
    x = v % p_;
    v /= p_;
  }
  return c;
}

FiniteField::Code FiniteField::generator_x() const { return from_coeffs({0, 1}); }

FiniteField::Code FiniteField::add(Code a, Code b) const {
  if (d_ == 1) return static_cast<Code>((static_cast<std::uint64_t>(a) + b) % p_);
  std::uint64_t r = 0;
  std::uint64_t scale = 1;
  for (int i = 0; i < d_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a = static_cast<Code>(a / p_);
    b = static_cast<Code>(b / p_);
    scale *= p_;
  }
  return static_cast<Code>(r);
}

FiniteField::Code FiniteField::neg(Code a) const {
  if (d_ == 1) return a == 0 ? 0 : static_cast<Code>(p_ - a);
  std::uint64_t r = 0;
  std::uint64_t scale = 1;
  for (int i = 0; i < d_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a = static_cast<Code>(a / p_);
    scale *= p_;
  }
  return static_cast<Code>(r);
}

FiniteField::Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

FiniteField::Code FiniteField::mul_slow(Code a, Code b) const {
  if (d_ == 1) return static_cast<Code>(static_cast<std::uint64_t>(a) * b % p_);
  const FpPoly pa(p_, coeffs(a));
  const FpPoly pb(p_, coeffs(b));
  return from_coeffs((pa * pb % g_).coeffs());
}

FiniteField::Code FiniteField::mul(Code a, Code b) const {
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return mul_slow(a, b);
}

FiniteField::Code FiniteField::pow(Code a, std::uint64_t e) const {
  Code r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Code FiniteField::inv(Code a) const {
  if (a == 0) throw DomainError("inverse of zero in F_q");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

std::string FiniteField::format(Code a) const {
  if (d_ == 1) return std::to_string(a);
  return FpPoly(p_, coeffs(a)).to_string("x");
}

bool operator==(const FiniteField& a, const FiniteField& b) {
  if (&a == &b) return true;
  if (a.p_ != b.p_ || a.d_ != b.d_) return false;
  return a.d_ == 1 || a.g_ == b.g_;
}

namespace {

void require_same_field(const FqElement& a, const FqElement& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field())) throw DomainError("elements of different fields");
}

}  // namespace

FqElement operator+(const FqElement& a, const FqElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->add(a.code_, b.code_)};
}

FqElement operator-(const FqElement& a, const FqElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->sub(a.code_, b.code_)};
}

FqElement operator*(const FqElement& a, const FqElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_->mul(a.code_, b.code_)};
}

bool operator==(const FqElement& a, const FqElement& b) {
  return a.code_ == b.code_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
}

}  // namespace cuspcert
