#include "cuspcert/zpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cuspcert/error.hpp"

namespace cuspcert {

ZPoly::ZPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

ZPoly ZPoly::constant(const BigInt& c) { return ZPoly(std::vector<BigInt>{c}); }

ZPoly ZPoly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& ZPoly::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt ZPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

ZPoly ZPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return ZPoly(std::move(d));
}

BigInt ZPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::uint64_t ZPoly::evaluate_mod(std::uint64_t r, std::uint64_t m) const {
  // Horner with 128-bit products; m is at most a few million here.
  unsigned __int128 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    BigInt c = *it % m;
    if (c < 0) c += m;
    acc = (acc * r + c.get_ui()) % m;
  }
  return static_cast<std::uint64_t>(acc);
}

ZPoly ZPoly::rem_monic(const ZPoly& modulus) const {
  if (!modulus.is_monic()) throw DomainError("reduction modulus must be monic");
  const int n = modulus.degree();
  std::vector<BigInt> r = coeffs_;
  for (int i = degree(); i >= n; --i) {
    const BigInt c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= n; ++j) r[static_cast<std::size_t>(i - n + j)] -= c * modulus.coeffs_[static_cast<std::size_t>(j)];
  }
  if (static_cast<int>(r.size()) > n) r.resize(static_cast<std::size_t>(std::max(n, 0)));
  return ZPoly(std::move(r));
}

std::string ZPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (c != 1 || i == 0) out << c.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return ZPoly(std::move(r));
}

ZPoly operator-(const ZPoly& a) {
  std::vector<BigInt> r = a.coeffs_;
  for (auto& c : r) c = -c;
  return ZPoly(std::move(r));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ZPoly(std::move(r));
}

namespace {

using QPoly = std::vector<BigRational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_rational(const ZPoly& f) {
  QPoly r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) r.emplace_back(c);
  return r;
}

QPoly rem(QPoly a, const QPoly& b) {
  const std::size_t n = b.size() - 1;
  while (a.size() > n && !a.empty()) {
    const BigRational c = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t j = 0; j <= n; ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

BigRational pow(const BigRational& base, std::size_t e) {
  BigRational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

BigInt resultant(const ZPoly& f, const ZPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  // Res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) Res(b, r), r = a mod b.
  QPoly a = to_rational(f);
  QPoly b = to_rational(g);
  BigRational acc = 1;
  while (true) {
    const std::size_t da = a.size() - 1;
    const std::size_t db = b.size() - 1;
    if (db == 0) {
      acc *= pow(b[0], da);
      break;
    }
    QPoly r = rem(a, b);
    if (r.empty()) return 0;
    const std::size_t dr = r.size() - 1;
    if ((da * db) % 2 == 1) acc = -acc;
    acc *= pow(b.back(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
  acc.canonicalize();
  if (acc.get_den() != 1) throw InternalError("resultant of integer polynomials is not an integer");
  return acc.get_num();
}

BigInt poly_discriminant(const ZPoly& f) {
  if (f.degree() < 1) throw DomainError("discriminant of a constant polynomial");
  const long n = f.degree();
  BigInt r = resultant(f, f.derivative());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  BigInt q;
  mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  return q;
}

}  // namespace cuspcert
