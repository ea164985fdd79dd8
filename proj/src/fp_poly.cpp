#include "cuspcert/fp_poly.hpp"

#include <algorithm>
#include <sstream>

#include "cuspcert/error.hpp"

namespace cuspcert {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t kFactorSeed = 0x5eed'c0de'2024'0917ULL;

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero in F_p");
  return mod_pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::from_zpoly(const ZPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& z : f.coeffs()) {
    BigInt r = z % p;
    if (r < 0) r += p;
    c.push_back(r.get_ui());
  }
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = mod_inverse(leading(), p_);
  std::vector<std::uint64_t> c = c_;
  for (auto& x : c) x = mulmod(x, inv, p_);
  return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::derivative() const {
  if (degree() < 1) return FpPoly(p_, {});
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mulmod(c_[i], i % p_, p_);
  return FpPoly(p_, std::move(d));
}

std::uint64_t FpPoly::evaluate(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
  return acc;
}

ZPoly FpPoly::to_zpoly() const {
  std::vector<BigInt> c;
  c.reserve(c_.size());
  for (auto x : c_) c.emplace_back(static_cast<unsigned long>(x));
  return ZPoly(std::move(c));
}

std::string FpPoly::to_string(const std::string& var) const {
  // Signed representatives read better for small factors such as t - 1.
  std::vector<BigInt> c;
  for (auto x : c_) {
    long v = static_cast<long>(x);
    if (x > p_ / 2) v -= static_cast<long>(p_);
    c.emplace_back(v);
  }
  return ZPoly(std::move(c)).to_string(var);
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % a.p_;
  return FpPoly(a.p_, std::move(r));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (a.coeff(static_cast<int>(i)) + a.p_ - b.coeff(static_cast<int>(i))) % a.p_;
  return FpPoly(a.p_, std::move(r));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  }
  return FpPoly(a.p_, std::move(r));
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const std::uint64_t p = a.p_;
  if (a.degree() < b.degree()) return {FpPoly(p, {}), a};
  const std::uint64_t inv = mod_inverse(b.leading(), p);
  std::vector<std::uint64_t> r = a.c_;
  std::vector<std::uint64_t> q(a.c_.size() - b.c_.size() + 1, 0);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const std::uint64_t c = mulmod(r[static_cast<std::size_t>(i)], inv, p);
    if (!c) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = (slot + p - mulmod(c, b.c_[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly pow_mod(const FpPoly& base, const BigInt& e, const FpPoly& m) {
  FpPoly result = FpPoly::constant(m.prime(), 1) % m;
  FpPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul_mod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul_mod(result, b, m);
  }
  return result;
}

namespace {

FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.prime();
  std::vector<std::uint64_t> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
  return FpPoly(p, std::move(c));
}

// (squarefree part, multiplicity) pairs whose product with multiplicities is monic f.
void squarefree_split(const FpPoly& f, int scale, std::vector<std::pair<FpPoly, int>>& out) {
  const std::uint64_t p = f.prime();
  if (f.degree() < 1) return;
  const FpPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_split(pth_root(f), scale * static_cast<int>(p), out);
    return;
  }
  FpPoly c = gcd(f, d);
  FpPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = (w / y).monic();
    if (fac.degree() > 0) out.emplace_back(fac, i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  c = c.monic();
  if (!c.is_one()) squarefree_split(pth_root(c), scale * static_cast<int>(p), out);
}

std::vector<std::pair<FpPoly, int>> distinct_degree_split(const FpPoly& f) {
  const std::uint64_t p = f.prime();
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly rest = f;
  const FpPoly x = FpPoly::x(p);
  FpPoly h = x % rest;
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = pow_mod(h, BigInt(static_cast<unsigned long>(p)), rest);
    FpPoly g = gcd(rest, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

FpPoly random_poly(std::uint64_t p, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(below_degree));
  for (auto& x : c) x = dist(rng);
  return FpPoly(p, std::move(c));
}

void equal_degree_split(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const std::uint64_t p = g.prime();
  BigInt half;
  if (p != 2) {
    mpz_ui_pow_ui(half.get_mpz_t(), p, static_cast<unsigned long>(d));
    half = (half - 1) / 2;
  }
  while (true) {
    const FpPoly a = random_poly(p, g.degree(), rng);
    if (a.degree() < 1) continue;
    FpPoly b;
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)) lands in F_2 on every factor.
      FpPoly term = a % g;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = mul_mod(term, term, g);
        b = b + term;
      }
    } else {
      b = pow_mod(a, half, g) - FpPoly::constant(p, 1);
    }
    const FpPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FpFactor> factor_mod_p(const FpPoly& f) {
  if (f.is_zero()) throw DegenerateInputError("polynomial vanishes modulo " + std::to_string(f.prime()));
  std::vector<FpFactor> result;
  if (f.degree() == 0) return result;
  std::mt19937_64 rng(kFactorSeed);
  std::vector<std::pair<FpPoly, int>> sqf;
  squarefree_split(f.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree_split(part)) {
      std::vector<FpPoly> irreducibles;
      equal_degree_split(block, d, rng, irreducibles);
      for (auto& g : irreducibles) result.push_back({std::move(g), mult});
    }
  }
  std::sort(result.begin(), result.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  return result;
}

std::vector<FpFactor> factor_mod_p(const ZPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return factor_mod_p(FpPoly::from_zpoly(f, p));
}

bool is_irreducible(const FpPoly& f) {
  if (f.degree() < 1) return false;
  const auto factors = factor_mod_p(f);
  return factors.size() == 1 && factors[0].multiplicity == 1;
}

std::vector<std::uint64_t> find_linear_roots(const ZPoly& f, std::uint64_t p) {
  if (p > kRootSearchLimit) throw CapacityError("root search limited to p <= 10^6");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const FpPoly fp = FpPoly::from_zpoly(f, p);
  std::vector<std::uint64_t> roots;
  for (std::uint64_t r = 0; r < p; ++r)
    if (fp.evaluate(r) == 0) roots.push_back(r);
  return roots;
}

}  // namespace cuspcert
