#include "cuspcert/psl2.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cuspcert/error.hpp"
#include "cuspcert/kernels.hpp"

namespace cuspcert {

namespace {

constexpr std::size_t kCayleyTableLimit = 2500;

ProjMat2::Entries negate(const FiniteField& f, const ProjMat2::Entries& m) {
  return {f.neg(m[0]), f.neg(m[1]), f.neg(m[2]), f.neg(m[3])};
}

ProjMat2::Entries raw_mul(const FiniteField& f, const ProjMat2::Entries& a, const ProjMat2::Entries& b) {
  return {f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])), f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
          f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])), f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3]))};
}

ProjMat2::Entries sign_normalize(const FiniteField& f, const ProjMat2::Entries& m) {
  for (auto x : m)
    if (x != 0) return f.is_positive(x) ? m : negate(f, m);
  throw DomainError("zero matrix");
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a != b && !(*a == *b)) throw DomainError("matrices over different fields");
}

}  // namespace

bool ProjMat2::is_identity() const { return e_[0] == 1 && e_[1] == 0 && e_[2] == 0 && e_[3] == 1; }

std::string ProjMat2::to_string() const {
  std::ostringstream out;
  out << "[[" << field_->format(e_[0]) << ", " << field_->format(e_[1]) << "], [" << field_->format(e_[2]) << ", "
      << field_->format(e_[3]) << "]]";
  return out.str();
}

bool operator==(const ProjMat2& a, const ProjMat2& b) {
  return a.e_ == b.e_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
}

ProjMat2 canonicalize(const FieldPtr& field, const ProjMat2::Entries& m) {
  const auto& f = *field;
  for (auto x : m)
    if (x >= f.order()) throw DomainError("matrix entry is not a field element");
  const auto det = f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
  if (det != f.one()) throw DomainError("matrix determinant is " + f.format(det) + ", not 1");
  return {field, sign_normalize(f, m)};
}

ProjMat2 make_proj(const FieldPtr& field, long long a11, long long a12, long long a21, long long a22) {
  return canonicalize(field, {field->from_int(a11), field->from_int(a12), field->from_int(a21), field->from_int(a22)});
}

ProjMat2 proj_identity(const FieldPtr& field) { return make_proj(field, 1, 0, 0, 1); }

ProjMat2 proj_mul(const ProjMat2& a, const ProjMat2& b) {
  require_same_field(a.field(), b.field());
  return canonicalize(a.field(), raw_mul(*a.field(), a.entries(), b.entries()));
}

ProjMat2 proj_inverse(const ProjMat2& m) {
  const auto& f = *m.field();
  return canonicalize(m.field(), {m[3], f.neg(m[1]), f.neg(m[2]), m[0]});
}

ProjMat2 proj_pow(const ProjMat2& m, long long n) {
  ProjMat2 base = n < 0 ? proj_inverse(m) : m;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  ProjMat2 r = proj_identity(m.field());
  while (e) {
    if (e & 1) r = proj_mul(r, base);
    base = proj_mul(base, base);
    e >>= 1;
  }
  return r;
}

bool is_parabolic(const ProjMat2& m) {
  if (m.is_identity()) return false;
  const auto& f = *m.field();
  const auto two = f.from_int(2);
  const auto t = m.trace();
  return t == two || t == f.neg(two);
}

std::size_t element_order(const ProjMat2& m) {
  std::size_t n = 1;
  for (ProjMat2 x = m; !x.is_identity(); x = proj_mul(x, m)) ++n;
  return n;
}

std::uint64_t psl2_order(std::uint64_t q) {
  const unsigned __int128 full = static_cast<unsigned __int128>(q) * (q * q - 1);
  return static_cast<std::uint64_t>(q % 2 == 1 ? full / 2 : full);
}

ProjMat2 unipotent_upper(const FieldPtr& field) { return make_proj(field, 1, 1, 0, 1); }
ProjMat2 unipotent_lower(const FieldPtr& field) { return make_proj(field, 1, 0, 1, 1); }

std::uint64_t FiniteGroup::key(const ProjMat2::Entries& e) const {
  const std::uint64_t q = field_->order();
  return ((std::uint64_t{e[0]} * q + e[1]) * q + e[2]) * q + e[3];
}

ElementId FiniteGroup::lookup(const ProjMat2::Entries& canonical) const {
  const auto it = index_.find(key(canonical));
  if (it == index_.end()) throw InternalError("matrix missing from enumerated group");
  return it->second;
}

ProjMat2 FiniteGroup::element(ElementId id) const { return {field_, elements_.at(id)}; }

ElementId FiniteGroup::id_of(const ProjMat2& m) const {
  require_same_field(field_, m.field());
  return lookup(m.entries());
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  const auto& f = *field_;
  return lookup(sign_normalize(f, raw_mul(f, elements_[a], elements_[b])));
}

void FiniteGroup::build_cayley_table() {
  const std::size_t n = elements_.size();
  const auto& f = *field_;
  const std::uint64_t q = f.order();
  table_.resize(n * n);
  if (f.degree() != 1 || q > kernels::kMaxKernelPrime) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) table_[a * n + b] = lookup(sign_normalize(f, raw_mul(f, elements_[a], elements_[b])));
    return;
  }
  // Dense index over all entry 4-tuples, both signs mapped to the same id,
  // so raw kernel output needs no sign normalization.
  std::vector<ElementId> dense(q * q * q * q, static_cast<ElementId>(-1));
  for (ElementId id = 0; id < n; ++id) {
    dense[key(elements_[id])] = id;
    dense[key(negate(f, elements_[id]))] = id;
  }
  std::vector<kernels::Mat2u32> rhs(n);
  for (ElementId id = 0; id < n; ++id) rhs[id].e = elements_[id];
  std::vector<kernels::Mat2u32> out(n);
  const auto p = static_cast<std::uint32_t>(q);
  for (ElementId a = 0; a < n; ++a) {
    kernels::mat2_mul_mod_row(rhs[a], rhs, out, p);
    for (ElementId b = 0; b < n; ++b) {
      const ElementId id = dense[key(out[b].e)];
      if (id == static_cast<ElementId>(-1)) throw InternalError("kernel product left the group");
      table_[a * n + b] = id;
    }
  }
}

GroupPtr enumerate_group(const FieldPtr& field) {
  const std::uint64_t q = field->order();
  const std::uint64_t expected = psl2_order(q);
  if (expected > kMaxGroupOrder)
    throw CapacityError("|PSL(2," + std::to_string(q) + ")| = " + std::to_string(expected) + " exceeds 10^6");
  const auto& f = *field;
  std::shared_ptr<FiniteGroup> g(new FiniteGroup(field));
  auto& elems = g->elements_;
  elems.reserve(expected);
  auto keep = [&](const ProjMat2::Entries& m) {
    if (sign_normalize(f, m) == m) elems.push_back(m);
  };
  for (FiniteField::Code a = 0; a < q; ++a) {
    for (FiniteField::Code b = 0; b < q; ++b) {
      if (a != 0) {
        const auto a_inv = f.inv(a);
        for (FiniteField::Code c = 0; c < q; ++c) keep({a, b, c, f.mul(f.add(f.one(), f.mul(b, c)), a_inv)});
      } else if (b != 0) {
        const auto c = f.neg(f.inv(b));
        for (FiniteField::Code d = 0; d < q; ++d) keep({a, b, c, d});
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  if (elems.size() != expected) throw InternalError("PSL(2,q) enumeration produced the wrong count");
  g->index_.reserve(elems.size());
  for (ElementId id = 0; id < elems.size(); ++id) g->index_.emplace(g->key(elems[id]), id);
  g->identity_ = g->lookup({1, 0, 0, 1});
  g->inverse_.resize(elems.size());
  for (ElementId id = 0; id < elems.size(); ++id) {
    const auto& m = elems[id];
    g->inverse_[id] = g->lookup(sign_normalize(f, {m[3], f.neg(m[1]), f.neg(m[2]), m[0]}));
  }
  if (elems.size() <= kCayleyTableLimit) g->build_cayley_table();
  if (f.degree() == 1) {
    g->generators_ = {g->id_of(unipotent_upper(field)), g->id_of(unipotent_lower(field))};
  } else {
    g->generators_ = g->Group::generators();
  }
  return g;
}

GroupPtr enumerate_group(std::uint64_t p, int degree) { return enumerate_group(FiniteField::extension(p, degree)); }

}  // namespace cuspcert
