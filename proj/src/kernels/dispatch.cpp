#include <atomic>
#include <stdexcept>
#include <vector>

#include "cuspcert/error.hpp"
#include "cuspcert/kernels.hpp"

namespace cuspcert::kernels {

namespace {

Variant detect() {
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) return Variant::kAvx2;
#endif
  return Variant::kScalar;
}

std::atomic<Variant>& selected() {
  static std::atomic<Variant> v{detect()};
  return v;
}

void check_sizes(std::size_t lhs, std::size_t rhs, std::size_t out, std::uint32_t p) {
  if (lhs < out || rhs < out) throw DomainError("kernel input shorter than output");
  if (p < 2 || p > kMaxKernelPrime) throw DomainError("kernel prime out of range");
}

}  // namespace

bool variant_available(Variant v) {
  if (v == Variant::kScalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Variant active_variant() { return selected().load(std::memory_order_relaxed); }

void set_variant(Variant v) {
  if (!variant_available(v)) throw DomainError("kernel variant not supported on this CPU");
  selected().store(v, std::memory_order_relaxed);
}

std::string_view variant_name(Variant v) { return v == Variant::kAvx2 ? "avx2" : "scalar"; }

void mat2_mul_mod(std::span<const Mat2u32> lhs, std::span<const Mat2u32> rhs, std::span<Mat2u32> out,
                  std::uint32_t p) {
  check_sizes(lhs.size(), rhs.size(), out.size(), p);
#if defined(__x86_64__) || defined(__i386__)
  if (active_variant() == Variant::kAvx2) {
    mat2_mul_mod_avx2(lhs, rhs, out, p);
    return;
  }
#endif
  mat2_mul_mod_scalar(lhs, rhs, out, p);
}

void mat2_mul_mod_row(const Mat2u32& lhs, std::span<const Mat2u32> rhs, std::span<Mat2u32> out, std::uint32_t p) {
  std::vector<Mat2u32> broadcast(out.size(), lhs);
  mat2_mul_mod(broadcast, rhs, out, p);
}

}  // namespace cuspcert::kernels
