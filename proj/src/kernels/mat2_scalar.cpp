#include "cuspcert/kernels.hpp"

namespace cuspcert::kernels {

void mat2_mul_mod_scalar(std::span<const Mat2u32> lhs, std::span<const Mat2u32> rhs, std::span<Mat2u32> out,
                         std::uint32_t p) {
  const std::uint64_t m = p;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& a = lhs[i].e;
    const auto& b = rhs[i].e;
    auto& c = out[i].e;
    c[0] = static_cast<std::uint32_t>((std::uint64_t{a[0]} * b[0] + std::uint64_t{a[1]} * b[2]) % m);
    c[1] = static_cast<std::uint32_t>((std::uint64_t{a[0]} * b[1] + std::uint64_t{a[1]} * b[3]) % m);
    c[2] = static_cast<std::uint32_t>((std::uint64_t{a[2]} * b[0] + std::uint64_t{a[3]} * b[2]) % m);
    c[3] = static_cast<std::uint32_t>((std::uint64_t{a[2]} * b[1] + std::uint64_t{a[3]} * b[3]) % m);
  }
}

}  // namespace cuspcert::kernels
