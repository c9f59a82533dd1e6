#include "sf/simd_kernels.hpp"

namespace sf::kern {

namespace {

void axpy_scalar(uint32_t* y, const uint32_t* x, uint32_t c, size_t n, uint32_t p) {
  for (size_t i = 0; i < n; ++i) y[i] = (y[i] + c * x[i]) % p;
}

void scale_scalar(uint32_t* y, uint32_t c, size_t n, uint32_t p) {
  for (size_t i = 0; i < n; ++i) y[i] = (c * y[i]) % p;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {"scalar", axpy_scalar, scale_scalar};
  return k;
}

}  // namespace sf::kern
