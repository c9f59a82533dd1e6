#pragma once

#include <cstddef>
#include <cstdint>

namespace sf::kern {

// Mod-p row kernels over uint32 residues, the inner loops of all dense
// F_p linear algebra. Contract for every implementation: inputs reduced
// (< p), p prime with p < 2^15, outputs reduced; results bit-identical to
// the scalar reference.
struct Kernels {
  const char* name;
  // y[i] = (y[i] + c * x[i]) mod p
  void (*axpy)(uint32_t* y, const uint32_t* x, uint32_t c, size_t n, uint32_t p);
  // y[i] = (c * y[i]) mod p
  void (*scale)(uint32_t* y, uint32_t c, size_t n, uint32_t p);
};

const Kernels& scalar_kernels();

// Null when the CPU (or the build) lacks AVX2.
const Kernels* avx2_kernels();

// Chosen once per process: AVX2 when available, else scalar. The environment
// variable SUPPORT_FORGE_SIMD (values "scalar" or "avx2") overrides.
const Kernels& active_kernels();

}  // namespace sf::kern
