#include <cstdlib>
#include <cstring>

#include "sf/simd_kernels.hpp"
#include "sf/util.hpp"

namespace sf::kern {

namespace {

const Kernels& pick() {
  const char* env = std::getenv("SUPPORT_FORGE_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return scalar_kernels();
    if (std::strcmp(env, "avx2") == 0) {
      const Kernels* k = avx2_kernels();
      if (k == nullptr) fail("InvalidConfig", "SUPPORT_FORGE_SIMD=avx2 but AVX2 is unavailable");
      return *k;
    }
    fail("InvalidConfig", std::string("unknown SUPPORT_FORGE_SIMD value: ") + env);
  }
  const Kernels* k = avx2_kernels();
  return k != nullptr ? *k : scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
  static const Kernels& k = pick();
  return k;
}

}  // namespace sf::kern
