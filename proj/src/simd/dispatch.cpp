#include <cstdlib>
#include <string>

#include "ftlab/simd/kernels.hpp"

namespace ftlab::simd {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() noexcept {
  std::string want = "auto";
  if (const char* env = std::getenv("FTLAB_SIMD")) want = env;
  if (want == "scalar") return scalar_kernels();
  if (want == "avx2") return kernels_for(Backend::avx2);
  if (want == "neon") return kernels_for(Backend::neon);
  if (backend_available(Backend::avx2)) return *avx2_kernels();
  if (backend_available(Backend::neon)) return *neon_kernels();
  return scalar_kernels();
}

}  // namespace

bool backend_available(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return avx2_kernels() != nullptr && cpu_has_avx2();
    case Backend::neon:
      return neon_kernels() != nullptr;
  }
  return false;
}

const KernelTable& kernels_for(Backend b) noexcept {
  if (!backend_available(b)) return scalar_kernels();
  switch (b) {
    case Backend::avx2:
      return *avx2_kernels();
    case Backend::neon:
      return *neon_kernels();
    default:
      return scalar_kernels();
  }
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = select();
  return chosen;
}

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace ftlab::simd
