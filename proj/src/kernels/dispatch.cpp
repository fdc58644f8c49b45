#include <cstdlib>
#include <cstring>

#include "jsparse/kernels.hpp"
#include "jsparse/log.hpp"

namespace jsparse::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

namespace {

const Ops& pick_backend() {
  const char* env = std::getenv("JSPARSE_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
  bool have_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (env != nullptr && std::strcmp(env, "avx2") == 0) {
    if (have_avx2) return avx2_ops();
    log::warn("JSPARSE_KERNELS=avx2 requested but CPU lacks AVX2+FMA; using scalar");
    return scalar_ops();
  }
  if (env == nullptr || std::strcmp(env, "auto") == 0) {
    if (have_avx2) return avx2_ops();
  }
#elif defined(__aarch64__)
  if (env == nullptr || std::strcmp(env, "auto") == 0 || std::strcmp(env, "neon") == 0) {
    return neon_ops();
  }
#endif
  if (env != nullptr && std::strcmp(env, "auto") != 0) {
    log::warn("unknown or unsupported JSPARSE_KERNELS value; using scalar");
  }
  return scalar_ops();
}

}  // namespace

const Ops& active() {
  static const Ops& ops = pick_backend();
  return ops;
}

}  // namespace jsparse::kernels
