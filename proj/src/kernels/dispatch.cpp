#include "atominfo/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace atominfo::kernels {

namespace detail {
const Backend& scalar_backend();
#if ATOMINFO_HAVE_AVX2
const Backend& avx2_backend();
#endif
}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if ATOMINFO_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Backend& select() {
  if (const char* env = std::getenv("ATOMINFO_KERNEL")) {
    const std::string_view want(env);
    if (!want.empty()) {
      for (const Backend* backend : available()) {
        if (want == backend->name) return *backend;
      }
      throw std::runtime_error("ATOMINFO_KERNEL=" + std::string(want) +
                               " is not available on this machine");
    }
  }
  if (const Backend* backend = avx2()) return *backend;
  return scalar();
}

}  // namespace

const Backend& scalar() { return detail::scalar_backend(); }

const Backend* avx2() {
#if ATOMINFO_HAVE_AVX2
  if (cpu_has_avx2()) return &detail::avx2_backend();
#endif
  return nullptr;
}

std::vector<const Backend*> available() {
  std::vector<const Backend*> backends{&scalar()};
  if (const Backend* backend = avx2()) backends.push_back(backend);
  return backends;
}

const Backend& active() {
  static const Backend& chosen = select();
  return chosen;
}

}  // namespace atominfo::kernels
