#include <cstdlib>
#include <cstring>
#include <string>

#include "fpetpf/errors.hpp"
#include "fpetpf/kernels.hpp"

namespace fpetpf::kernels {

extern const Ops scalar_table;
#if defined(FPETPF_HAVE_AVX2)
extern const Ops avx2_table;
#endif

namespace {

bool cpu_has_avx2() {
#if defined(FPETPF_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend pick_default() {
    if (const char* env = std::getenv("FPETPF_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::avx2;
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

Backend g_backend = []() { return pick_default(); }();

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

const Ops* table(Backend b) {
    switch (b) {
        case Backend::scalar: return &scalar_table;
        case Backend::avx2:
#if defined(FPETPF_HAVE_AVX2)
            if (cpu_has_avx2()) return &avx2_table;
#endif
            return nullptr;
    }
    return nullptr;
}

const Ops& ops() { return *table(g_backend); }

Backend active_backend() { return g_backend; }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw InvalidInput(std::string("kernel backend not available: ") + backend_name(b));
    g_backend = b;
}

}  // namespace fpetpf::kernels
