#include "sturmian/error.hpp"
#include "sturmian/kernels.hpp"

#include <atomic>

namespace sturmian::kernels {

namespace {

struct Table {
    std::size_t (*mismatch_length)(const char*, const char*, std::size_t) noexcept;
    std::size_t (*count_byte)(const char*, std::size_t, char) noexcept;
};

constexpr Table kScalar{&scalar::mismatch_length, &scalar::count_byte};
#ifdef STURMIAN_HAVE_AVX2_KERNELS
constexpr Table kAvx2{&avx2::mismatch_length, &avx2::count_byte};
#endif

bool cpu_has_avx2() noexcept {
#ifdef STURMIAN_HAVE_AVX2_KERNELS
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Table* table_for(Backend backend) noexcept {
#ifdef STURMIAN_HAVE_AVX2_KERNELS
    if (backend == Backend::Avx2) return &kAvx2;
#endif
    (void)backend;
    return &kScalar;
}

Backend detect() noexcept { return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& current() noexcept {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

}  // namespace

std::string_view to_string(Backend backend) noexcept {
    return backend == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_supported(Backend backend) noexcept {
    return backend == Backend::Scalar || cpu_has_avx2();
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    if (!backend_supported(backend)) {
        throw Error(ErrorKind::InvalidParameter, "kernel backend not supported on this CPU");
    }
    current().store(backend, std::memory_order_relaxed);
}

std::size_t mismatch_length(const char* a, const char* b, std::size_t len) noexcept {
    return table_for(active_backend())->mismatch_length(a, b, len);
}

std::size_t count_byte(const char* data, std::size_t len, char letter) noexcept {
    return table_for(active_backend())->count_byte(data, len, letter);
}

}  // namespace sturmian::kernels
