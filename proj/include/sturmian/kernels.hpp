#pragma once

// Byte-scan kernels behind the factor, index and return-word scans.
// Each kernel has a scalar reference and, on x86-64, an AVX2 variant;
// the active backend is picked once at startup from CPU features.

#include <cstddef>
#include <string_view>

namespace sturmian::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend backend) noexcept;

bool backend_supported(Backend backend) noexcept;
Backend active_backend() noexcept;
/// For tests and benchmarks. Throws InvalidParameter if unsupported.
void set_backend(Backend backend);

/// Length of the longest common prefix of a[0..len) and b[0..len).
std::size_t mismatch_length(const char* a, const char* b, std::size_t len) noexcept;

/// Occurrences of `letter` in data[0..len).
std::size_t count_byte(const char* data, std::size_t len, char letter) noexcept;

/// True iff data[i] == data[i + p] for all i + p < len.
inline bool has_period(std::string_view data, std::size_t p) noexcept {
    if (p >= data.size()) return true;
    return mismatch_length(data.data(), data.data() + p, data.size() - p) == data.size() - p;
}

namespace scalar {
std::size_t mismatch_length(const char* a, const char* b, std::size_t len) noexcept;
std::size_t count_byte(const char* data, std::size_t len, char letter) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define STURMIAN_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::size_t mismatch_length(const char* a, const char* b, std::size_t len) noexcept;
std::size_t count_byte(const char* data, std::size_t len, char letter) noexcept;
}  // namespace avx2
#endif

}  // namespace sturmian::kernels
