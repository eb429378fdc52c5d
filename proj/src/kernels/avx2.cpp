// Compiled with -mavx2; only reached through the dispatcher after a CPU check.

#include "sturmian/kernels.hpp"

#include <immintrin.h>

#include <cstdint>

namespace sturmian::kernels::avx2 {

std::size_t mismatch_length(const char* a, const char* b, std::size_t len) noexcept {
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
        if (eq != 0xFFFFFFFFu) {
            return i + static_cast<std::size_t>(__builtin_ctz(~eq));
        }
    }
    while (i < len && a[i] == b[i]) {
        ++i;
    }
    return i;
}

std::size_t count_byte(const char* data, std::size_t len, char letter) noexcept {
    const __m256i needle = _mm256_set1_epi8(letter);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        auto hits = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, needle)));
        count += static_cast<std::size_t>(__builtin_popcount(hits));
    }
    for (; i < len; ++i) {
        count += data[i] == letter;
    }
    return count;
}

}  // namespace sturmian::kernels::avx2
