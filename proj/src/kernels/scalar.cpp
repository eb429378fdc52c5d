#include "sturmian/kernels.hpp"

namespace sturmian::kernels::scalar {

std::size_t mismatch_length(const char* a, const char* b, std::size_t len) noexcept {
    std::size_t i = 0;
    while (i < len && a[i] == b[i]) {
        ++i;
    }
    return i;
}

std::size_t count_byte(const char* data, std::size_t len, char letter) noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < len; ++i) {
        count += data[i] == letter;
    }
    return count;
}

}  // namespace sturmian::kernels::scalar
