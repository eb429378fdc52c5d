#include "sturmian/word.hpp"

#include "sturmian/kernels.hpp"

namespace sturmian {

std::size_t FiniteWord::count(char letter) const noexcept {
    return kernels::count_byte(letters_.data(), letters_.size(), letter);
}

FiniteWord FiniteWord::repeated(std::size_t k) const {
    std::string out;
    out.reserve(letters_.size() * k);
    for (std::size_t i = 0; i < k; ++i) out += letters_;
    return FiniteWord(std::move(out));
}

FiniteWord FiniteWord::periodic_extension(std::size_t length) const {
    std::string out;
    out.reserve(length);
    for (std::size_t i = 0; i < length && !letters_.empty(); ++i) out += letters_[i % letters_.size()];
    return FiniteWord(std::move(out));
}

bool is_power_of(std::string_view v, std::string_view w) noexcept {
    if (w.empty() || v.size() < w.size() || !v.starts_with(w)) return false;
    return kernels::has_period(v, w.size());
}

}  // namespace sturmian
