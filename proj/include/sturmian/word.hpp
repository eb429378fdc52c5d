#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace sturmian {

/// Finite word over a two-letter alphabet, stored one byte per letter
/// ('A'/'B' for Sturmian words, '0'/'1' for derivated and control words).
class FiniteWord {
public:
    FiniteWord() = default;
    explicit FiniteWord(std::string letters) : letters_(std::move(letters)) {}
    FiniteWord(const char* letters) : letters_(letters) {}  // NOLINT: literal convenience

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    const std::string& str() const noexcept { return letters_; }
    std::string_view view() const noexcept { return letters_; }

    std::size_t count(char letter) const noexcept;

    FiniteWord substr(std::size_t pos, std::size_t len) const { return FiniteWord(letters_.substr(pos, len)); }
    bool starts_with(std::string_view p) const noexcept { return view().starts_with(p); }

    FiniteWord& operator+=(const FiniteWord& other) {
        letters_ += other.letters_;
        return *this;
    }
    friend FiniteWord operator+(FiniteWord a, const FiniteWord& b) { return a += b; }

    /// w^k for integer k >= 0.
    FiniteWord repeated(std::size_t k) const;
    /// Prefix of length `length` of www...
    FiniteWord periodic_extension(std::size_t length) const;

    friend auto operator<=>(const FiniteWord&, const FiniteWord&) = default;

private:
    std::string letters_;
};

/// True if v is a power of w in the sense |v| >= |w| and v is a prefix of www...
bool is_power_of(std::string_view v, std::string_view w) noexcept;

}  // namespace sturmian
