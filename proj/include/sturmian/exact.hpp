#pragma once

// Exact integer and rational arithmetic used for convergents, recurrence
// values and factor indices.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace sturmian {

using BigInt = boost::multiprecision::cpp_int;

/// Converts to std::uint64_t, throwing InvalidParameter when out of range.
std::uint64_t to_u64(const BigInt& value);

/// Reduced fraction with positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(BigInt numerator, BigInt denominator = 1);  // NOLINT: integers convert implicitly
    ExactRational(std::int64_t value) : ExactRational(BigInt(value)) {}  // NOLINT

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    /// Always "p/q", including q = 1.
    std::string to_string() const;
    /// Decimal approximation for human-readable columns only.
    std::string to_decimal(int digits) const;
    double to_double() const;

    BigInt floor() const;

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
    ExactRational operator-() const { return {-num_, den_}; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

private:
    BigInt num_{0};
    BigInt den_{1};
};

/// Parses "p/q" or "p".
ExactRational parse_rational(const std::string& text);

/// 2x2 integer matrix acting on row vectors from the right.
struct Mat2 {
    std::array<std::array<BigInt, 2>, 2> m{{{1, 0}, {0, 1}}};

    static Mat2 identity() { return {}; }
    /// The continuant block ((c,1),(1,0)).
    static Mat2 continuant(const BigInt& c) { return Mat2{{{{c, 1}, {1, 0}}}}; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend bool operator==(const Mat2& a, const Mat2& b) = default;
};

using RowVec2 = std::array<BigInt, 2>;

RowVec2 operator*(const RowVec2& v, const Mat2& m);

}  // namespace sturmian
