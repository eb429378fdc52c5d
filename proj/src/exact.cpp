#include "sturmian/exact.hpp"

#include "sturmian/error.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <limits>
#include <sstream>

namespace sturmian {

std::uint64_t to_u64(const BigInt& value) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorKind::InvalidParameter, "integer " + value.str() + " does not fit in 64 bits");
    }
    return value.convert_to<std::uint64_t>();
}

ExactRational::ExactRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        throw Error(ErrorKind::InvalidParameter, "zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string ExactRational::to_string() const { return num_.str() + "/" + den_.str(); }

std::string ExactRational::to_decimal(int digits) const {
    using Dec = boost::multiprecision::cpp_dec_float_50;
    Dec value = Dec(num_) / Dec(den_);
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(digits);
    out << value;
    return out.str();
}

double ExactRational::to_double() const {
    using Dec = boost::multiprecision::cpp_dec_float_50;
    return static_cast<double>(Dec(num_) / Dec(den_));
}

BigInt ExactRational::floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) {
        --q;
    }
    return q;
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.num_ == 0) {
        throw Error(ErrorKind::InvalidParameter, "division by zero");
    }
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExactRational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            return ExactRational(BigInt(text));
        }
        return ExactRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    }
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
        }
    }
    return r;
}

RowVec2 operator*(const RowVec2& v, const Mat2& m) {
    return {v[0] * m.m[0][0] + v[1] * m.m[1][0], v[0] * m.m[0][1] + v[1] * m.m[1][1]};
}

}  // namespace sturmian
