#pragma once

// Continued fractions [0; a_1, a_2, ...] with an optional periodic tail.

#include "sturmian/exact.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sturmian {

class CFExpansion {
public:
    CFExpansion() = default;
    /// Throws InvalidParameter if a coefficient is < 1 or the period is given but empty.
    CFExpansion(std::vector<BigInt> head, std::vector<BigInt> period);
    explicit CFExpansion(std::vector<BigInt> head) : CFExpansion(std::move(head), {}) {}

    /// Parses the text form `[0;1,2,1,(3,1)]`. Whitespace is ignored.
    static CFExpansion parse(std::string_view text);

    const std::vector<BigInt>& head() const noexcept { return head_; }
    const std::vector<BigInt>& period() const noexcept { return period_; }
    bool has_period() const noexcept { return !period_.empty(); }

    /// Number of coefficients known, or nullopt when infinite.
    std::optional<std::size_t> known_length() const noexcept;

    /// a_k for k >= 1; InsufficientCoefficients past the head of a finite expansion.
    const BigInt& coefficient(std::size_t k) const;
    std::optional<BigInt> try_coefficient(std::size_t k) const;

    bool is_normalized() const;

    /// [0; a_k, a_{k+1}, ...], k >= 1.
    CFExpansion tail_from(std::size_t k) const;
    /// [0; c_1, ..., c_j, a_1, a_2, ...].
    CFExpansion with_prefix(const std::vector<BigInt>& coefficients) const;

    /// Shortest head and primitive period describing the same sequence.
    CFExpansion canonical() const;

    std::string to_string() const;

    /// Same coefficient sequence (compares canonical forms).
    friend bool operator==(const CFExpansion& a, const CFExpansion& b);

private:
    std::vector<BigInt> head_;
    std::vector<BigInt> period_;
};

/// Numerators and denominators p_k/q_k for k = -1 .. N.
class Convergents {
public:
    Convergents(std::vector<BigInt> p, std::vector<BigInt> q) : p_(std::move(p)), q_(std::move(q)) {}

    /// Largest N available.
    std::size_t size() const noexcept { return q_.size() - 2; }
    /// k in [-1, N].
    const BigInt& p(long k) const { return p_.at(static_cast<std::size_t>(k + 1)); }
    const BigInt& q(long k) const { return q_.at(static_cast<std::size_t>(k + 1)); }
    ExactRational value(long k) const { return {p(k), q(k)}; }

private:
    std::vector<BigInt> p_;
    std::vector<BigInt> q_;
};

/// Convergents 1..N via q_N = a_N q_{N-1} + q_{N-2}, q_{-1} = 0, q_0 = 1.
Convergents convergents(const CFExpansion& cf, std::size_t N);

/// q_N as (1,0) M_{a_1} ... M_{a_N} (1,0)^T, multiplied left-to-right or right-to-left.
BigInt continuant_denominator(const CFExpansion& cf, std::size_t N, bool reversed);

struct NormalizedSlope {
    CFExpansion cf;
    bool letters_swapped = false;
};

/// Maps a slope below 1/2 to 1 - alpha via [0;a_1,a_2,...] -> [0;1,a_1-1,a_2,...].
NormalizedSlope normalize_slope(const CFExpansion& cf);

/// The largest N >= 0 with q_N <= n, i.e. q_N <= n < q_{N+1}. For a normalized
/// slope q_0 = q_1 = 1, so N >= 1.
std::size_t convergent_index_for(const CFExpansion& cf, const BigInt& n);

/// Consecutive convergents p_N/q_N, p_{N+1}/q_{N+1} ordered as (lo, hi).
std::pair<ExactRational, ExactRational> slope_bracket(const CFExpansion& cf, std::size_t N);

}  // namespace sturmian
