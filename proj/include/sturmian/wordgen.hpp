#pragma once

// Certified prefixes of Sturmian words and of control words.

#include "sturmian/confrac.hpp"
#include "sturmian/exact.hpp"
#include "sturmian/factor_index.hpp"
#include "sturmian/word.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sturmian {

enum class IntervalConvention {
    LeftClosed,   ///< I = [0,1), I_A = [0,alpha), I_B = [alpha,1)
    RightClosed,  ///< I = (0,1], I_A = (0,alpha], I_B = (alpha,1]
};

/// Rational brackets of the slope and the initial point of a two-interval exchange.
struct ExchangeSpec {
    ExactRational alpha_lo;
    ExactRational alpha_hi;
    ExactRational x0_lo;
    ExactRational x0_hi;
    IntervalConvention convention = IntervalConvention::LeftClosed;
};

/// Length-L prefix of the characteristic word of a normalized slope, via
/// s_{-1} = B, s_0 = A, s_n = s_{n-1}^{a_{n+1}} s_{n-2}.
FiniteWord characteristic_prefix(const CFExpansion& cf, std::size_t length);

/// Coding of the orbit T^n(x0); every letter is certified for the whole
/// bracket or PrecisionExhausted is thrown.
FiniteWord interval_exchange_prefix(const ExchangeSpec& spec, std::size_t length);

/// Brackets alpha by the convergents N, N+1 and x0 by the matching bracket
/// of 1 - alpha, the intercept whose coding is the characteristic word.
ExchangeSpec characteristic_exchange_spec(const CFExpansion& cf, std::size_t N);

/// interval_exchange_prefix on characteristic_exchange_spec, tightening N until certified.
FiniteWord certified_exchange_prefix(const CFExpansion& cf, std::size_t length);

using Substitution = std::map<char, std::string>;

/// Length-L prefix of the fixed point of a prolongable substitution starting at seed.
FiniteWord substitution_prefix(const Substitution& images, char seed, std::size_t length);
FiniteWord periodic_prefix(const FiniteWord& pattern, std::size_t length);

struct Run {
    char letter;
    std::size_t length;
    friend bool operator==(const Run&, const Run&) = default;
};

std::vector<Run> block_structure(const FiniteWord& w);

/// Upper bound on R(n), the minimal window length containing every length-n factor.
using RecurrenceBound = std::function<std::uint64_t(std::uint64_t)>;

/// A prefix of an infinite word together with the depth up to which its
/// factor census, return words and maximal repetitions are complete.
/// The depth is the largest n with R(R(n)+1) + n <= |prefix|.
class LanguageView {
public:
    LanguageView(FiniteWord prefix, std::optional<CFExpansion> slope, RecurrenceBound bound, std::string label,
                 std::optional<std::size_t> period = std::nullopt);

    const FiniteWord& prefix() const noexcept { return prefix_; }
    std::string_view text() const noexcept { return prefix_.view(); }
    const std::optional<CFExpansion>& slope() const noexcept { return slope_; }
    std::size_t certified_n() const noexcept { return certified_n_; }
    const std::string& label() const noexcept { return label_; }
    /// Distinct letters of the prefix, sorted.
    const std::string& alphabet() const noexcept { return alphabet_; }
    const FactorIndex& index() const noexcept { return *index_; }
    std::uint64_t recurrence_bound(std::uint64_t n) const { return bound_(n); }
    const RecurrenceBound& bound() const noexcept { return bound_; }
    /// Length of the primitive period for purely periodic control words.
    std::optional<std::size_t> period() const noexcept { return period_; }

    /// Throws BeyondCertifiedDepth when n > certified_n().
    void require_depth(std::size_t n, std::string_view what) const;
    /// The slope, or NotSturmianSpec for control words.
    const CFExpansion& require_slope() const;

private:
    FiniteWord prefix_;
    std::optional<CFExpansion> slope_;
    RecurrenceBound bound_;
    std::string label_;
    std::optional<std::size_t> period_;
    std::string alphabet_;
    std::size_t certified_n_ = 0;
    std::shared_ptr<const FactorIndex> index_;
};

/// Smallest prefix length certifying depth n under `bound`.
std::uint64_t required_prefix_length(const RecurrenceBound& bound, std::uint64_t depth);
/// Largest certified depth for a prefix of the given length (0 if none).
std::size_t certified_depth(const RecurrenceBound& bound, std::uint64_t prefix_length);

/// Exact recurrence function of the slope, from the closed form.
RecurrenceBound sturmian_recurrence(const CFExpansion& cf);

/// View of the characteristic word of a normalized slope, certified to at least `depth`.
LanguageView sturmian_view(const CFExpansion& cf, std::size_t depth);
/// View with an explicit prefix length; its depth follows from the length.
LanguageView sturmian_view_of_length(const CFExpansion& cf, std::size_t length);

/// Rigorous recurrence bound for the fixed point of a primitive substitution.
RecurrenceBound substitution_recurrence(const Substitution& images, char seed);

LanguageView substitution_view(const Substitution& images, char seed, std::size_t depth, std::string label);
LanguageView thue_morse_view(std::size_t depth);
LanguageView fibonacci_substitution_view(std::size_t depth);
LanguageView periodic_view(const FiniteWord& pattern, std::size_t depth);

/// Built-in controls: "thue-morse", "fibonacci-substitution", "periodic:WORD".
LanguageView control_view(const std::string& name, std::size_t depth);

}  // namespace sturmian
