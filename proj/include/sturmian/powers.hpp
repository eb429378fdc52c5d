#pragma once

// Factor indices (maximal fractional powers) and the checks relating them
// to the recurrence function.

#include "sturmian/confrac.hpp"
#include "sturmian/exact.hpp"
#include "sturmian/wordgen.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sturmian {

struct IndexValue {
    FiniteWord w;
    /// |w^ind(w)|, so ind(w) = repetition_length / |w|.
    std::size_t repetition_length = 0;
    ExactRational ind;  // reduced
    FiniteWord max_repetition;
    std::size_t position = 0;  // a start of max_repetition in the prefix

    /// "repetition_length/|w|", not reduced.
    std::string display() const { return std::to_string(repetition_length) + "/" + std::to_string(w.size()); }
};

/// True iff w is not z^k for any k >= 2.
bool is_primitive(std::string_view w) noexcept;

IndexValue index_of_factor(const LanguageView& view, const FiniteWord& w);

/// Indices of every factor of length n, in lexicographic order of the factors.
std::vector<IndexValue> indices_at_length(const LanguageView& view, std::size_t n);

/// (ind(A), ind(B)) = (a_2 + 1, 1) for a normalized slope.
std::pair<BigInt, BigInt> letter_indices(const CFExpansion& cf);

/// 2 + a_{N+1} + (q_{N-1} - 2) / q_N, N >= 1.
ExactRational index_upper_bound(const CFExpansion& cf, std::size_t N);

struct WordIndexBound {
    ExactRational max;
    std::size_t argmax_N = 1;
    /// A periodic tail bounds the partial quotients, so ind(u) is finite.
    /// Without one only the finite-range maximum is known.
    bool supremum_known_finite = false;
};

WordIndexBound word_index_bound(const CFExpansion& cf, std::size_t N_max);

struct WitnessRow {
    std::size_t n = 0;
    std::uint64_t R = 0;
    std::size_t C = 0;
    IndexValue max_index;                // a factor of maximal index at this length
    std::vector<IndexValue> witnesses;   // factors with R(n) = n ind(w) + 1
};

/// Rows for every n in [n_lo, n_hi]; NotAperiodic on periodic views.
std::vector<WitnessRow> equality_witnesses(const LanguageView& view, std::size_t n_lo, std::size_t n_hi,
                                            std::size_t jobs = 1);

struct InequalityRow {
    std::size_t n = 0;
    std::uint64_t R = 0;
    std::size_t C = 0;
    /// min over factors of R(n) - (n ind(w) + C(n) - n).
    std::int64_t min_slack = 0;
    std::size_t tight = 0;  // factors with slack 0
    std::vector<FiniteWord> violations;
};

struct InequalityReport {
    std::vector<InequalityRow> rows;
    bool all_pass = true;
};

/// Checks R(|w|) >= |w| ind(w) + C(|w|) - |w| for every factor with |w| <= n_max.
InequalityReport inequality_audit(const LanguageView& view, std::size_t n_max, std::size_t jobs = 1);

}  // namespace sturmian
