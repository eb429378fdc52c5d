#pragma once

// Return words, the recurrence function and derivated words.

#include "sturmian/confrac.hpp"
#include "sturmian/language.hpp"
#include "sturmian/wordgen.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sturmian {

struct ReturnWordSet {
    FiniteWord base;
    std::vector<FiniteWord> returns;           // sorted by first occurrence
    std::vector<FiniteWord> complete_returns;  // returns[i] + base
};

struct RecurrenceValue {
    std::size_t n = 0;
    std::uint64_t R = 0;
    /// Factor of length n whose complete return word is longest, and that word (|witness_return| = R + 1).
    FiniteWord witness;
    FiniteWord witness_return;
};

/// R(n) = q_{N+1} + q_N + n - 1 where q_N <= n < q_{N+1}.
BigInt recurrence_closed(const CFExpansion& cf, std::uint64_t n);

ReturnWordSet return_words(const LanguageView& view, const FiniteWord& w);

/// Return words of every factor of length n, in lexicographic order of the factors.
std::vector<ReturnWordSet> all_return_words(const LanguageView& view, std::size_t n);

/// R(n) from the longest complete return word. Also checks that every window
/// of length R(n) of the prefix holds all of L_n and some window of length
/// R(n) - 1 misses a factor; throws Mismatch otherwise.
RecurrenceValue recurrence_brute(const LanguageView& view, std::size_t n);

struct DerivedWord {
    FiniteWord word;  // over {0,1}
    FiniteWord r0;    // label 0: the return word of the first block
    FiniteWord r1;    // label 1
    std::size_t first_occurrence = 0;
};

/// Codes the order of the two return words after the first occurrence of w.
/// length = 0 emits every complete block of the prefix.
DerivedWord derivated_word(const LanguageView& view, const FiniteWord& w, std::size_t length = 0);

/// Certified view of the derivated word. A window of K derived letters spans
/// at least K*rmin letters of u, so R_v(m) <= ceil(R_u(m*rmax + |w|) / rmin).
LanguageView derived_view(const LanguageView& view, const FiniteWord& w);

/// For Sturmian parents the prefix is extended as needed to certify `depth`.
SturmianVerdict derived_is_sturmian(const LanguageView& view, const FiniteWord& w, std::size_t depth);

}  // namespace sturmian
