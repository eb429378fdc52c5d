#pragma once

// Report rows and their CSV / JSON / FASTA renderings. Rationals are always
// printed as "p/q"; decimals appear only in the optional approx columns.

#include "sturmian/language.hpp"
#include "sturmian/morphisms.hpp"
#include "sturmian/powers.hpp"
#include "sturmian/wordgen.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sturmian::report {

enum class Format { Csv, Json };

struct RecurrenceRow {
    std::size_t n = 0;
    std::uint64_t R_brute = 0;
    std::optional<BigInt> R_closed;
    FiniteWord witness;
    bool match = true;  // true when no closed form is available
};

std::vector<RecurrenceRow> recurrence_table(const LanguageView& view, std::size_t n_max, std::size_t jobs);
void write_recurrence(std::ostream& out, const std::vector<RecurrenceRow>& rows, Format format);

struct IndexRow {
    std::size_t n = 0;
    std::size_t C = 0;
    std::uint64_t R = 0;
    IndexValue max_index;
    std::optional<IndexValue> witness;  // a factor with R(n) = n ind(w) + 1
};

std::vector<IndexRow> index_table(const LanguageView& view, std::size_t n_max, std::size_t jobs);
void write_index(std::ostream& out, const std::vector<IndexRow>& rows, Format format, bool approx);

struct AnalyzeRow {
    std::size_t n = 0;
    std::size_t C = 0;
    SpecialFactors special;
};

std::vector<AnalyzeRow> analyze_table(const LanguageView& view, std::size_t n_max, std::size_t jobs);
void write_analyze(std::ostream& out, const std::vector<AnalyzeRow>& rows, Format format);

struct VerifyRow {
    std::size_t n = 0;
    std::size_t C = 0;
    std::uint64_t R_brute = 0;
    std::optional<BigInt> R_closed;
    bool match = true;
    std::optional<IndexValue> max_index;  // absent on periodic words
    std::size_t witness_count = 0;
    std::optional<IndexValue> witness;
    std::int64_t min_slack = 0;
    bool inequality_ok = true;
};

struct VerifyResult {
    std::string subject;
    std::vector<VerifyRow> rows;
    SturmianVerdict verdict;
    /// Lengths q_N <= n_max where an equality witness is expected (slopes only).
    std::vector<std::size_t> expected_witness_lengths;
    std::vector<std::size_t> missing_witness_lengths;
    std::vector<std::string> failures;  // theorem violations; empty means exit code 0

    bool ok() const noexcept { return failures.empty(); }
    std::size_t witnesses_from(std::size_t n_lo) const;
    /// One-line verdict: "Sturmian", "not Sturmian: C(2)=4" or "not aperiodic: C(2)=2".
    std::string verdict_line() const;
};

VerifyResult run_verify(const LanguageView& view, std::size_t n_max, std::size_t jobs);
void write_verify(std::ostream& out, const VerifyResult& result, Format format, bool approx);

/// FASTA-like: header line then the word wrapped at `width` letters.
void write_fasta(std::ostream& out, const std::string& header, const FiniteWord& word, std::size_t width = 80);

struct ConstructionCheck {
    bool v_in_language = false;
    IndexValue brute_index;
    ExactRational upper_bound;
    bool bound_attained = false;
};

/// Verifies v against a certified view of the slope and compares brute ind(w) with the bound.
ConstructionCheck check_construction(const CFExpansion& cf, const ConstructionTrace& trace);

void write_construction(std::ostream& out, const CFExpansion& cf, const ConstructionTrace& trace,
                        const std::optional<ConstructionCheck>& check, std::size_t elide_above);

}  // namespace sturmian::report
