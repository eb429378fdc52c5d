#include "sturmian/powers.hpp"

#include "sturmian/error.hpp"
#include "sturmian/kernels.hpp"
#include "sturmian/language.hpp"
#include "sturmian/parallel.hpp"
#include "sturmian/returns.hpp"

#include <algorithm>

namespace sturmian {

namespace {

struct Candidate {
    std::size_t length = 0;
    std::size_t position = 0;
    bool truncated = false;
};

// Longest w-periodic stretch starting at j, where w = text[j..j+n).
Candidate run_at(std::string_view text, std::size_t j, std::size_t n) {
    const std::size_t room = text.size() - n - j;
    const std::size_t k = kernels::mismatch_length(text.data() + j, text.data() + j + n, room);
    return {n + k, j, k == room};
}

IndexValue finish(const LanguageView& view, std::size_t n, const Candidate& best, const Candidate& best_truncated) {
    std::string_view text = view.text();
    if (best_truncated.length > best.length) {
        if (view.period()) {
            throw Error(ErrorKind::NotAperiodic, "index of " + std::string(text.substr(best_truncated.position, n)) +
                                                     " is unbounded on " + view.label());
        }
        throw Error(ErrorKind::Mismatch, "maximal repetition of " +
                                             std::string(text.substr(best_truncated.position, n)) +
                                             " runs off the certified prefix of " + view.label());
    }
    IndexValue out;
    out.w = FiniteWord(std::string(text.substr(best.position, n)));
    out.repetition_length = best.length;
    out.ind = ExactRational(best.length, n);
    out.max_repetition = FiniteWord(std::string(text.substr(best.position, best.length)));
    out.position = best.position;
    return out;
}

void require_aperiodic(const LanguageView& view, std::string_view what) {
    if (view.period()) {
        throw Error(ErrorKind::NotAperiodic, std::string(what) + " presupposes an aperiodic word; " + view.label() +
                                                 " is periodic");
    }
}

}  // namespace

bool is_primitive(std::string_view w) noexcept {
    if (w.empty()) return false;
    for (std::size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d == 0 && kernels::has_period(w, d)) return false;
    }
    return true;
}

IndexValue index_of_factor(const LanguageView& view, const FiniteWord& w) {
    if (w.empty()) throw Error(ErrorKind::InvalidParameter, "empty factor");
    const std::size_t n = w.size();
    view.require_depth(n, "index_of_factor");
    std::string_view text = view.text();
    if (!view.index().find(w.view())) {
        throw Error(ErrorKind::FactorNotInLanguage, w.str() + " does not occur in " + view.label());
    }
    Candidate best, best_truncated;
    for (std::size_t pos = text.find(w.view()); pos != std::string_view::npos; pos = text.find(w.view(), pos + 1)) {
        Candidate c = run_at(text, pos, n);
        Candidate& slot = c.truncated ? best_truncated : best;
        if (c.length > slot.length) slot = c;
    }
    IndexValue out = finish(view, n, best, best_truncated);
    // Attainment: the next power w^(ind + 1/|w|) is absent from the census.
    std::string longer = w.periodic_extension(out.repetition_length + 1).str();
    if (view.index().find(longer)) {
        throw Error(ErrorKind::Mismatch, "power " + longer + " occurs beyond the computed index");
    }
    return out;
}

std::vector<IndexValue> indices_at_length(const LanguageView& view, std::size_t n) {
    view.require_depth(n, "indices_at_length");
    std::string_view text = view.text();
    FactorClasses classes = view.index().classes(n);
    std::vector<Candidate> best(classes.count()), best_truncated(classes.count());
    const std::size_t last = text.size() - n;  // last start position
    std::size_t j = 0;
    while (j <= last) {
        // One kernel call covers a whole periodic stretch: positions j..j+k-1 share it.
        Candidate c = run_at(text, j, n);
        const std::size_t k = c.length - n;
        for (std::size_t t = 0; t <= k && j + t <= last; ++t) {
            Candidate here{c.length - t, j + t, c.truncated};
            Candidate& slot = (here.truncated ? best_truncated : best)[classes.id[j + t]];
            if (here.length > slot.length) slot = here;
        }
        j += k + 1;
    }
    std::vector<IndexValue> out;
    out.reserve(classes.count());
    for (std::size_t c = 0; c < classes.count(); ++c) out.push_back(finish(view, n, best[c], best_truncated[c]));
    return out;
}

std::pair<BigInt, BigInt> letter_indices(const CFExpansion& cf) {
    if (!cf.is_normalized()) {
        throw Error(ErrorKind::InvalidParameter, "letter_indices needs a normalized slope");
    }
    return {cf.coefficient(2) + 1, BigInt(1)};
}

ExactRational index_upper_bound(const CFExpansion& cf, std::size_t N) {
    if (N < 1) throw Error(ErrorKind::InvalidParameter, "N must be >= 1");
    const BigInt& a_next = cf.coefficient(N + 1);
    Convergents c = convergents(cf, N);
    const auto k = static_cast<long>(N);
    return ExactRational(2 + a_next) + ExactRational(c.q(k - 1) - 2, c.q(k));
}

WordIndexBound word_index_bound(const CFExpansion& cf, std::size_t N_max) {
    if (N_max < 1) throw Error(ErrorKind::InvalidParameter, "N_max must be >= 1");
    WordIndexBound out;
    out.max = index_upper_bound(cf, 1);
    for (std::size_t N = 2; N <= N_max; ++N) {
        ExactRational term = index_upper_bound(cf, N);
        if (term > out.max) {
            out.max = std::move(term);
            out.argmax_N = N;
        }
    }
    out.supremum_known_finite = cf.has_period();
    return out;
}

std::vector<WitnessRow> equality_witnesses(const LanguageView& view, std::size_t n_lo, std::size_t n_hi,
                                            std::size_t jobs) {
    require_aperiodic(view, "equality_witnesses");
    if (n_lo < 1 || n_hi < n_lo) throw Error(ErrorKind::InvalidParameter, "bad length range");
    view.require_depth(n_hi, "equality_witnesses");
    std::vector<WitnessRow> rows(n_hi - n_lo + 1);
    parallel_for(rows.size(), jobs, [&](std::size_t k) {
        WitnessRow& row = rows[k];
        row.n = n_lo + k;
        row.R = recurrence_brute(view, row.n).R;
        auto indices = indices_at_length(view, row.n);
        row.C = indices.size();
        for (auto& iv : indices) {
            if (iv.repetition_length > row.max_index.repetition_length) row.max_index = iv;
            if (iv.repetition_length + 1 == row.R) row.witnesses.push_back(iv);
        }
    });
    return rows;
}

InequalityReport inequality_audit(const LanguageView& view, std::size_t n_max, std::size_t jobs) {
    require_aperiodic(view, "inequality_audit");
    view.require_depth(n_max, "inequality_audit");
    InequalityReport report;
    report.rows.resize(n_max);
    parallel_for(n_max, jobs, [&](std::size_t k) {
        InequalityRow& row = report.rows[k];
        row.n = k + 1;
        row.R = recurrence_brute(view, row.n).R;
        auto indices = indices_at_length(view, row.n);
        row.C = indices.size();
        bool first = true;
        for (const auto& iv : indices) {
            const auto rhs = static_cast<std::int64_t>(iv.repetition_length + row.C) - static_cast<std::int64_t>(row.n);
            const std::int64_t slack = static_cast<std::int64_t>(row.R) - rhs;
            if (first || slack < row.min_slack) row.min_slack = slack;
            first = false;
            if (slack == 0) ++row.tight;
            if (slack < 0) row.violations.push_back(iv.w);
        }
    });
    for (const auto& row : report.rows) report.all_pass &= row.violations.empty();
    return report;
}

}  // namespace sturmian
