#include "sturmian/returns.hpp"

#include "sturmian/error.hpp"
#include "sturmian/kernels.hpp"

#include <algorithm>
#include <limits>

namespace sturmian {

namespace {

struct Block {
    std::size_t pos;
    std::size_t gap;
};

bool same_block(std::string_view text, const Block& a, const Block& b) {
    return a.gap == b.gap && kernels::mismatch_length(text.data() + a.pos, text.data() + b.pos, a.gap) == a.gap;
}

/// Distinct return words of one factor class, in order of first appearance.
std::vector<Block> distinct_returns(std::string_view text, const std::vector<std::size_t>& occurrences) {
    std::vector<Block> reps;
    for (std::size_t k = 0; k + 1 < occurrences.size(); ++k) {
        Block b{occurrences[k], occurrences[k + 1] - occurrences[k]};
        bool known = std::any_of(reps.begin(), reps.end(), [&](const Block& r) { return same_block(text, r, b); });
        if (!known) reps.push_back(b);
    }
    return reps;
}

std::vector<std::vector<std::size_t>> occurrences_by_class(const FactorClasses& classes) {
    std::vector<std::vector<std::size_t>> occ(classes.count());
    for (std::size_t i = 0; i < classes.id.size(); ++i) occ[classes.id[i]].push_back(i);
    return occ;
}

ReturnWordSet make_set(std::string_view text, std::size_t first_pos, std::size_t n, const std::vector<Block>& reps) {
    ReturnWordSet out;
    out.base = FiniteWord(std::string(text.substr(first_pos, n)));
    for (const Block& b : reps) {
        out.returns.emplace_back(std::string(text.substr(b.pos, b.gap)));
        out.complete_returns.push_back(out.returns.back() + out.base);
    }
    return out;
}

std::vector<std::size_t> occurrences_of(const LanguageView& view, const FiniteWord& w) {
    auto pos = view.index().find(w.view());
    if (!pos) {
        throw Error(ErrorKind::FactorNotInLanguage, w.str() + " does not occur in " + view.label());
    }
    FactorClasses classes = view.index().classes(w.size());
    const std::uint32_t id = classes.id[*pos];
    std::vector<std::size_t> occ;
    for (std::size_t i = 0; i < classes.id.size(); ++i) {
        if (classes.id[i] == id) occ.push_back(i);
    }
    return occ;
}

}  // namespace

BigInt recurrence_closed(const CFExpansion& cf, std::uint64_t n) {
    const std::size_t N = convergent_index_for(cf, n);
    Convergents c = convergents(cf, N + 1);
    return c.q(static_cast<long>(N + 1)) + c.q(static_cast<long>(N)) + BigInt(n) - 1;
}

ReturnWordSet return_words(const LanguageView& view, const FiniteWord& w) {
    if (w.empty()) throw Error(ErrorKind::InvalidParameter, "empty factor");
    view.require_depth(w.size(), "return_words");
    auto occ = occurrences_of(view, w);
    return make_set(view.text(), occ.front(), w.size(), distinct_returns(view.text(), occ));
}

std::vector<ReturnWordSet> all_return_words(const LanguageView& view, std::size_t n) {
    view.require_depth(n, "all_return_words");
    FactorClasses classes = view.index().classes(n);
    auto occ = occurrences_by_class(classes);
    std::vector<ReturnWordSet> out;
    out.reserve(classes.count());
    for (std::size_t c = 0; c < classes.count(); ++c) {
        out.push_back(make_set(view.text(), classes.first_pos[c], n, distinct_returns(view.text(), occ[c])));
    }
    return out;
}

RecurrenceValue recurrence_brute(const LanguageView& view, std::size_t n) {
    view.require_depth(n, "recurrence_brute");
    std::string_view text = view.text();
    FactorClasses classes = view.index().classes(n);
    const std::size_t count = classes.count();

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> last(count, kNone);
    std::size_t best = 0, best_pos = 0, best_class = 0;
    for (std::size_t i = 0; i < classes.id.size(); ++i) {
        const std::uint32_t c = classes.id[i];
        if (last[c] != kNone) {
            const std::size_t span = i - last[c] + n;
            if (span > best || (span == best && c < best_class)) {
                best = span;
                best_pos = last[c];
                best_class = c;
            }
        }
        last[c] = i;
    }
    if (best == 0) {
        throw Error(ErrorKind::Mismatch, "no factor of length " + std::to_string(n) + " recurs in the prefix");
    }

    RecurrenceValue out;
    out.n = n;
    out.R = best - 1;
    out.witness = FiniteWord(std::string(text.substr(best_pos, n)));
    out.witness_return = FiniteWord(std::string(text.substr(best_pos, best)));

    // Window census: a window of length W holds the W - n + 1 factors starting in it.
    auto all_windows_complete = [&](std::size_t window) {
        if (window < n) return false;
        const std::size_t starts = window - n + 1;
        if (starts > classes.id.size()) return false;
        std::vector<std::size_t> hits(count, 0);
        std::size_t distinct = 0;
        for (std::size_t i = 0; i < starts; ++i) distinct += hits[classes.id[i]]++ == 0;
        if (distinct != count) return false;
        for (std::size_t k = 1; k + starts <= classes.id.size(); ++k) {
            distinct -= --hits[classes.id[k - 1]] == 0;
            distinct += hits[classes.id[k + starts - 1]]++ == 0;
            if (distinct != count) return false;
        }
        return true;
    };
    if (!all_windows_complete(out.R) || all_windows_complete(out.R - 1)) {
        throw Error(ErrorKind::Mismatch, "window census disagrees with R(" + std::to_string(n) +
                                             ") = " + std::to_string(out.R) + " on " + view.label());
    }
    return out;
}

DerivedWord derivated_word(const LanguageView& view, const FiniteWord& w, std::size_t length) {
    if (w.empty()) throw Error(ErrorKind::InvalidParameter, "empty factor");
    view.require_depth(w.size(), "derivated_word");
    std::string_view text = view.text();
    auto occ = occurrences_of(view, w);
    auto reps = distinct_returns(text, occ);
    if (reps.size() != 2) {
        throw Error(ErrorKind::NotTwoReturnWords,
                    w.str() + " has " + std::to_string(reps.size()) + " return words in " + view.label());
    }
    const std::size_t blocks = occ.size() - 1;
    if (length == 0) length = blocks;
    if (length > blocks) {
        throw Error(ErrorKind::BeyondCertifiedDepth, "prefix holds only " + std::to_string(blocks) +
                                                         " blocks of " + w.str() + ", asked for " +
                                                         std::to_string(length));
    }
    DerivedWord out;
    out.first_occurrence = occ.front();
    out.r0 = FiniteWord(std::string(text.substr(reps[0].pos, reps[0].gap)));
    out.r1 = FiniteWord(std::string(text.substr(reps[1].pos, reps[1].gap)));
    std::string labels;
    labels.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
        Block b{occ[k], occ[k + 1] - occ[k]};
        labels += same_block(text, reps[0], b) ? '0' : '1';
    }
    out.word = FiniteWord(std::move(labels));
    return out;
}

namespace {

RecurrenceBound derived_bound(const DerivedWord& d, std::uint64_t n, RecurrenceBound parent) {
    const std::uint64_t rmin = std::min(d.r0.size(), d.r1.size());
    const std::uint64_t rmax = std::max(d.r0.size(), d.r1.size());
    return [parent = std::move(parent), rmin, rmax, n](std::uint64_t m) {
        const std::uint64_t span = parent(m * rmax + n);
        return (span + rmin - 1) / rmin;
    };
}

}  // namespace

LanguageView derived_view(const LanguageView& view, const FiniteWord& w) {
    DerivedWord d = derivated_word(view, w);
    RecurrenceBound bound = derived_bound(d, w.size(), view.bound());
    try {
        return LanguageView(std::move(d.word), std::nullopt, std::move(bound),
                            "derived(" + view.label() + ", " + w.str() + ")");
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidParameter) throw;
        throw Error(ErrorKind::BeyondCertifiedDepth, "derived word of " + w.str() + " too short: " + e.what());
    }
}

SturmianVerdict derived_is_sturmian(const LanguageView& view, const FiniteWord& w, std::size_t depth) {
    if (view.slope()) {
        // Grow the parent prefix until the derived word is certified to depth.
        DerivedWord d = derivated_word(view, w);
        const std::uint64_t needed = required_prefix_length(derived_bound(d, w.size(), view.bound()), depth);
        const std::uint64_t rmax = std::max(d.r0.size(), d.r1.size());
        const std::uint64_t parent_length = d.first_occurrence + (needed + 1) * rmax + w.size();
        if (parent_length > view.prefix().size()) {
            LanguageView longer = sturmian_view_of_length(*view.slope(), parent_length);
            return is_sturmian_view(derived_view(longer, w), depth);
        }
    }
    return is_sturmian_view(derived_view(view, w), depth);
}

}  // namespace sturmian
