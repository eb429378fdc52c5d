#include "sturmian/factor_index.hpp"

#include "sturmian/error.hpp"

#include <algorithm>
#include <limits>

namespace sturmian {

namespace {

// Prefix doubling with counting sorts, O(n log n).
std::vector<std::uint32_t> build_suffix_array(std::string_view s) {
    const std::size_t n = s.size();
    std::vector<std::uint32_t> sa(n), rank(n), tmp(n), order(n);
    if (n == 0) return sa;
    for (std::size_t i = 0; i < n; ++i) {
        sa[i] = static_cast<std::uint32_t>(i);
        rank[i] = static_cast<unsigned char>(s[i]);
    }
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) { return rank[a] < rank[b]; });
    std::uint32_t classes = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r > 0 && s[sa[r]] != s[sa[r - 1]]) ++classes;
        tmp[sa[r]] = classes;
    }
    rank.swap(tmp);
    std::vector<std::uint32_t> count;
    for (std::size_t k = 1; classes + 1 < n; k <<= 1) {
        // Order by second key: suffixes without a second half first.
        std::size_t m = 0;
        for (std::size_t i = k < n ? n - k : 0; i < n; ++i) order[m++] = static_cast<std::uint32_t>(i);
        for (std::size_t r = 0; r < n; ++r) {
            if (sa[r] >= k) order[m++] = static_cast<std::uint32_t>(sa[r] - k);
        }
        // Stable counting sort by first key.
        count.assign(classes + 2, 0);
        for (std::size_t i = 0; i < n; ++i) ++count[rank[i] + 1];
        for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
        for (std::size_t j = 0; j < n; ++j) sa[count[rank[order[j]]]++] = order[j];
        // Re-rank.
        tmp[sa[0]] = 0;
        classes = 0;
        for (std::size_t r = 1; r < n; ++r) {
            std::uint32_t a = sa[r - 1], b = sa[r];
            bool same = rank[a] == rank[b];
            if (same) {
                std::int64_t ra = a + k < n ? static_cast<std::int64_t>(rank[a + k]) : -1;
                std::int64_t rb = b + k < n ? static_cast<std::int64_t>(rank[b + k]) : -1;
                same = ra == rb;
            }
            if (!same) ++classes;
            tmp[b] = classes;
        }
        rank.swap(tmp);
    }
    return sa;
}

std::vector<std::uint32_t> build_lcp(std::string_view s, const std::vector<std::uint32_t>& sa) {
    const std::size_t n = s.size();
    std::vector<std::uint32_t> rank(n), lcp(n, 0);
    for (std::size_t r = 0; r < n; ++r) rank[sa[r]] = static_cast<std::uint32_t>(r);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[rank[i]] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace

FactorIndex::FactorIndex(std::string text) : text_(std::move(text)) {
    if (text_.size() >= std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorKind::InvalidParameter, "text too long for 32-bit suffix array");
    }
    sa_ = build_suffix_array(text_);
    lcp_ = build_lcp(text_, sa_);
}

FactorClasses FactorIndex::classes(std::size_t n) const {
    FactorClasses out;
    out.n = n;
    const std::size_t len = text_.size();
    if (n == 0 || n > len) return out;
    out.id.assign(len - n + 1, 0);
    bool have_prev = false;
    std::uint32_t run_min = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t r = 0; r < len; ++r) {
        if (r > 0) run_min = std::min(run_min, lcp_[r]);
        const std::size_t pos = sa_[r];
        if (pos + n > len) continue;
        if (!have_prev || run_min < n) {
            out.first_pos.push_back(pos);
        } else {
            out.first_pos.back() = std::min(out.first_pos.back(), pos);
        }
        out.id[pos] = static_cast<std::uint32_t>(out.first_pos.size() - 1);
        have_prev = true;
        run_min = std::numeric_limits<std::uint32_t>::max();
    }
    return out;
}

std::optional<std::size_t> FactorIndex::find(std::string_view w) const {
    if (w.empty()) return 0;
    std::string_view text = text_;
    auto it = std::lower_bound(sa_.begin(), sa_.end(), w, [&](std::uint32_t pos, std::string_view key) {
        return text.substr(pos, key.size()) < key;
    });
    if (it != sa_.end() && text.substr(*it, w.size()) == w) return *it;
    return std::nullopt;
}

}  // namespace sturmian
