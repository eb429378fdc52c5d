#pragma once

// Suffix-array index over a finite text. Gives, for any factor length n,
// a dense class id per start position so that two positions share an id
// iff the length-n factors starting there are equal.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

struct FactorClasses {
    std::size_t n = 0;
    /// id[i] for start positions i in [0, |text| - n]; ids are in lexicographic order of the factors.
    std::vector<std::uint32_t> id;
    /// Leftmost start position of each class.
    std::vector<std::size_t> first_pos;

    std::size_t count() const noexcept { return first_pos.size(); }
};

class FactorIndex {
public:
    explicit FactorIndex(std::string text);

    const std::string& text() const noexcept { return text_; }
    const std::vector<std::uint32_t>& suffix_array() const noexcept { return sa_; }
    /// lcp()[r] = longest common prefix of suffixes sa[r-1] and sa[r]; lcp()[0] = 0.
    const std::vector<std::uint32_t>& lcp() const noexcept { return lcp_; }

    FactorClasses classes(std::size_t n) const;

    /// Some start position of w, or nullopt if w does not occur.
    std::optional<std::size_t> find(std::string_view w) const;

private:
    std::string text_;
    std::vector<std::uint32_t> sa_;
    std::vector<std::uint32_t> lcp_;
};

}  // namespace sturmian
