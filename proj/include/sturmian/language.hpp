#pragma once

// Factor-language analytics over a certified LanguageView.

#include "sturmian/word.hpp"
#include "sturmian/wordgen.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sturmian {

struct FactorSet {
    std::size_t n = 0;
    std::vector<FiniteWord> factors;  // sorted, distinct

    std::size_t size() const noexcept { return factors.size(); }
    bool contains(const FiniteWord& w) const;
};

/// L_n(u) from the suffix-array index. BeyondCertifiedDepth if n > certified_n.
FactorSet factors(const LanguageView& view, std::size_t n);

/// Sliding-window scan of the prefix; the reference the indexed path is checked against.
FactorSet factors_naive(const LanguageView& view, std::size_t n);

std::size_t complexity(const LanguageView& view, std::size_t n);

struct SpecialFactors {
    std::size_t n = 0;
    std::vector<FiniteWord> left;
    std::vector<FiniteWord> right;
    std::vector<FiniteWord> bispecial;
};

/// Needs n + 1 <= certified_n.
SpecialFactors special_factors(const LanguageView& view, std::size_t n);

/// Bispecial factors of every length 1..n_max in one pass.
std::vector<SpecialFactors> special_factors_upto(const LanguageView& view, std::size_t n_max);

class RauzyGraph {
public:
    RauzyGraph(std::size_t n, FactorSet vertices, FactorSet edges);

    std::size_t n() const noexcept { return n_; }
    const FactorSet& vertices() const noexcept { return vertices_; }
    const FactorSet& edges() const noexcept { return edges_; }

    /// Vertex index of the edge's length-n prefix / suffix.
    std::size_t source(std::size_t edge) const { return source_.at(edge); }
    std::size_t target(std::size_t edge) const { return target_.at(edge); }

    std::size_t indegree(std::size_t vertex) const;
    std::size_t outdegree(std::size_t vertex) const;
    std::optional<std::size_t> vertex_of(const FiniteWord& w) const;

    bool strongly_connected() const;

    /// Elementary cycles as vertex sequences, each starting at its smallest vertex.
    /// Stops after `limit` cycles.
    std::vector<std::vector<std::size_t>> cycles(std::size_t limit = 10000) const;

    std::string to_dot() const;

private:
    std::size_t n_;
    FactorSet vertices_;
    FactorSet edges_;
    std::vector<std::size_t> source_;
    std::vector<std::size_t> target_;
};

/// Needs n + 1 <= certified_n.
RauzyGraph rauzy_graph(const LanguageView& view, std::size_t n);

struct SturmianVerdict {
    bool sturmian = true;
    /// False when some C(n) <= n was seen: the word is eventually periodic.
    bool aperiodic = true;
    std::optional<std::size_t> first_failure;
    std::size_t complexity_at_failure = 0;
    std::vector<std::size_t> complexities;  // C(1..n_max)
};

/// True iff C(n) = n + 1 for all 1 <= n <= n_max.
SturmianVerdict is_sturmian_view(const LanguageView& view, std::size_t n_max);

}  // namespace sturmian
