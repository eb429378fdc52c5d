#include "sturmian/language.hpp"

#include "sturmian/error.hpp"

#include <algorithm>
#include <sstream>

namespace sturmian {

namespace {

FactorSet from_classes(std::string_view text, const FactorClasses& classes) {
    FactorSet out;
    out.n = classes.n;
    out.factors.reserve(classes.count());
    for (std::size_t pos : classes.first_pos) {
        out.factors.emplace_back(std::string(text.substr(pos, classes.n)));
    }
    return out;
}

std::size_t letter_slot(const std::string& alphabet, char c) {
    return static_cast<std::size_t>(alphabet.find(c));
}

}  // namespace

bool FactorSet::contains(const FiniteWord& w) const {
    return std::binary_search(factors.begin(), factors.end(), w);
}

FactorSet factors(const LanguageView& view, std::size_t n) {
    view.require_depth(n, "factors");
    return from_classes(view.text(), view.index().classes(n));
}

FactorSet factors_naive(const LanguageView& view, std::size_t n) {
    view.require_depth(n, "factors");
    std::set<std::string_view> seen;
    std::string_view text = view.text();
    for (std::size_t i = 0; i + n <= text.size(); ++i) seen.insert(text.substr(i, n));
    FactorSet out;
    out.n = n;
    for (auto sv : seen) out.factors.emplace_back(std::string(sv));
    return out;
}

std::size_t complexity(const LanguageView& view, std::size_t n) {
    view.require_depth(n, "complexity");
    return view.index().classes(n).count();
}

SpecialFactors special_factors(const LanguageView& view, std::size_t n) {
    view.require_depth(n + 1, "special_factors");
    std::string_view text = view.text();
    const std::string& alphabet = view.alphabet();
    FactorClasses classes = view.index().classes(n);
    std::vector<unsigned> left_mask(classes.count(), 0), right_mask(classes.count(), 0);
    for (std::size_t i = 0; i + n < text.size(); ++i) {
        left_mask[classes.id[i + 1]] |= 1u << letter_slot(alphabet, text[i]);
        right_mask[classes.id[i]] |= 1u << letter_slot(alphabet, text[i + n]);
    }
    SpecialFactors out;
    out.n = n;
    for (std::size_t c = 0; c < classes.count(); ++c) {
        FiniteWord w(std::string(text.substr(classes.first_pos[c], n)));
        const bool l = __builtin_popcount(left_mask[c]) >= 2;
        const bool r = __builtin_popcount(right_mask[c]) >= 2;
        if (l) out.left.push_back(w);
        if (r) out.right.push_back(w);
        if (l && r) out.bispecial.push_back(w);
    }
    return out;
}

std::vector<SpecialFactors> special_factors_upto(const LanguageView& view, std::size_t n_max) {
    view.require_depth(n_max + 1, "special_factors_upto");
    std::vector<SpecialFactors> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) out.push_back(special_factors(view, n));
    return out;
}

RauzyGraph::RauzyGraph(std::size_t n, FactorSet vertices, FactorSet edges)
    : n_(n), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (const FiniteWord& e : edges_.factors) {
        auto s = vertex_of(e.substr(0, n_));
        auto t = vertex_of(e.substr(1, n_));
        if (!s || !t) {
            throw Error(ErrorKind::Mismatch, "Rauzy edge " + e.str() + " has an endpoint outside L_n");
        }
        source_.push_back(*s);
        target_.push_back(*t);
    }
}

std::optional<std::size_t> RauzyGraph::vertex_of(const FiniteWord& w) const {
    const auto& v = vertices_.factors;
    auto it = std::lower_bound(v.begin(), v.end(), w);
    if (it == v.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
}

std::size_t RauzyGraph::indegree(std::size_t vertex) const {
    return static_cast<std::size_t>(std::count(target_.begin(), target_.end(), vertex));
}

std::size_t RauzyGraph::outdegree(std::size_t vertex) const {
    return static_cast<std::size_t>(std::count(source_.begin(), source_.end(), vertex));
}

bool RauzyGraph::strongly_connected() const {
    const std::size_t nv = vertices_.size();
    if (nv == 0) return true;
    auto reach = [&](bool forward) {
        std::vector<char> seen(nv, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e = 0; e < source_.size(); ++e) {
                std::size_t from = forward ? source_[e] : target_[e];
                std::size_t to = forward ? target_[e] : source_[e];
                if (from == v && !seen[to]) {
                    seen[to] = 1;
                    stack.push_back(to);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    };
    return reach(true) && reach(false);
}

std::vector<std::vector<std::size_t>> RauzyGraph::cycles(std::size_t limit) const {
    const std::size_t nv = vertices_.size();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t e = 0; e < source_.size(); ++e) adj[source_[e]].push_back(target_[e]);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> path;
    std::vector<char> on_path(nv, 0);
    for (std::size_t start = 0; start < nv && out.size() < limit; ++start) {
        // Depth-first search over vertices >= start; every cycle is found once, from its smallest vertex.
        auto dfs = [&](auto&& self, std::size_t v) -> void {
            path.push_back(v);
            on_path[v] = 1;
            for (std::size_t next : adj[v]) {
                if (out.size() >= limit) break;
                if (next == start) {
                    out.push_back(path);
                } else if (next > start && !on_path[next]) {
                    self(self, next);
                }
            }
            on_path[v] = 0;
            path.pop_back();
        };
        dfs(dfs, start);
    }
    return out;
}

std::string RauzyGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph rauzy_" << n_ << " {\n";
    for (const FiniteWord& v : vertices_.factors) out << "  \"" << v.str() << "\";\n";
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        out << "  \"" << vertices_.factors[source_[e]].str() << "\" -> \"" << vertices_.factors[target_[e]].str()
            << "\" [label=\"" << edges_.factors[e].str() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

RauzyGraph rauzy_graph(const LanguageView& view, std::size_t n) {
    view.require_depth(n + 1, "rauzy_graph");
    return RauzyGraph(n, factors(view, n), factors(view, n + 1));
}

SturmianVerdict is_sturmian_view(const LanguageView& view, std::size_t n_max) {
    view.require_depth(n_max, "is_sturmian_view");
    SturmianVerdict verdict;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::size_t c = complexity(view, n);
        verdict.complexities.push_back(c);
        if (c <= n) verdict.aperiodic = false;
        if (c != n + 1 && !verdict.first_failure) {
            verdict.sturmian = false;
            verdict.first_failure = n;
            verdict.complexity_at_failure = c;
        }
    }
    return verdict;
}

}  // namespace sturmian
