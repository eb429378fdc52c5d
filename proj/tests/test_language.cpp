#include "doctest.h"

#include "sturmian/error.hpp"
#include "sturmian/language.hpp"

#include <algorithm>

using namespace sturmian;

namespace {

std::vector<FiniteWord> words(std::initializer_list<const char*> xs) {
    std::vector<FiniteWord> out;
    for (const char* x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("Fibonacci factor sets") {
    LanguageView fib = sturmian_view(CFExpansion::parse("[0;1,(1)]"), 12);
    CHECK(factors(fib, 1).factors == words({"A", "B"}));
    CHECK(factors(fib, 2).factors == words({"AA", "AB", "BA"}));
    CHECK(factors(fib, 3).factors == words({"AAB", "ABA", "BAA", "BAB"}));
    CHECK(factors(fib, 3).contains("BAB"));
    CHECK_FALSE(factors(fib, 3).contains("BBA"));
}

TEST_CASE("indexed and naive factor sets agree") {
    for (const char* name : {"thue-morse", "fibonacci-substitution", "periodic:AABAB"}) {
        LanguageView view = control_view(name, 12);
        for (std::size_t n = 1; n <= 12; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            CHECK(factors(view, n).factors == factors_naive(view, n).factors);
        }
    }
    for (const char* s : {"[0;1,(1)]", "[0;1,(2)]", "[0;1,2,(3,1)]", "[0;1,1,4,(1,2,7)]"}) {
        LanguageView view = sturmian_view(CFExpansion::parse(s), 25);
        for (std::size_t n = 1; n <= 25; ++n) {
            CAPTURE(s);
            CAPTURE(n);
            CHECK(factors(view, n).factors == factors_naive(view, n).factors);
            CHECK(complexity(view, n) == n + 1);
        }
    }
}

TEST_CASE("depth is enforced") {
    LanguageView fib = sturmian_view(CFExpansion::parse("[0;1,(1)]"), 5);
    const std::size_t beyond = fib.certified_n() + 1;
    try {
        factors(fib, beyond);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BeyondCertifiedDepth);
    }
    CHECK_THROWS_AS(special_factors(fib, fib.certified_n()), Error);
}

TEST_CASE("special factors of a Sturmian word") {
    LanguageView fib = sturmian_view(CFExpansion::parse("[0;1,(1)]"), 30);
    for (std::size_t n = 1; n < 30; ++n) {
        SpecialFactors s = special_factors(fib, n);
        CHECK(s.left.size() == 1);
        CHECK(s.right.size() == 1);
        // The right special factors are the reversed prefixes.
        std::string prefix = fib.prefix().str().substr(0, n);
        CHECK(s.left.front().str() == prefix);
        std::reverse(prefix.begin(), prefix.end());
        CHECK(s.right.front().str() == prefix);
    }
    std::vector<SpecialFactors> upto = special_factors_upto(fib, 12);
    std::vector<std::size_t> bispecial_lengths;
    for (const auto& s : upto) {
        if (!s.bispecial.empty()) bispecial_lengths.push_back(s.n);
    }
    // Fibonacci bispecials are the palindromic prefixes of length F_k - 2.
    CHECK(bispecial_lengths == std::vector<std::size_t>{1, 3, 6, 11});
}

TEST_CASE("Rauzy graphs") {
    LanguageView fib = sturmian_view(CFExpansion::parse("[0;1,(1)]"), 10);
    RauzyGraph g = rauzy_graph(fib, 3);
    CHECK(g.vertices().size() == 4);
    CHECK(g.edges().size() == 5);
    CHECK(g.strongly_connected());
    std::size_t out2 = 0;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) out2 += g.outdegree(v) == 2;
    CHECK(out2 == 1);
    CHECK(g.vertex_of("ABA").has_value());
    CHECK_FALSE(g.vertex_of("BBB").has_value());
    auto cycles = g.cycles();
    CHECK(cycles.size() == 2);
    CHECK(g.to_dot().find("digraph") != std::string::npos);

    LanguageView tm = control_view("thue-morse", 8);
    RauzyGraph t = rauzy_graph(tm, 2);
    CHECK(t.vertices().size() == 4);
    CHECK(t.edges().size() == 6);
    CHECK(t.strongly_connected());
}

TEST_CASE("Sturmian verdicts") {
    SturmianVerdict fib = is_sturmian_view(sturmian_view(CFExpansion::parse("[0;1,(2)]"), 20), 20);
    CHECK(fib.sturmian);
    CHECK(fib.aperiodic);
    CHECK(fib.complexities.size() == 20);

    SturmianVerdict tm = is_sturmian_view(control_view("thue-morse", 10), 10);
    CHECK_FALSE(tm.sturmian);
    CHECK(tm.aperiodic);
    CHECK(tm.first_failure == std::optional<std::size_t>(2));
    CHECK(tm.complexity_at_failure == 4);
    CHECK(tm.complexities[2] == 6);

    SturmianVerdict per = is_sturmian_view(control_view("periodic:AAB", 10), 10);
    CHECK_FALSE(per.sturmian);
    CHECK_FALSE(per.aperiodic);
    CHECK(per.first_failure == std::optional<std::size_t>(3));
    CHECK(per.complexity_at_failure == 3);

    SturmianVerdict fs = is_sturmian_view(control_view("fibonacci-substitution", 15), 15);
    CHECK(fs.sturmian);
}
