// Acceptance suite: one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include "sturmian/error.hpp"
#include "sturmian/language.hpp"
#include "sturmian/morphisms.hpp"
#include "sturmian/powers.hpp"
#include "sturmian/report.hpp"
#include "sturmian/returns.hpp"
#include "sturmian/wordgen.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace sturmian;

namespace {

const char* const kSlopes[] = {"[0;1,(1)]", "[0;1,(2)]", "[0;1,2,(3,1)]"};

std::size_t jobs = 1;

// Throws with a message on the first failed check; returns a short summary otherwise.
using Check = std::function<std::string()>;

void fail(const std::string& why) { throw std::runtime_error(why); }

std::string closed_form_agreement() {
    for (const char* s : kSlopes) {
        CFExpansion cf = CFExpansion::parse(s);
        LanguageView view = sturmian_view(cf, 100);
        std::vector<report::RecurrenceRow> rows = report::recurrence_table(view, 100, jobs);
        for (const auto& r : rows) {
            if (!r.match) {
                fail(std::string(s) + " n=" + std::to_string(r.n) + " brute " + std::to_string(r.R_brute) +
                     " closed " + r.R_closed->str());
            }
        }
    }
    return "R(n) brute = closed form for n in [1,100] on 3 slopes";
}

std::string witnesses_at_denominators() {
    std::ostringstream summary;
    for (const char* s : kSlopes) {
        CFExpansion cf = CFExpansion::parse(s);
        const std::size_t q8 = static_cast<std::size_t>(to_u64(convergents(cf, 8).q(8)));
        report::VerifyResult r = report::run_verify(sturmian_view(cf, q8), q8, jobs);
        if (r.expected_witness_lengths.empty() || r.expected_witness_lengths.back() != q8) {
            fail(std::string(s) + ": q_8 = " + std::to_string(q8) + " not among the expected witness lengths");
        }
        if (!r.missing_witness_lengths.empty()) {
            fail(std::string(s) + ": no witness at n=" + std::to_string(r.missing_witness_lengths.front()));
        }
        if (!r.ok()) fail(std::string(s) + ": " + r.failures.front());
        summary << (summary.tellp() > 0 ? "; " : "") << s << " up to n=" << q8;
    }
    return "witness at every q_N, N<=8: " + summary.str();
}

std::string construction_exactness() {
    for (const char* s : kSlopes) {
        CFExpansion cf = CFExpansion::parse(s);
        Convergents conv = convergents(cf, 8);
        for (std::size_t N = 1; N <= 8; ++N) {
            const std::string where = std::string(s) + " N=" + std::to_string(N);
            ConstructionTrace t = construct_max_index_factor(cf, N);
            const auto k = static_cast<long>(N);
            if (BigInt(t.w_length()) != conv.q(k)) fail(where + ": |w| != q_N");
            if (BigInt(t.v_length()) != (2 + cf.coefficient(N + 1)) * conv.q(k) + conv.q(k - 1) - 2) {
                fail(where + ": |v| != (2+a_{N+1})q_N + q_{N-1} - 2");
            }
            report::ConstructionCheck c = report::check_construction(cf, t);
            if (!c.v_in_language) fail(where + ": v not found in the certified prefix");
            if (!(c.brute_index.ind == index_upper_bound(cf, N))) {
                fail(where + ": brute ind(w) " + c.brute_index.display() + " != bound " +
                     index_upper_bound(cf, N).to_string());
            }
        }
    }
    return "|w|, |v| and brute ind(w) exact for N in [1,8] on 3 slopes";
}

std::string fibonacci_index() {
    CFExpansion fib = CFExpansion::parse("[0;1,(1)]");
    ConstructionTrace t = construct_max_index_factor(fib, 8);
    const ExactRational expected(BigInt(121), BigInt(34));
    if (!(t.exponent == expected)) fail("construction index " + t.exponent.to_string());
    if (!(index_upper_bound(fib, 8) == expected)) fail("bound " + index_upper_bound(fib, 8).to_string());
    report::ConstructionCheck c = report::check_construction(fib, t);
    if (!(c.brute_index.ind == expected)) fail("brute index " + c.brute_index.display());
    // 2 + phi = (5 + sqrt 5) / 2 lies in (3.618, 3.6181).
    if (!(expected < ExactRational(BigInt(3618), BigInt(1000)))) fail("index not below 2 + phi");
    return "index " + t.exponent.to_string() + " = " + t.exponent.to_decimal(4) + " < 2+phi";
}

std::string two_return_words() {
    std::size_t bispecials = 0;
    for (const char* s : kSlopes) {
        CFExpansion cf = CFExpansion::parse(s);
        LanguageView view = sturmian_view(cf, 41);
        for (std::size_t n = 1; n <= 40; ++n) {
            for (const auto& set : all_return_words(view, n)) {
                if (set.returns.size() != 2) {
                    fail(std::string(s) + ": " + set.base.str() + " has " + std::to_string(set.returns.size()) +
                         " return words");
                }
            }
            for (const auto& b : special_factors(view, n).bispecial) {
                ReturnWordSet set = return_words(view, b);
                if (set.returns[0].size() + set.returns[1].size() != n + 2) {
                    fail(std::string(s) + ": bispecial " + b.str() + " has |r0|+|r1| != n+2");
                }
                ++bispecials;
            }
        }
    }
    return "two return words for all factors of length <= 40; " + std::to_string(bispecials) +
           " bispecials with |r0|+|r1| = n+2";
}

std::string inequality_all_words() {
    std::vector<LanguageView> views;
    for (const char* s : kSlopes) views.push_back(sturmian_view(CFExpansion::parse(s), 40));
    views.push_back(control_view("thue-morse", 40));
    views.push_back(control_view("fibonacci-substitution", 40));
    std::size_t tight = 0;
    for (const auto& v : views) {
        InequalityReport r = inequality_audit(v, 40, jobs);
        for (const auto& row : r.rows) {
            if (!row.violations.empty()) {
                fail(v.label() + ": " + row.violations.front().str() + " violates the inequality");
            }
            tight += row.tight;
        }
    }
    return "R >= n ind(w) + C(n) - n on 5 words, lengths <= 40 (" + std::to_string(tight) + " tight factors)";
}

std::string negative_controls() {
    LanguageView tm = control_view("thue-morse", 30);
    SturmianVerdict v = is_sturmian_view(tm, 30);
    if (v.sturmian || v.first_failure != std::optional<std::size_t>(2) || v.complexity_at_failure != 4) {
        fail("Thue-Morse verdict unexpected");
    }
    std::size_t witnesses = 0;
    for (const auto& row : equality_witnesses(tm, 2, 30, jobs)) witnesses += row.witnesses.size();
    if (witnesses != 0) fail("Thue-Morse has " + std::to_string(witnesses) + " witnesses in [2,30]");
    for (const char* p : {"periodic:AB", "periodic:AAB", "periodic:ABAAB"}) {
        SturmianVerdict pv = is_sturmian_view(control_view(p, 10), 10);
        if (pv.aperiodic) fail(std::string(p) + " passed the aperiodicity check");
    }
    return "Thue-Morse C(2)=4, 0 witnesses for n in [2,30]; periodic controls not aperiodic";
}

std::string oracle_equivalence() {
    std::size_t derived = 0;
    for (const char* s : kSlopes) {
        CFExpansion cf = CFExpansion::parse(s);
        if (!(characteristic_prefix(cf, 10000) == certified_exchange_prefix(cf, 10000))) {
            fail(std::string(s) + ": recursion and interval exchange disagree");
        }
        LanguageView view = sturmian_view(cf, 6);
        for (std::size_t n = 1; n <= 5; ++n) {
            for (const auto& w : factors(view, n).factors) {
                SturmianVerdict v = derived_is_sturmian(view, w, 15);
                if (!v.sturmian) fail(std::string(s) + ": derived word of " + w.str() + " is not Sturmian");
                ++derived;
            }
        }
    }
    return "10000 letters agree on 3 slopes; " + std::to_string(derived) + " derived words Sturmian to depth 15";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    const std::pair<const char*, Check> criteria[] = {
        {"closed-form-recurrence", closed_form_agreement},
        {"witnesses-at-denominators", witnesses_at_denominators},
        {"construction-exactness", construction_exactness},
        {"fibonacci-index", fibonacci_index},
        {"two-return-words", two_return_words},
        {"recurrence-index-inequality", inequality_all_words},
        {"negative-controls", negative_controls},
        {"oracle-equivalence", oracle_equivalence},
    };
    int failures = 0;
    int number = 0;
    for (const auto& [name, check] : criteria) {
        ++number;
        const auto start = std::chrono::steady_clock::now();
        std::string status = "PASS", detail;
        try {
            detail = check();
        } catch (const std::exception& e) {
            status = "FAIL";
            detail = e.what();
            ++failures;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << status << ' ' << number << ' ' << name << " (" << secs << " s): " << detail;
        std::cout << line.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
