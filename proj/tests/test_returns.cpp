#include "doctest.h"

#include "sturmian/error.hpp"
#include "sturmian/returns.hpp"

using namespace sturmian;

namespace {

std::vector<FiniteWord> words(std::initializer_list<const char*> xs) {
    std::vector<FiniteWord> out;
    for (const char* x : xs) out.emplace_back(x);
    return out;
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Mismatch;
}

const CFExpansion kFib = CFExpansion::parse("[0;1,(1)]");
const CFExpansion kSilver = CFExpansion::parse("[0;1,(2)]");
const CFExpansion kMixed = CFExpansion::parse("[0;1,2,(3,1)]");

}  // namespace

TEST_CASE("closed-form recurrence function") {
    std::vector<std::uint64_t> fib, silver, mixed;
    for (std::uint64_t n = 1; n <= 11; ++n) fib.push_back(to_u64(recurrence_closed(kFib, n)));
    for (std::uint64_t n = 1; n <= 7; ++n) {
        silver.push_back(to_u64(recurrence_closed(kSilver, n)));
        mixed.push_back(to_u64(recurrence_closed(kMixed, n)));
    }
    CHECK(fib == std::vector<std::uint64_t>{3, 6, 10, 11, 17, 18, 19, 28, 29, 30, 31});
    CHECK(silver == std::vector<std::uint64_t>{4, 5, 12, 13, 14, 15, 30});
    CHECK(mixed == std::vector<std::uint64_t>{4, 5, 15, 16, 17, 18, 19});
    CHECK(recurrence_closed(kFib, 34) == 55 + 34 + 33);
}

TEST_CASE("brute recurrence with witnesses") {
    LanguageView fib = sturmian_view(kFib, 12);
    RecurrenceValue r1 = recurrence_brute(fib, 1);
    CHECK(r1.R == 3);
    CHECK(r1.witness.str() == "B");
    CHECK(r1.witness_return.str() == "BAAB");
    RecurrenceValue r2 = recurrence_brute(fib, 2);
    CHECK(r2.R == 6);
    CHECK(r2.witness.str() == "AA");
    CHECK(r2.witness_return.str() == "AABABAA");
    RecurrenceValue r3 = recurrence_brute(fib, 3);
    CHECK(r3.R == 10);
    CHECK(r3.witness.str() == "BAB");
    CHECK(r3.witness_return.str() == "BABAABAABAB");
    for (std::size_t n = 1; n <= 12; ++n) {
        CHECK(recurrence_brute(fib, n).R == to_u64(recurrence_closed(kFib, n)));
    }
}

TEST_CASE("brute recurrence agrees with the closed form on several slopes") {
    for (const CFExpansion& cf : {kSilver, kMixed, CFExpansion::parse("[0;1,1,4,(1,2,7)]"),
                                  CFExpansion::parse("[0;1,5,1,1,(2)]")}) {
        LanguageView view = sturmian_view(cf, 40);
        for (std::size_t n = 1; n <= 40; ++n) {
            CAPTURE(cf.to_string());
            CAPTURE(n);
            CHECK(recurrence_brute(view, n).R == to_u64(recurrence_closed(cf, n)));
        }
    }
}

TEST_CASE("return words") {
    LanguageView fib = sturmian_view(kFib, 10);
    ReturnWordSet a = return_words(fib, "A");
    CHECK(a.returns == words({"AB", "A"}));
    CHECK(a.complete_returns == words({"ABA", "AA"}));
    ReturnWordSet ab = return_words(fib, "AB");
    CHECK(ab.returns == words({"ABA", "AB"}));
    CHECK(kind_of([&] { return_words(fib, "BB"); }) == ErrorKind::FactorNotInLanguage);
    for (const auto& set : all_return_words(fib, 6)) CHECK(set.returns.size() == 2);
}

TEST_CASE("Thue-Morse has more than two return words") {
    LanguageView tm = control_view("thue-morse", 6);
    CHECK(return_words(tm, "0").returns.size() == 3);
    CHECK(kind_of([&] { derivated_word(tm, "0"); }) == ErrorKind::NotTwoReturnWords);
}

TEST_CASE("derivated words") {
    LanguageView fib = sturmian_view(kFib, 12);
    DerivedWord d = derivated_word(fib, "A", 8);
    CHECK(d.word.str() == "01001010");
    CHECK(d.r0.str() == "AB");
    CHECK(d.r1.str() == "A");
    CHECK(d.first_occurrence == 0);
    DerivedWord db = derivated_word(fib, "B", 5);
    CHECK(db.first_occurrence == 1);
    CHECK(db.word.size() == 5);
    CHECK(kind_of([&] { derivated_word(fib, "A", 1u << 30); }) == ErrorKind::BeyondCertifiedDepth);
}

TEST_CASE("derived views of Sturmian words are Sturmian") {
    LanguageView fib = sturmian_view(kFib, 40);
    for (const char* w : {"A", "B", "AB", "BAA", "ABAAB"}) {
        CAPTURE(w);
        SturmianVerdict v = derived_is_sturmian(fib, w, 10);
        CHECK(v.sturmian);
    }
}
