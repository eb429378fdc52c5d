#include "doctest.h"

#include "sturmian/error.hpp"
#include "sturmian/language.hpp"
#include "sturmian/morphisms.hpp"
#include "sturmian/powers.hpp"

#include <random>

using namespace sturmian;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Mismatch;
}

}  // namespace

TEST_CASE("parse and apply") {
    BinaryMorphism m = BinaryMorphism::parse("A->AAB; B->A");
    CHECK(m == phi(2));
    CHECK(m.apply("AB").str() == "AABA");
    CHECK(m.to_string() == "A->AAB; B->A");
    CHECK(kind_of([] { BinaryMorphism::parse("A->AC; B->A"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { BinaryMorphism::parse("A->; B->A"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { BinaryMorphism::parse("garbage"); }) == ErrorKind::ParseError);
}

TEST_CASE("generators") {
    Generators g = generators();
    CHECK(g.psi1.apply("AB").str() == "ABB");
    CHECK(g.psi2.apply("AB").str() == "BAB");
    CHECK(g.E.apply("AAB").str() == "BBA");
    CHECK(compose(g.E, g.E) == BinaryMorphism::identity());
}

TEST_CASE("phi_c = E o psi2^c") {
    Generators g = generators();
    for (std::size_t c = 1; c <= 10; ++c) {
        CAPTURE(c);
        CHECK(phi(c) == compose(g.E, power(g.psi2, c)));
    }
    CHECK(kind_of([] { phi(0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("incidence matrices multiply under composition") {
    std::mt19937_64 rng(9);
    Generators g = generators();
    const BinaryMorphism pool[] = {g.psi1, g.psi2, g.E, phi(1), phi(3)};
    for (int trial = 0; trial < 200; ++trial) {
        BinaryMorphism m = BinaryMorphism::identity();
        Mat2 expected = Mat2::identity();
        const int depth = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < depth; ++i) {
            const BinaryMorphism& next = pool[rng() % 5];
            m = compose(next, m);
            expected = expected * next.incidence();
        }
        CHECK(m.incidence().m == expected.m);
        // Letter counts of an image follow the incidence matrix.
        std::string w;
        for (int i = 0; i < 12; ++i) w += rng() % 2 ? 'A' : 'B';
        FiniteWord image = m.apply(FiniteWord(w));
        RowVec2 counts{BigInt(FiniteWord(w).count('A')), BigInt(FiniteWord(w).count('B'))};
        RowVec2 predicted = counts * m.incidence();
        CHECK(predicted[0] == image.count('A'));
        CHECK(predicted[1] == image.count('B'));
    }
}

TEST_CASE("phi maps Sturmian words to the transformed slope") {
    CFExpansion cf = CFExpansion::parse("[0;1,2,(3,1)]");
    for (std::size_t c = 1; c <= 4; ++c) {
        CFExpansion target = slope_transform(cf, c);
        CHECK(target == cf.tail_from(2).with_prefix({1, BigInt(c)}));
        FiniteWord image = phi(c).apply(characteristic_prefix(cf, 400));
        CHECK(image.substr(0, 400) == characteristic_prefix(target, 400));
    }
}

TEST_CASE("lifting a power") {
    LiftedPower l = lift_power("A", "AA", 1);
    CHECK(l.w.str() == "AB");
    CHECK(l.v.str() == "ABABA");
    CHECK(l.exponent.to_string() == "5/2");
    CHECK(kind_of([] { lift_power("A", "A", 1); }) == ErrorKind::ExponentTooSmall);
    CHECK(kind_of([] { lift_power("A", "AB", 1); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { lift_power("BB", "BBBB", 1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("maximal-index construction on Fibonacci") {
    CFExpansion fib = CFExpansion::parse("[0;1,(1)]");
    ConstructionTrace t = construct_max_index_factor(fib, 8);
    CHECK(t.w_length() == 34);
    CHECK(t.v_length() == 121);
    CHECK(t.exponent == index_upper_bound(fib, 8));
    CHECK(t.steps.size() == 8);
    CHECK(t.steps.front().w.str() == "A");
    CHECK(t.steps.front().v.str() == "AA");
    ConstructionTrace one = construct_max_index_factor(fib, 1);
    CHECK(one.w.str() == "A");
    CHECK(one.v.str() == "AA");
    CHECK(one.steps.size() == 1);
}

TEST_CASE("construction lengths and attainment") {
    for (const char* s : {"[0;1,(1)]", "[0;1,(2)]", "[0;1,2,(3,1)]", "[0;1,1,4,(1,2,7)]"}) {
        CFExpansion cf = CFExpansion::parse(s);
        Convergents conv = convergents(cf, 7);
        for (std::size_t N = 1; N <= 6; ++N) {
            CAPTURE(s);
            CAPTURE(N);
            ConstructionTrace t = construct_max_index_factor(cf, N);
            const auto k = static_cast<long>(N);
            CHECK(BigInt(t.w_length()) == conv.q(k));
            CHECK(BigInt(t.v_length()) == (2 + cf.coefficient(N + 1)) * conv.q(k) + conv.q(k - 1) - 2);
            CHECK(is_power_of(t.v.view(), t.w.view()));
            LanguageView view = sturmian_view(cf, t.v_length());
            CHECK(view.index().find(t.v.view()).has_value());
            CHECK(index_of_factor(view, t.w).ind == index_upper_bound(cf, N));
        }
    }
}

TEST_CASE("construction needs coefficients") {
    CHECK(kind_of([] { construct_max_index_factor(CFExpansion::parse("[0;1,2,3]"), 3); }) ==
          ErrorKind::InsufficientCoefficients);
    CHECK(kind_of([] { construct_max_index_factor(CFExpansion::parse("[0;1,(1)]"), 0); }) ==
          ErrorKind::InvalidParameter);
    CHECK(kind_of([] { construct_max_index_factor(CFExpansion::parse("[0;2,(1)]"), 2); }) ==
          ErrorKind::InvalidParameter);
}
