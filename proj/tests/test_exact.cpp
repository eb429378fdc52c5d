#include "doctest.h"

#include "sturmian/error.hpp"
#include "sturmian/exact.hpp"

using namespace sturmian;

TEST_CASE("rationals reduce and keep a positive denominator") {
    ExactRational r(BigInt(-6), BigInt(-4));
    CHECK(r.to_string() == "3/2");
    CHECK(ExactRational(BigInt(4), BigInt(-6)).to_string() == "-2/3");
    CHECK(ExactRational(7).to_string() == "7/1");
    CHECK_THROWS_AS(ExactRational(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("rational arithmetic and ordering") {
    ExactRational a(BigInt(121), BigInt(34));
    ExactRational b(BigInt(7), BigInt(2));
    CHECK(a > b);
    CHECK((a - b).to_string() == "1/17");
    CHECK((a * b).to_string() == "847/68");
    CHECK((a / b).to_string() == "121/119");
    CHECK((a + b).to_string() == "120/17");
    CHECK(a.floor() == 3);
    CHECK(ExactRational(BigInt(-1), BigInt(2)).floor() == -1);
}

TEST_CASE("decimal rendering is for display only") {
    CHECK(ExactRational(BigInt(121), BigInt(34)).to_decimal(6) == "3.558824");
    CHECK(ExactRational(BigInt(1), BigInt(3)).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("10/4").to_string() == "5/2");
    CHECK(parse_rational("3").to_string() == "3/1");
    CHECK_THROWS_AS(parse_rational("x/2"), Error);
}

TEST_CASE("to_u64 range") {
    CHECK(to_u64(BigInt(42)) == 42);
    CHECK_THROWS_AS(to_u64(BigInt(-1)), Error);
    BigInt huge = BigInt(1) << 70;
    CHECK_THROWS_AS(to_u64(huge), Error);
}

TEST_CASE("continuant matrices multiply") {
    Mat2 m = Mat2::continuant(2) * Mat2::continuant(3);
    // [[2,1],[1,0]] * [[3,1],[1,0]] = [[7,2],[3,1]]
    CHECK(m.m[0][0] == 7);
    CHECK(m.m[0][1] == 2);
    CHECK(m.m[1][0] == 3);
    CHECK(m.m[1][1] == 1);
    CHECK((Mat2::identity() * m).m == m.m);
}
