#include <catch2/catch_amalgamated.hpp>

#include "gross/parse.hpp"
#include "random_gross.hpp"

using namespace gross;

TEST_CASE("atoms and operators") {
    CHECK(parse("g") == grossone());
    CHECK(parse("0") == GrossNumber());
    CHECK(parse("42").as_integer() == Int(42));
    CHECK(parse("1/2").as_rational() == Rat(1, 2));
    CHECK(parse("10/4").as_rational() == Rat(5, 2));
    CHECK(parse("  g +  1 ") == grossone() + GrossNumber(1));
    CHECK(parse("2+3*4").as_integer() == Int(14));
    CHECK(parse("2*3^2").as_integer() == Int(18));
    CHECK(parse("2^3^2").as_integer() == Int(512));  // right-associative
    CHECK(parse("2^-2").as_rational() == Rat(1, 4));
    CHECK(parse("-g^2") == -(grossone() * grossone()));
    CHECK(parse("(g+1)^2") == grossone() * grossone() + GrossNumber(2) * grossone() +
                                  GrossNumber(1));
    CHECK(parse("g - g") == GrossNumber());
    CHECK(parse("123456789012345678901234567890").as_integer() ==
          Int("123456789012345678901234567890"));
}

TEST_CASE("frozen parses") {
    GrossNumber three_terms = parse("3*g^2 - 2*g + 1/2");
    REQUIRE(three_terms.terms().size() == 3);
    CHECK(three_terms == GrossNumber(3) * grossone() * grossone() -
                             GrossNumber(2) * grossone() + GrossNumber(Rat(1, 2)));
    // constant part of the exponent folds into the coefficient
    CHECK(parse("2^(g+1)") == GrossNumber(2) * pow(GrossNumber(2), grossone()));
    CHECK(parse("2^(2*g)") == pow(GrossNumber(4), grossone()));
    CHECK(parse("2^g*5^g") == pow(GrossNumber(10), grossone()));
}

TEST_CASE("syntax errors") {
    CHECK_THROWS_AS(parse(""), syntax_error);
    CHECK_THROWS_AS(parse("g+"), syntax_error);
    CHECK_THROWS_AS(parse("2^^3"), syntax_error);
    CHECK_THROWS_AS(parse("(g"), syntax_error);
    CHECK_THROWS_AS(parse("g)"), syntax_error);
    CHECK_THROWS_AS(parse("3x"), syntax_error);
    CHECK_THROWS_AS(parse("gg"), syntax_error);
    CHECK_THROWS_AS(parse("*2"), syntax_error);
    CHECK_THROWS_AS(parse("\xe2\x91\xa0"), syntax_error);  // only ASCII 'g' names the unit
}

TEST_CASE("arithmetic errors surface through the grammar") {
    CHECK_THROWS_AS(parse("1/0"), division_by_zero);
    CHECK_THROWS_AS(parse("g/(g-g)"), division_by_zero);
    CHECK_THROWS_AS(parse("g^2/(g+1)"), inexact_division);
    CHECK_THROWS_AS(parse("1/(g+1)"), inexact_division);
    CHECK_THROWS_AS(parse("g^g"), unsupported_form);
    CHECK_THROWS_AS(parse("2^(2^g)"), unsupported_form);
    CHECK_THROWS_AS(parse("2^(1/2)"), unsupported_form);
    CHECK_THROWS_AS(parse("g^(1/2)"), unsupported_form);
    CHECK_THROWS_AS(parse("(g+1)^-1"), unsupported_form);
    CHECK_THROWS_AS(parse("0^0"), zero_to_nonpositive);
    CHECK_THROWS_AS(parse("0^-1"), zero_to_nonpositive);
    CHECK_THROWS_AS(parse("0^(-g)"), zero_to_nonpositive);
    CHECK(parse("0^g") == GrossNumber());
}

TEST_CASE("print-then-parse is the identity") {
    std::mt19937 rng(20250101);
    for (int i = 0; i < 10000; ++i) {
        GrossNumber v = tg::random_reachable(rng);
        std::string s = to_string(v);
        GrossNumber back = parse(s);
        CHECK(back == v);
        CHECK(to_string(back) == s);
    }
}
