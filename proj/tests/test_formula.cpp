#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cq/formula.hpp"

using namespace cq;

TEST_CASE("parse and evaluate") {
    auto f = parse_formula("a^2*(b^2+c^2-a^2)");
    CHECK(eval_formula(*f, 3, 4, 5) == doctest::Approx(9 * (16 + 25 - 9)));

    auto g = parse_formula("(b+c-a)/2");
    CHECK(eval_formula(*g, 2, 3, 4) == doctest::Approx(2.5));

    CHECK_THROWS_AS(parse_formula("a^*b"), ParseError);
    try {
        parse_formula("a^*b");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("S is twice the area") {
    auto f = parse_formula("S");
    CHECK(eval_formula(*f, 3, 4, 5) == doctest::Approx(12.0));  // area 6
    auto a = parse_formula("a");
    CHECK(eval_formula(*a, 3, 4, 5) == doctest::Approx(3.0));
}

TEST_CASE("domain errors") {
    auto f = parse_formula("sqrt(a-b)");
    CHECK_THROWS_AS(eval_formula(*f, 3, 4, 5), DomainError);
    auto g = parse_formula("1/(a-a)");
    CHECK_THROWS_AS(eval_formula(*g, 3, 4, 5), DivisionByZero);
}

TEST_CASE("unary minus binds looser than ^") {
    auto f = parse_formula("-a^2");
    CHECK(eval_formula(*f, 3, 4, 5) == doctest::Approx(-9.0));
    auto g = parse_formula("(-a)^2");
    CHECK(eval_formula(*g, 3, 4, 5) == doctest::Approx(9.0));
}

TEST_CASE("negative exponents") {
    auto f = parse_formula("a^-2");
    CHECK(eval_formula(*f, 2, 3, 4) == doctest::Approx(0.25));
}

TEST_CASE("parse -> pretty -> parse is a fixed point") {
    const char* formulas[] = {
        "a^2*(b^2+c^2-a^2)",
        "1/(sqrt(3)*(b^2+c^2-a^2)+2*S)",
        "-a^2+3*b*c/(a-b)",
        "2*a^2-b^2-c^2+S",
        "a/(a+b+c)+a*(a-b)*(c-a)/(a^2*(b+c)+b^2*(c+a)+c^2*(a+b)-a^3-b^3-c^3-3*a*b*c)",
    };
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(1.0, 2.0);
    for (const char* src : formulas) {
        auto f1 = parse_formula(src);
        const std::string printed = f1->pretty();
        auto f2 = parse_formula(printed);
        CHECK(f2->pretty() == printed);
        for (int k = 0; k < 20; ++k) {
            double x = U(rng), y = U(rng), z = U(rng);
            // force a valid triangle
            const double a = x + y, b = y + z, c = z + x;
            double v1, v2;
            try {
                v1 = eval_formula(*f1, a, b, c);
                v2 = eval_formula(*f2, a, b, c);
            } catch (const CqError&) {
                continue;
            }
            CHECK(v1 == doctest::Approx(v2).epsilon(1e-14));
        }
    }
}

TEST_CASE("exact integer polynomial evaluation vs naive oracle") {
    // naive oracle for a small fixed polynomial, checked at small integers
    auto f = parse_formula("a^2*b+3*c-b^2");
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b)
            for (int c = 2; c <= 5; ++c) {
                if (a + b <= c || b + c <= a || c + a <= b) continue;
                const double expect = double(a) * a * b + 3.0 * c - double(b) * b;
                CHECK(eval_formula(*f, a, b, c) == expect);  // exact
            }
}

TEST_CASE("barycentric_triple cyclic substitution") {
    const Triangle T{{0, 0}, {4, 0}, {0, 3}};  // a=5, b=3, c=4
    auto f = parse_formula("a");
    const auto [u, v, w] = barycentric_triple(*f, T);
    CHECK(u == doctest::Approx(5));
    CHECK(v == doctest::Approx(3));
    CHECK(w == doctest::Approx(4));

    auto one = parse_formula("1");
    const auto [p, q, r] = barycentric_triple(*one, T);
    CHECK(p == doctest::Approx(1));
    CHECK(q == doctest::Approx(1));
    CHECK(r == doctest::Approx(1));
}

TEST_CASE("symmetric formula gives equal coordinates") {
    auto f = parse_formula("a^2+b^2+c^2");
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int k = 0; k < 20; ++k) {
        const Triangle T{{U(rng), U(rng)}, {U(rng), U(rng)}, {U(rng), U(rng)}};
        if (std::abs(T.signed_area()) < 0.05) continue;
        const auto [u, v, w] = barycentric_triple(*f, T);
        CHECK(u == doctest::Approx(v));
        CHECK(v == doctest::Approx(w));
    }
}
