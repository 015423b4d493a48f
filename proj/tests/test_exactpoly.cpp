#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detcoh/laurent.hpp"
#include "detcoh/shapes.hpp"

using namespace detcoh;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long long, long long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

// term-by-term convolution, independent of operator*
LaurentPoly mul_oracle(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
    return r;
}

} // namespace

TEST_CASE("monomial multiplication and additive identity") {
    CHECK(poly({{0, 1}, {1, 1}}) * poly({{1, 1}}) == poly({{1, 1}, {2, 1}}));
    LaurentPoly p = poly({{-2, 3}, {5, -1}});
    CHECK(p + LaurentPoly{} == p);
    CHECK(LaurentPoly{}.is_zero());
}

TEST_CASE("expansion against the term-by-term oracle") {
    LaurentPoly a = poly({{0, 1}, {2, 1}});
    LaurentPoly b = poly({{0, 1}, {2, 1}, {4, 1}});
    LaurentPoly expect = poly({{0, 1}, {2, 2}, {4, 2}, {6, 1}});
    CHECK(mul_oracle(a, b) == expect);
    CHECK(a * b == expect);
}

TEST_CASE("normalization removes cancelled terms") {
    LaurentPoly p = poly({{3, 5}});
    p.add_term(3, -5);
    CHECK(p.is_zero());
    CHECK(p.coeff(3) == 0);
}

TEST_CASE("evaluation") {
    CHECK(poly({{0, 1}, {1, 1}, {2, 1}}).eval(-1) == 1);
    CHECK(poly({{3, 1}}).eval(-1) == -1);
    // {3 choose 2}_{q^2} at q = -1 equals the plain binomial 3
    Int b = binom(3, 2);
    CHECK(qbinom(3, 2).stretch(2).eval(-1) == b);
    CHECK(b == 3);

    CHECK(poly({{0, 7}, {2, 1}}).eval(0) == 7);
    CHECK_THROWS_AS(poly({{-1, 1}}).eval(0), std::domain_error);
    // non-integral values are rejected rather than rounded
    CHECK(poly({{-1, 2}}).eval(2) == 1);
    CHECK_THROWS_AS(poly({{-1, 1}}).eval(2), std::domain_error);
}

TEST_CASE("variable inversion") {
    CHECK(poly({{0, 1}, {1, 1}}).invert_var() == poly({{0, 1}, {-1, 1}}));
    CHECK(poly({{0, 42}}).invert_var() == poly({{0, 42}}));
    // {4 choose 2}_{q^{-1}} = {4 choose 2}_q * q^{-4}
    CHECK(qbinom(4, 2).invert_var() == qbinom(4, 2).shifted(-4));
}

TEST_CASE("bivariate arithmetic and embedding") {
    CHECK(embed(poly({{2, 1}}), BiVar::w) == BiPoly::monomial(1, 0, 2));
    BiPoly s = BiPoly::monomial(1, 0, 3) + BiPoly::monomial(1, 2, 4);
    CHECK(s.coeff(0, 3) == 1);
    CHECK(s.coeff(2, 4) == 1);
    CHECK(s - s == BiPoly{});
}

TEST_CASE("assembling a bivariate generating function from factors") {
    // (m,n) = (3,2), p = 1: the two summands give w^3 + q^2*w^4 + q^4*w^4
    BiPoly L;
    L += embed(qbinom(2, 0).stretch(2), BiVar::q) *
         embed(qbinom(1, 1).stretch(2).shifted(3), BiVar::w);
    L += embed(qbinom(2, 1).stretch(2).shifted(2), BiVar::q) *
         embed(qbinom(0, 0).stretch(2).shifted(4), BiVar::w);
    BiPoly expect = BiPoly::monomial(1, 0, 3) + BiPoly::monomial(1, 2, 4) +
                    BiPoly::monomial(1, 4, 4);
    CHECK(L == expect);
    CHECK(L.str() == "w^3 + q^2*w^4 + q^4*w^4");
}

TEST_CASE("text rendering") {
    CHECK(poly({{0, 1}, {2, 2}, {4, 1}}).str() == "1 + 2*q^2 + q^4");
    CHECK(poly({{-1, -3}, {1, 1}}).str() == "-3*q^-1 + q");
    CHECK(LaurentPoly{}.str() == "0");
}

TEST_CASE("exponent overflow is refused, not wrapped") {
    LaurentPoly big = LaurentPoly::monomial(1, (1LL << 62));
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
