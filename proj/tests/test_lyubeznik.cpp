#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detcoh/lyubeznik.hpp"

using namespace detcoh;

namespace {
BiPoly bp(std::initializer_list<std::tuple<long long, long long, long long>> terms) {
    BiPoly p;
    for (const auto& [i, j, c] : terms) p.add_term(i, j, c);
    return p;
}
} // namespace

TEST_CASE("closed-form generating functions") {
    CHECK(lyub_gf(3, 2, 1) == bp({{0, 3, 1}, {2, 4, 1}, {4, 4, 1}}));
    CHECK(lyub_gf(4, 4, 2) == bp({{0, 8, 1},
                                  {3, 10, 1},
                                  {5, 10, 1},
                                  {7, 10, 1},
                                  {8, 12, 1},
                                  {10, 12, 1},
                                  {12, 12, 1}}));
    CHECK(lyub_gf(2, 2, 1) == bp({{3, 3, 1}}));
    // the point (p = 0, smallest cases)
    CHECK(lyub_gf(1, 1, 0) == bp({{0, 0, 1}}));
    CHECK(lyub_gf(3, 2, 0) == bp({{0, 0, 1}}));

    CHECK_THROWS_AS(lyub_gf(3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(lyub_gf(2, 3, 0), std::invalid_argument);
}

TEST_CASE("functor composition reproduces the closed forms") {
    CHECK(lyub_gf_via_iteration(3, 2, 1) == lyub_gf(3, 2, 1));
    CHECK(lyub_gf_via_iteration(4, 4, 2) == lyub_gf(4, 4, 2));
    for (long long n = 1; n <= 5; ++n) {
        long long d = n * n - 1;
        CHECK(lyub_gf_via_iteration(n, n, n - 1) == BiPoly::monomial(1, d, d));
    }
}

TEST_CASE("dimension bookkeeping") {
    CHECK(determinantal_dim(3, 2, 1) == 4);
    CHECK(determinantal_dim(2, 2, 1) == 3);
    CHECK(determinantal_dim(4, 4, 2) == 12);
    CHECK(determinantal_dim(5, 3, 0) == 0);
}

TEST_CASE("tables") {
    LyubeznikTable t = lyub_table(lyub_gf(3, 2, 1), 3, 2, 1);
    REQUIRE(t.dim == 4);
    for (long long i = 0; i <= 4; ++i)
        for (long long j = 0; j <= 4; ++j) {
            long long expect =
                ((i == 0 && j == 3) || (i == 2 && j == 4) || (i == 4 && j == 4)) ? 1 : 0;
            CHECK(t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] == expect);
        }

    LyubeznikTable z = lyub_table(BiPoly{}, 3, 2, 1);
    for (const auto& row : z.entries)
        for (long long v : row) CHECK(v == 0);

    LyubeznikTable t22 = lyub_table(lyub_gf(2, 2, 1), 2, 2, 1);
    REQUIRE(t22.dim == 3);
    long long total = 0;
    for (const auto& row : t22.entries)
        for (long long v : row) total += v;
    CHECK(total == 1);
    CHECK(t22.entries[3][3] == 1);

    // support outside the triangle is a formula inconsistency
    CHECK_THROWS_AS(lyub_table(BiPoly::monomial(1, 4, 2), 3, 2, 1), std::domain_error);
    CHECK_THROWS_AS(lyub_table(BiPoly::monomial(1, 0, 5), 3, 2, 1), std::domain_error);
}

TEST_CASE("latex rendering matches the displayed matrix shape") {
    LyubeznikTable t = lyub_table(lyub_gf(3, 2, 1), 3, 2, 1);
    std::string tex = t.latex();
    CHECK(tex.find("\\begin{pmatrix}") != std::string::npos);
    CHECK(tex.find("0 & 0 & 0 & 1 & 0") != std::string::npos);
    CHECK(tex.find("0 & 0 & 0 & 0 & 1") != std::string::npos);
}
