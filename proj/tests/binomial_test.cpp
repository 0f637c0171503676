#include <doctest.h>

#include <cstdint>
#include <vector>

#include <powsum/binomial.hpp>
#include <powsum/natural.hpp>

using powsum::Natural;

namespace {

// Word-sized Pascal-triangle oracle, rebuilt from scratch per query.
uint64_t triangle_oracle(unsigned m, unsigned k) {
    std::vector<std::vector<uint64_t>> tri(m + 1);
    for (unsigned r = 0; r <= m; ++r) {
        tri[r].assign(r + 1, 1);
        for (unsigned j = 1; j < r; ++j) tri[r][j] = tri[r - 1][j - 1] + tri[r - 1][j];
    }
    return tri[m][k];
}

}  // namespace

TEST_SUITE_BEGIN("binomial");

TEST_CASE("binomial on the worked example row") {
    CHECK(powsum::binomial(14, 4) == Natural(1001));
    CHECK(powsum::binomial(14, 8) == Natural(3003));
    CHECK(powsum::binomial(14, 12) == Natural(91));
}

TEST_CASE("binomial basics and out-of-range k") {
    CHECK(powsum::binomial(5, int64_t(0)) == Natural(1));
    CHECK(powsum::binomial(0, int64_t(0)) == Natural(1));
    CHECK(powsum::binomial(7, 7) == Natural(1));
    CHECK(powsum::binomial(5, int64_t(-1)) == Natural(0));
    CHECK(powsum::binomial(5, int64_t(-100)) == Natural(0));
    CHECK(powsum::binomial(5, 6) == Natural(0));
    CHECK(triangle_oracle(6, 3) == 20);
    CHECK(powsum::binomial(6, 3) == Natural(20));
    CHECK(powsum::binomial(52, 5) == Natural(2598960));
}

TEST_CASE("binomial_row basics") {
    const auto row0 = powsum::binomial_row(0);
    REQUIRE(row0.size() == 1);
    CHECK(row0[0] == Natural(1));

    const auto row4 = powsum::binomial_row(4);
    REQUIRE(row4.size() == 5);
    const uint64_t want[] = {1, 4, 6, 4, 1};
    for (std::size_t k = 0; k < 5; ++k) CHECK(row4[k] == Natural(want[k]));

    const auto row14 = powsum::binomial_row(14);
    REQUIRE(row14.size() == 15);
    CHECK(row14[4] == Natural(1001));
    CHECK(row14[8] == Natural(3003));
    CHECK(row14[12] == Natural(91));
}

TEST_CASE("symmetry C(m,k) == C(m,m-k)") {
    for (uint64_t m = 0; m <= 30; ++m)
        for (uint64_t k = 0; k <= m; ++k)
            CHECK(powsum::binomial(m, k) == powsum::binomial(m, m - k));
}

TEST_CASE("row sums are powers of two") {
    for (uint64_t m = 0; m <= 30; ++m) {
        Natural sum;
        for (const auto& entry : powsum::binomial_row(m)) sum += entry;
        CHECK(sum == powsum::pow(Natural(2), m));
    }
}

TEST_CASE("additive row and multiplicative formula agree up to m = 50") {
    for (uint64_t m = 0; m <= 50; ++m) {
        const auto row = powsum::binomial_row(m);
        REQUIRE(row.size() == m + 1);
        for (uint64_t k = 0; k <= m; ++k) CHECK(row[k] == powsum::binomial(m, k));
    }
}

TEST_SUITE_END();
