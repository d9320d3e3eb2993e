#include <catch2/catch_amalgamated.hpp>

#include "rgfstat/enumerate.hpp"
#include "test_helpers.hpp"

using namespace rgfstat;

TEST_CASE("R_3 by direct expansion of the two growth rules") {
    auto words = enumerate_rgfs(3);
    REQUIRE(words.size() == 5);
    CHECK(to_string(words[0]) == "111");
    CHECK(to_string(words[1]) == "112");
    CHECK(to_string(words[2]) == "121");
    CHECK(to_string(words[3]) == "122");
    CHECK(to_string(words[4]) == "123");
}

TEST_CASE("R_1 and fixed-k streams") {
    CHECK(enumerate_rgfs(1).size() == 1);
    CHECK(to_string(enumerate_rgfs(1)[0]) == "1");
    CHECK(enumerate_rgfs(5, 2).size() == 15); // S(5,2)
}

TEST_CASE("enumeration agrees with brute filtering of all letter sequences") {
    for (int n = 1; n <= 6; ++n) {
        auto expect = testref::all_rgfs_by_filter(n);
        std::vector<Letters> got;
        for_each_rgf(n, std::nullopt, [&](const Letters& w) { got.push_back(w); });
        CHECK(got == expect); // equality includes lexicographic order
    }
}

TEST_CASE("fixed-k stream equals the filtered full stream") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<Letters> filtered;
            for_each_rgf(n, std::nullopt, [&](const Letters& w) {
                if (*std::max_element(w.begin(), w.end()) == k) filtered.push_back(w);
            });
            std::vector<Letters> direct;
            for_each_rgf(n, k, [&](const Letters& w) { direct.push_back(w); });
            CHECK(direct == filtered);
        }
}

TEST_CASE("counts match the Stirling triangle and Bell numbers") {
    auto triangle = testref::stirling_triangle(9);
    for (int n = 1; n <= 9; ++n) {
        std::int64_t total = 0;
        for (int k = 1; k <= n; ++k) {
            std::int64_t count = 0;
            for_each_rgf(n, k, [&](const Letters&) { ++count; });
            CHECK(count == triangle[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
            CHECK(count == stirling2(n, k));
            total += count;
        }
        CHECK(total == bell(n));
    }
}

TEST_CASE("counting functions") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(6, 6) == 1);
    CHECK(stirling2(0, 0) == 1);
    CHECK(bell(3) == 5);
    CHECK(bell(0) == 1);
    CHECK(bell(10) == 115975);
    CHECK_THROWS_AS(stirling2(3, 4), DomainError);
    CHECK_THROWS_AS(stirling2(-1, 0), DomainError);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(enumerate_rgfs(0), DomainError);
    CHECK_THROWS_AS(enumerate_rgfs(3, 4), DomainError);
    CHECK_THROWS_AS(enumerate_rgfs(3, 0), DomainError);
}

TEST_CASE("checked arithmetic helpers") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(-1, 0) == 1); // empty selection, needed by boundary sums
    CHECK(binom(-1, 1) == 0);
    CHECK(binom(4, 7) == 0);
    CHECK(binom(60, 30) > 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(odd_double_factorial(0) == 1);
    CHECK(odd_double_factorial(6) == 15); // 1*3*5
    CHECK_THROWS_AS(odd_double_factorial(3), DomainError);
    CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 62, 4), OverflowError);
    CHECK_THROWS_AS(checked_add(std::int64_t{1} << 62, std::int64_t{1} << 62), OverflowError);
}
