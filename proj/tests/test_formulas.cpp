#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "rgfstat/formulas.hpp"
#include "test_helpers.hpp"

using namespace rgfstat;

TEST_CASE("strict partition streams") {
    auto d21 = enumerate_strict_partitions(2, 1);
    REQUIRE(d21.size() == 2);
    CHECK(d21[0] == std::vector<int>{1});
    CHECK(d21[1] == std::vector<int>{2});
    CHECK(enumerate_strict_partitions(4, 0) == std::vector<std::vector<int>>{{}});
    CHECK(enumerate_strict_partitions(3, 3) == std::vector<std::vector<int>>{{3, 2, 1}});
    for (int max_part = 1; max_part <= 7; ++max_part)
        for (int count = 0; count <= max_part; ++count) {
            auto all = enumerate_strict_partitions(max_part, count);
            CHECK(static_cast<std::int64_t>(all.size()) == binom(max_part, count));
            for (const auto& lambda : all)
                for (std::size_t i = 1; i < lambda.size(); ++i)
                    CHECK(lambda[i - 1] > lambda[i]);
        }
    CHECK_THROWS_AS(enumerate_strict_partitions(0, 1), DomainError);
}

TEST_CASE("descending subsets") {
    auto s31 = subset_sum_terms(3, 1);
    REQUIRE(s31.size() == 3);
    CHECK(s31[0] == std::vector<int>{3});
    CHECK(s31[1] == std::vector<int>{2});
    CHECK(s31[2] == std::vector<int>{1});
    CHECK(subset_sum_terms(2, 2) == std::vector<std::vector<int>>{{2, 1}});
    CHECK(subset_sum_terms(4, 0) == std::vector<std::vector<int>>{{}});
    CHECK_THROWS_AS(subset_sum_terms(2, 3), DomainError);
}

TEST_CASE("composition counts match gf coefficient extraction") {
    CHECK(composition_count(5, 3, 2) == 3); // 122, 212, 221
    CHECK(composition_count(4, 4, 9) == 1);
    CHECK(composition_count(3, 1, 2) == 0);
    // coefficient of x^n in (x + ... + x^m)^k by direct convolution
    for (int m = 2; m <= 4; ++m)
        for (int k = 1; k <= 5; ++k) {
            std::vector<std::int64_t> coeff{1};
            for (int rep = 0; rep < k; ++rep) {
                std::vector<std::int64_t> next(coeff.size() + static_cast<std::size_t>(m), 0);
                for (std::size_t i = 0; i < coeff.size(); ++i)
                    for (int v = 1; v <= m; ++v) next[i + static_cast<std::size_t>(v)] += coeff[i];
                coeff = std::move(next);
            }
            for (int n = 1; n < static_cast<int>(coeff.size()); ++n)
                CHECK(composition_count(n, k, m) == coeff[static_cast<std::size_t>(n)]);
        }
}

TEST_CASE("divisor counts") {
    CHECK(divisor_count(0, 4) == 3);
    CHECK(divisor_count(2, 4) == 2);  // d=1 (1+2+1<=4), d=2 (2+1+1<=4)
    CHECK(divisor_count(3, 4) == 0);  // 1+3+1 and 3+1+1 both exceed 4
    CHECK(divisor_count(1, 3) == 1);
    CHECK_THROWS_AS(divisor_count(-1, 4), DomainError);
}

TEST_CASE("closed-form evaluation examples") {
    CHECK(eval_formula("thm3.1.i", 4, 4) == R(6) * S(6));
    CHECK(eval_formula("cor1.3.iv", 4, 2) == MultiPoly::constant(3));
    CHECK(eval_formula("thm7.1.4", 5, 1) == MultiPoly::constant(1));
    CHECK(eval_formula("thm5.1.ii", 3, 2) ==
          Q(1) * R(1) * S(1) * T(1) + R(2) * S(1));
    CHECK(eval_formula("sec13.rbe112", 3) == S(2, 3) + S(3));
}

TEST_CASE("regime and registry errors") {
    CHECK_THROWS_AS(eval_formula("thm3.1.i", 5, 3), OutOfRegimeError);
    CHECK_THROWS_AS(eval_formula("thm7.1.5", 6, 3), OutOfRegimeError);
    CHECK_THROWS_AS(eval_formula("nope", 4, 2), UnsupportedError);
    CHECK_THROWS_AS(eval_formula("thm3.1.i", 4), DomainError);        // k required
    CHECK_THROWS_AS(eval_formula("prop5.5.i", 4, 2), UnsupportedError); // identity, no value
    CHECK_THROWS_AS(eval_formula("cor7.2.1.121", 4, 2), UnsupportedError);
}

TEST_CASE("registry ids are unique and described") {
    std::set<std::string> ids;
    for (const auto& e : formula_registry()) {
        CHECK(ids.insert(e.id).second);
        CHECK_FALSE(e.anchor.empty());
        CHECK_FALSE(e.description.empty());
    }
    CHECK(ids.size() > 150);
    CHECK(ids.count("thm2.1.ii") == 1);
    CHECK(ids.count("thm12.1.6") == 1);
    CHECK(ids.count("coh.cor10.2.iii.rse") == 1);
}

TEST_CASE("predicate claims evaluate standalone") {
    CHECK(eval_formula("thm6.2.i", 5, 3) == MultiPoly::constant(3));
    CHECK(eval_formula("thm6.2.ii", 5, 3) == MultiPoly::constant(2));
    CHECK(eval_formula("thm11.2.i", 6) == MultiPoly::constant(7));
    CHECK(eval_formula("sec6.cterm-lb.m3.parts-le-2", 5, 3) == MultiPoly::constant(3));
    CHECK(eval_formula("sec6.cterm-lb.m3.gf-as-printed", 5, 3) == MultiPoly::constant(6));
}
