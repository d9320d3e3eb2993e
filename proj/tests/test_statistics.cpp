#include <catch2/catch_amalgamated.hpp>

#include "rgfstat/enumerate.hpp"
#include "rgfstat/statistics.hpp"
#include "test_helpers.hpp"

using namespace rgfstat;

static const RgfWord kExample = parse_word("12332412");

TEST_CASE("per-letter values of the worked example") {
    CHECK(stat_letter(kExample, 7, StatName::lb) == 3);
    CHECK(stat_letter(kExample, 7, StatName::lbe) == 4);

    std::vector<int> lb_row{0, 0, 0, 0, 1, 0, 3, 2};
    std::vector<int> lbe_row{0, 0, 0, 1, 2, 0, 4, 3};
    CHECK(letter_stats(kExample, false).lb == lb_row);
    CHECK(letter_stats(kExample, true).lb == lbe_row);
}

TEST_CASE("word totals of the worked example") {
    CHECK(stat_word(kExample, StatName::lb) == 6);
    CHECK(stat_word(kExample, StatName::lbe) == 10);
    CHECK(stat_word(kExample, StatName::ls) == 10); // sum of letters minus n
    CHECK(stat_vector(kExample, false) == StatVector{6, 10, 9, 8});
    CHECK(stat_vector(kExample, true) == StatVector{10, 14, 13, 12});
}

TEST_CASE("constant words score zero on the standard statistics") {
    RgfWord ones = parse_word("11111");
    for (StatName s : {StatName::lb, StatName::ls, StatName::rb, StatName::rs}) {
        CHECK(stat_word(ones, s) == 0);
        for (int j = 1; j <= 5; ++j) CHECK(stat_letter(ones, j, s) == 0);
    }
}

TEST_CASE("position range is enforced") {
    CHECK_THROWS_AS(stat_letter(kExample, 0, StatName::lb), DomainError);
    CHECK_THROWS_AS(stat_letter(kExample, 9, StatName::lb), DomainError);
}

TEST_CASE("stat names parse and print") {
    CHECK(parse_stat_name("lbe") == StatName::lbe);
    CHECK(std::string(to_cstring(StatName::rse)) == "rse");
    CHECK(is_equal_variant(StatName::rbe));
    CHECK_FALSE(is_equal_variant(StatName::rb));
    CHECK_THROWS_AS(parse_stat_name("xyz"), ParseError);
}

TEST_CASE("every statistic matches the set-scan definition") {
    for (int n = 1; n <= 7; ++n) {
        for_each_rgf(n, std::nullopt, [&](const Letters& letters) {
            RgfWord w{letters};
            LetterStats standard = letter_stats(w, false);
            LetterStats equal = letter_stats(w, true);
            for (int j = 1; j <= n; ++j) {
                std::size_t i = static_cast<std::size_t>(j - 1);
                CHECK(standard.lb[i] == testref::naive_stat(letters, j, StatName::lb));
                CHECK(standard.ls[i] == testref::naive_stat(letters, j, StatName::ls));
                CHECK(standard.rb[i] == testref::naive_stat(letters, j, StatName::rb));
                CHECK(standard.rs[i] == testref::naive_stat(letters, j, StatName::rs));
                CHECK(equal.lb[i] == testref::naive_stat(letters, j, StatName::lbe));
                CHECK(equal.ls[i] == testref::naive_stat(letters, j, StatName::lse));
                CHECK(equal.rb[i] == testref::naive_stat(letters, j, StatName::rbe));
                CHECK(equal.rs[i] == testref::naive_stat(letters, j, StatName::rse));
            }
        });
    }
}

TEST_CASE("growth forces ls(a_j) = a_j - 1 on RGFs") {
    for (int n = 1; n <= 8; ++n) {
        for_each_rgf(n, std::nullopt, [&](const Letters& letters) {
            RgfWord w{letters};
            LetterStats t = letter_stats(w, false);
            int sum = 0;
            for (int j = 1; j <= n; ++j) {
                CHECK(t.ls[static_cast<std::size_t>(j - 1)] == w.at(j) - 1);
                sum += w.at(j);
            }
            CHECK(stat_word(w, StatName::ls) == sum - n);
        });
    }
}

TEST_CASE("or-equal variants shift each total by n - k") {
    for (int n = 1; n <= 8; ++n) {
        for_each_rgf(n, std::nullopt, [&](const Letters& letters) {
            RgfWord w{letters};
            int shift = n - w.max_letter();
            StatVector standard = stat_vector(w, false);
            StatVector equal = stat_vector(w, true);
            CHECK(equal.lb == standard.lb + shift);
            CHECK(equal.ls == standard.ls + shift);
            CHECK(equal.rb == standard.rb + shift);
            CHECK(equal.rs == standard.rs + shift);
        });
    }
}

TEST_CASE("totals stay within the value-count bounds") {
    for (int n = 1; n <= 7; ++n) {
        for_each_rgf(n, std::nullopt, [&](const Letters& letters) {
            RgfWord w{letters};
            int k = w.max_letter();
            StatVector standard = stat_vector(w, false);
            StatVector equal = stat_vector(w, true);
            for (int v : {standard.lb, standard.ls, standard.rb, standard.rs}) {
                CHECK(v >= 0);
                CHECK(v <= n * (k - 1));
            }
            for (int v : {equal.lb, equal.ls, equal.rb, equal.rs})
                CHECK(v <= n * (k - 1) + (n - k));
        });
    }
}

TEST_CASE("layered words have lb = rs = 0") {
    for (int n = 1; n <= 8; ++n) {
        for_each_rgf(n, std::nullopt, [&](const Letters& letters) {
            bool layered = true;
            for (std::size_t i = 1; i < letters.size(); ++i)
                if (letters[i] < letters[i - 1]) layered = false;
            if (!layered) return;
            RgfWord w{letters};
            CHECK(stat_word(w, StatName::lb) == 0);
            CHECK(stat_word(w, StatName::rs) == 0);
        });
    }
}
