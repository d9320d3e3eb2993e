#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "rgfstat/patterns.hpp"
#include "test_helpers.hpp"

using namespace rgfstat;

namespace {

std::vector<std::string> as_strings(const std::vector<RgfWord>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(to_string(w));
    return out;
}

const std::vector<PatternSet>& tabulated_sets() {
    static const std::vector<PatternSet> sets = {
        make_pattern_set({"1/2/3"}),
        make_pattern_set({"1/23"}),
        make_pattern_set({"13/2"}),
        make_pattern_set({"12/3"}),
        make_pattern_set({"123"}),
        make_pattern_set({"1/2/3", "1/23"}),
        make_pattern_set({"1/2/3", "13/2"}),
        make_pattern_set({"1/2/3", "12/3"}),
        make_pattern_set({"1/23", "13/2"}),
        make_pattern_set({"1/23", "12/3"}),
        make_pattern_set({"1/23", "123"}),
        make_pattern_set({"13/2", "12/3"}),
        make_pattern_set({"13/2", "123"}),
        make_pattern_set({"12/3", "123"}),
        make_pattern_set({"1/2/3", "1/23", "13/2"}),
        make_pattern_set({"1/2/3", "1/23", "12/3"}),
        make_pattern_set({"1/2/3", "12/3", "13/2"}),
        make_pattern_set({"1/23", "12/3", "13/2"}),
        make_pattern_set({"1/23", "13/2", "123"}),
        make_pattern_set({"1/23", "12/3", "123"}),
        make_pattern_set({"13/2", "12/3", "123"}),
        make_pattern_set({"1/2/3", "1/23", "12/3", "13/2"}),
        make_pattern_set({"123", "13/2", "1/23", "12/3"}),
    };
    return sets;
}

} // namespace

TEST_CASE("containment of the running example") {
    SetPartition p = parse_partition("16/23478/5");
    CHECK(contains_partition_pattern(p, PartitionPattern(parse_partition("124/3"))));
    CHECK(contains_partition_pattern(parse_partition("13/24"),
                                     PartitionPattern(parse_partition("13/2"))));
    SetPartition singletons(5, {{1}, {2}, {3}, {4}, {5}});
    CHECK_FALSE(contains_partition_pattern(singletons, PartitionPattern(parse_partition("12"))));
}

TEST_CASE("word-pattern containment") {
    RgfWord w = parse_word("12332412");
    CHECK(contains_word_pattern(w, WordPattern({1, 1, 2})));
    CHECK(contains_word_pattern(w, WordPattern(w.letters()))); // the whole word
    CHECK_FALSE(contains_word_pattern(parse_word("123"), WordPattern({1, 1, 2})));
    // value-rank vs first-occurrence semantics: the subword 221 of 1221
    // rank-standardizes to 221 but is the restriction word 112 = w(12/3)
    CHECK(contains_word_pattern(parse_word("1221"), WordPattern({1, 2, 1})));
    CHECK(word_contains_partition_pattern(parse_word("1221").letters(),
                                          PartitionPattern(parse_partition("12/3"))));
}

TEST_CASE("patterns larger than the word are avoided") {
    RgfWord w = parse_word("121");
    CHECK_FALSE(contains_word_pattern(w, WordPattern({1, 2, 1, 2})));
    CHECK_FALSE(contains_partition_pattern(partition_from_rgf(w),
                                           PartitionPattern(parse_partition("1234"))));
}

TEST_CASE("generic containment agrees with the partition-level definition") {
    auto patterns = enumerate_rgfs(3);
    for (int n = 1; n <= 6; ++n) {
        for_each_rgf(n, std::nullopt, [&](const Letters& letters) {
            SetPartition p = partition_from_rgf(RgfWord{letters});
            for (const auto& pat_word : patterns) {
                PartitionPattern pat(pat_word.letters());
                bool fast = word_contains_partition_pattern(letters, pat);
                bool slow = testref::naive_contains(p, partition_from_rgf(pat_word));
                CHECK(fast == slow);
            }
        });
    }
}

TEST_CASE("avoidance class examples") {
    CHECK(as_strings(avoidance_class(4, 2, make_pattern_set({"13/2"}))) ==
          std::vector<std::string>{"1112", "1122", "1222"});
    CHECK(avoidance_class(3, 3, make_pattern_set({"1/2/3"})).empty());
    CHECK(as_strings(avoidance_class(3, std::nullopt, make_pattern_set({"123"}))) ==
          std::vector<std::string>{"112", "121", "122", "123"});
    CHECK_THROWS_AS(avoidance_class(3, std::nullopt, PatternSet{}), DomainError);
}

TEST_CASE("fast predicates characterize 13/2 and 123 avoidance") {
    PartitionPattern p131(parse_partition("13/2"));
    PartitionPattern p123(parse_partition("123"));
    for (int n = 1; n <= 7; ++n) {
        for_each_rgf(n, std::nullopt, [&](const Letters& w) {
            CHECK(is_layered(w) == !word_contains_partition_pattern(w, p131));
            CHECK(max_multiplicity_at_most(w, 2) == !word_contains_partition_pattern(w, p123));
        });
    }
}

TEST_CASE("characterized class examples") {
    CHECK(as_strings(characterized_class(5, 2, make_pattern_set({"13/2"}))) ==
          std::vector<std::string>{"11112", "11122", "11222", "12222"});
    CHECK(as_strings(characterized_class(6, 3, make_pattern_set({"1/23", "13/2"}))) ==
          std::vector<std::string>{"111123"});
    CHECK(as_strings(characterized_class(5, 4, make_pattern_set({"12/3", "123"}))) ==
          std::vector<std::string>{"12341", "12342", "12343", "12344"});
    CHECK(characterized_class(3, 3, make_pattern_set({"1/2/3"})).empty());
    CHECK_THROWS_AS(characterized_class(4, 2, make_pattern_set({"1/2/3", "123"})),
                    UnsupportedError);
    CHECK_THROWS_AS(characterized_class(4, 2, make_pattern_set({}, {"112"})), UnsupportedError);
    CHECK_THROWS_AS(characterized_class(4, 5, make_pattern_set({"13/2"})), DomainError);
}

TEST_CASE("every tabulated characterization equals brute force") {
    for (const auto& ps : tabulated_sets()) {
        for (int n = 3; n <= 6; ++n)
            for (int k = 1; k <= n; ++k) {
                auto constructed = as_strings(characterized_class(n, k, ps));
                auto brute = as_strings(avoidance_class(n, k, ps));
                INFO("ps={" << ps.key() << "} n=" << n << " k=" << k);
                CHECK(constructed == brute);
            }
    }
}

TEST_CASE("avoidance is antitone in the pattern set") {
    testref::Rng rng(5);
    auto all3 = enumerate_rgfs(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<PartitionPattern> small, large;
        for (const auto& w : all3) {
            bool in_small = rng.below(3) == 0;
            bool in_large = in_small || rng.below(2) == 0;
            if (in_small) small.emplace_back(w.letters());
            if (in_large) large.emplace_back(w.letters());
        }
        if (small.empty()) continue;
        PatternSet ps_small(small), ps_large(large);
        auto a = as_strings(avoidance_class(5, std::nullopt, ps_large));
        auto b = as_strings(avoidance_class(5, std::nullopt, ps_small));
        CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
}

TEST_CASE("closed-form cardinalities") {
    CHECK(cardinality_closed_form(5, 2, make_pattern_set({"1/2/3"})) == 15);
    CHECK(cardinality_closed_form(4, 4, make_pattern_set({"123"})) == 1);
    CHECK(cardinality_closed_form(4, 2, make_pattern_set({"123"})) == 3);
    CHECK(cardinality_closed_form(6, 3, make_pattern_set({"13/2"})) == 10);
    CHECK(cardinality_closed_form(6, 4, make_pattern_set({"1/23"})) == 4);
    CHECK(cardinality_closed_form(6, 6, make_pattern_set({"12/3"})) == 1);
    CHECK(cardinality_closed_form(3, 7, make_pattern_set({"13/2"})) == 0);
    CHECK_THROWS_AS(cardinality_closed_form(4, 2, make_pattern_set({"1/23", "13/2"})),
                    UnsupportedError);
}

TEST_CASE("cardinality closed forms match brute force") {
    for (const char* pat : {"1/2/3", "1/23", "13/2", "12/3", "123"}) {
        PatternSet ps = make_pattern_set({pat});
        for (int n = 1; n <= 7; ++n)
            for (int k = 1; k <= n; ++k) {
                if (std::string(pat) == "1/2/3" && k > 2) {
                    CHECK(avoidance_class(n, k, ps).empty());
                    continue;
                }
                INFO("pattern " << pat << " n=" << n << " k=" << k);
                CHECK(cardinality_closed_form(n, k, ps) ==
                      static_cast<std::int64_t>(avoidance_class(n, k, ps).size()));
            }
    }
}

TEST_CASE("pattern-set grammar") {
    PatternSet ps = parse_pattern_set("1/23;13/2");
    CHECK(ps.partition_patterns.size() == 2);
    CHECK(ps.word_patterns.empty());
    CHECK(ps.key() == "121+122");

    PatternSet wps = parse_pattern_set("w:112");
    CHECK(wps.word_patterns.size() == 1);
    CHECK(wps.key() == "w112");

    CHECK(parse_pattern_set("123;w:112").key() == "111+w112");
    CHECK_THROWS_AS(parse_pattern_set("1//2"), ParseError);
    CHECK_THROWS_AS(parse_pattern_set(""), ParseError);
    CHECK_THROWS_AS(parse_pattern_set("1/23;;13/2"), ParseError);
    CHECK_THROWS_AS(parse_pattern_set("w:331"), ParseError); // not standardized
}

TEST_CASE("pattern types validate their invariants") {
    CHECK_THROWS_AS(WordPattern({3, 3, 1}), DomainError);
    CHECK_THROWS_AS(PartitionPattern(Letters{2, 1}), DomainError);
    CHECK(WordPattern({2, 1, 1}).size() == 3); // 211 is rank-standardized
}
