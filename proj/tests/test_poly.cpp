#include <catch2/catch_amalgamated.hpp>

#include "rgfstat/poly.hpp"
#include "rgfstat/statistics.hpp"
#include "test_helpers.hpp"

using namespace rgfstat;

namespace {

MultiPoly random_poly(testref::Rng& rng, int max_terms = 5, int max_exp = 4, int max_coeff = 9) {
    MultiPoly p;
    int terms = 1 + rng.below(max_terms);
    for (int i = 0; i < terms; ++i) {
        Monomial m = make_monomial(rng.below(max_exp), rng.below(max_exp), rng.below(max_exp),
                                   rng.below(max_exp));
        p.add_term(m, rng.below(2 * max_coeff + 1) - max_coeff);
    }
    return p;
}

} // namespace

TEST_CASE("ring basics") {
    MultiPoly qr = MultiPoly::monomial(make_monomial(1, 1, 0, 0));
    CHECK((qr + qr).to_text() == "2*q*r");
    MultiPoly r = R(1), s = S(1);
    CHECK(((r + s) * (r - s)).to_text() == "r^2 - s^2");
    CHECK((r - r).is_zero());
    CHECK((r - r).to_text() == "0");
}

TEST_CASE("the two layered words of R_{3,2}(13/2) sum to rs^2 + r^2s") {
    MultiPoly sum;
    for (const char* text : {"112", "122"}) {
        StatVector v = stat_vector(parse_word(text), false);
        sum.add_term(make_monomial(v.lb, v.ls, v.rb, v.rs), 1);
    }
    CHECK(sum == R(1) * S(2) + R(2) * S(1));
    CHECK(sum.to_text() == "r*s^2 + r^2*s");
}

TEST_CASE("specialize") {
    MultiPoly p = R(1) * S(2) + R(2) * S(1);
    CHECK(p.specialize({Var::r}) == R(1) + R(2));
    CHECK(p.specialize({Var::q, Var::r, Var::s, Var::t}) == p);
    CHECK(p.specialize({}) == MultiPoly::constant(2));
}

TEST_CASE("swap_vars") {
    MultiPoly p = Q(2) * T(1);
    auto qt = MultiPoly::transposition(Var::q, Var::t);
    CHECK(p.swap_vars(qt) == T(2) * Q(1));
    MultiPoly sym = Q(1) * T(1) + Q(2) * T(2);
    CHECK(sym.swap_vars(qt) == sym);
    CHECK_THROWS_AS(p.swap_vars({Var::q, Var::q, Var::s, Var::t}), DomainError);
}

TEST_CASE("degree, leading coefficient, constant term") {
    MultiPoly p = Q(3) + Q(1);
    CHECK(p.degree_in(Var::q) == 3);
    MultiPoly q3s = Q(3, 2) * S(1) + Q(1);
    CHECK(q3s.degree_in(Var::q) == 3);
    CHECK(q3s.leading_coeff_in(Var::q) == S(1, 2));
    CHECK(q3s.constant_term_in(Var::q).is_zero());
    CHECK(q3s.constant_term_in(Var::r) == q3s); // r-exponent 0 everywhere
    CHECK(q3s.coeff_in(Var::q, 1) == MultiPoly::constant(1));
    CHECK_THROWS_AS(MultiPoly::zero().degree_in(Var::q), ZeroPolynomialError);
    CHECK_THROWS_AS(MultiPoly::zero().leading_coeff_in(Var::q), ZeroPolynomialError);
    CHECK(MultiPoly::zero().constant_term_in(Var::q).is_zero());
}

TEST_CASE("text rendering is canonical graded-lex") {
    CHECK((R(1) * S(2) + R(2) * S(1)).to_text() == "r*s^2 + r^2*s");
    CHECK(MultiPoly::zero().to_text() == "0");
    CHECK(MultiPoly::constant(-3).to_text() == "-3");
    CHECK((Q(1) - R(1, 2)).to_text() == "q - 2*r");
    CHECK((MultiPoly::constant(1) + Q(3)).to_text() == "1 + q^3");
    CHECK((Q(2) * R(1) * S(3) * T(1)).to_latex() == "q^{2}rs^{3}t");
}

TEST_CASE("json round trip") {
    testref::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        MultiPoly p = random_poly(rng);
        CHECK(MultiPoly::from_json(p.to_json()) == p);
    }
    MultiPoly p = R(1) * S(2) + R(2) * S(1);
    auto j = p.to_json();
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["r"] == 1);
    CHECK(j["terms"][0]["s"] == 2);
    CHECK(j["terms"][0]["c"] == 1);
}

TEST_CASE("ring axioms on random polynomials") {
    testref::Rng rng(2024);
    for (int i = 0; i < 60; ++i) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("specialize commutes with addition and multiplication") {
    testref::Rng rng(99);
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = random_poly(rng), b = random_poly(rng);
        for (Var v : {Var::q, Var::r, Var::s, Var::t}) {
            CHECK((a + b).specialize({v}) == a.specialize({v}) + b.specialize({v}));
            CHECK((a * b).specialize({v}) == a.specialize({v}) * b.specialize({v}));
        }
    }
}

TEST_CASE("evaluation at all ones sums the coefficients") {
    MultiPoly p = R(1) * S(2) + R(2) * S(1) + MultiPoly::constant(3);
    CHECK(p.eval_all_ones() == 5);
    CHECK(MultiPoly::zero().eval_all_ones() == 0);
    CHECK(MultiPoly::constant(7).as_constant() == 7);
    CHECK_THROWS_AS(p.as_constant(), DomainError);
}

TEST_CASE("coefficient overflow is a hard error") {
    MultiPoly big = MultiPoly::constant(std::int64_t{1} << 62);
    CHECK_THROWS_AS(big + big + big, OverflowError);
    CHECK_THROWS_AS(big * big, OverflowError);
}

TEST_CASE("pow") {
    MultiPoly rs = R(1) * S(1);
    CHECK(rs.pow(3) == R(3) * S(3));
    CHECK(rs.pow(0) == MultiPoly::constant(1));
}
