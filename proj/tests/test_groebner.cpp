#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "benthad/bent.hpp"
#include "benthad/groebner.hpp"
#include "fixtures.hpp"

using namespace benthad;

namespace {

Polynomial poly(std::vector<Term> ts, MonomialOrder ord = MonomialOrder::lex)
{
    return Polynomial::from_terms(std::move(ts), ord);
}

Rat eval(const Polynomial& p, const SignVector& x)
{
    Rat acc(0);
    for (const auto& t : p.terms()) {
        Rat v = t.c;
        for (int i = 0; i < Monomial::kMaxVars; ++i)
            if (t.m.exponent(i) & 1)
                v *= x[i];
        acc += v;
    }
    return acc;
}

} // namespace

TEST_CASE("monomial order and arithmetic")
{
    auto x0 = Monomial::var(0), x1 = Monomial::var(1);
    CHECK(mono_less(x1, x0, MonomialOrder::lex));
    CHECK(mono_less(Monomial::one(), x1, MonomialOrder::lex));
    CHECK(x0.times(x1).degree() == 2);
    CHECK(x0.divides(x0.times(x1)));
    CHECK_FALSE(x0.times(x0).divides(x0.times(x1)));
    CHECK(Monomial::lcm(x0.times(x0), x0.times(x1)) ==
          x0.times(x0).times(x1));
    CHECK(x0.times(x1).divided_by(x1) == x0);

    // lex: x0^2 > x0*x1 > x0 > x1^3; degrevlex puts total degree first
    CHECK(mono_less(x0, x0.times(x1), MonomialOrder::lex));
    CHECK(mono_less(x1.times(x1).times(x1), x0, MonomialOrder::lex));
    CHECK(mono_less(x0, x1.times(x1).times(x1), MonomialOrder::degrevlex));
    // same degree: x0*x1 > x1^2 in degrevlex
    CHECK(mono_less(x1.times(x1), x0.times(x1), MonomialOrder::degrevlex));
}

TEST_CASE("build_system matches the published order-4 program")
{
    auto s4 = HadamardMatrix::sylvester(2);
    auto ideal = build_system(s4);
    REQUIRE(ideal.generators.size() == 8);
    // row 0 of S_4 is all-one, so the first generator is -x0+x1+x2+x3
    CHECK(ideal.generators[0].str() == "-x0 + x1 + x2 + x3");
    CHECK(ideal.generators[1].str() == "x0 - 3*x1 + x2 - x3");
    CHECK(ideal.generators[4].str() == "x0^2 - 1");
    CHECK(ideal.generators[7].str() == "x3^2 - 1");

    CHECK(build_system(HadamardMatrix::sylvester(4)).generators.size() == 32);
    CHECK_THROWS_AS(build_system(HadamardMatrix::sylvester(3)),
                    NotSquareOrderError);
}

TEST_CASE("buchberger on tiny ideals")
{
    // <x0 - 1>
    PolynomialIdeal i1{{poly({{Monomial::var(0), 1}, {Monomial::one(), -1}})},
                       MonomialOrder::lex,
                       1};
    auto b1 = buchberger(i1);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].str() == "x0 - 1");

    // <x0^2 - 1, x0 - 1> reduces to <x0 - 1>
    PolynomialIdeal i2{{poly({{Monomial::var(0, 2), 1}, {Monomial::one(), -1}}),
                        poly({{Monomial::var(0), 1}, {Monomial::one(), -1}})},
                       MonomialOrder::lex,
                       1};
    auto b2 = buchberger(i2);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].str() == "x0 - 1");

    // inconsistent: <x0, x0 - 1> = <1>
    PolynomialIdeal i3{{poly({{Monomial::var(0), 1}}),
                        poly({{Monomial::var(0), 1}, {Monomial::one(), -1}})},
                       MonomialOrder::lex,
                       1};
    auto b3 = buchberger(i3);
    REQUIRE(b3.size() == 1);
    CHECK(b3[0].str() == "1");
    CHECK(solve_pm1(b3, 1).empty());

    CHECK_THROWS_AS(
        buchberger(build_system(HadamardMatrix::paley(17, PaleyKind::II))),
        SizeLimitError);
}

TEST_CASE("the output is a Groebner basis: every S-polynomial reduces to zero")
{
    auto bush4 = fixtures::bush_from(HadamardMatrix::sylvester(1));
    for (const auto& h : {HadamardMatrix::sylvester(2), bush4,
                          HadamardMatrix::paley(3, PaleyKind::I)}) {
        auto ideal = build_system(h);
        auto basis = buchberger(ideal);
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) {
                auto l = Monomial::lcm(basis[i].leading().m, basis[j].leading().m);
                auto s = add(term_times(basis[i], l.divided_by(basis[i].leading().m),
                                        Rat(1) / basis[i].leading().c, ideal.order),
                             term_times(basis[j], l.divided_by(basis[j].leading().m),
                                        Rat(-1) / basis[j].leading().c, ideal.order),
                             ideal.order);
                CHECK(reduce(s, basis, ideal.order).is_zero());
            }
        // and the original generators all lie in the ideal of the basis
        for (const auto& g : ideal.generators)
            CHECK(reduce(g, basis, ideal.order).is_zero());
    }
}

TEST_CASE("the reduced basis is canonical")
{
    auto s4 = HadamardMatrix::sylvester(2);
    auto ideal = build_system(s4);
    auto reference = buchberger(ideal);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        auto shuffled = ideal;
        std::shuffle(shuffled.generators.begin(), shuffled.generators.end(), rng);
        auto again = buchberger(shuffled);
        REQUIRE(again.size() == reference.size());
        for (size_t i = 0; i < again.size(); ++i)
            CHECK(again[i] == reference[i]);
    }
}

TEST_CASE("solver agrees with exhaustion")
{
    auto bush4 = fixtures::bush_from(HadamardMatrix::sylvester(1));
    for (const auto& h :
         {HadamardMatrix::sylvester(2), bush4, bush4.negated(),
          HadamardMatrix::paley(3, PaleyKind::I)}) {
        auto ideal = build_system(h);
        auto basis = buchberger(ideal);
        auto got = solve_pm1(basis, ideal.nvars);
        auto want = search_exhaustive(h, SearchMode::self_dual).sequences;
        CHECK(got == want);
        // every solution satisfies every original generator exactly
        for (const auto& x : got)
            for (const auto& g : ideal.generators)
                CHECK(eval(g, x) == 0);
    }
}

TEST_CASE("solver handles the full 16-variable systems")
{
    for (const auto& h : {HadamardMatrix::sylvester(4),
                          fixtures::bush_from(HadamardMatrix::sylvester(2)),
                          fixtures::t6_representative()}) {
        auto ideal = build_system(h);
        auto basis = buchberger(ideal);
        auto got = solve_pm1(basis, ideal.nvars);
        CHECK(got == search_exhaustive(h, SearchMode::self_dual).sequences);
    }
}

TEST_CASE("degrevlex basis filters to the same variety")
{
    auto s4 = HadamardMatrix::sylvester(2);
    auto ideal = build_system(s4, MonomialOrder::degrevlex);
    auto basis = buchberger(ideal);
    auto got = solve_pm1(basis, ideal.nvars, MonomialOrder::degrevlex);
    CHECK(got == search_exhaustive(s4, SearchMode::self_dual).sequences);
}

TEST_CASE("empty eigenspace matrices solve to the empty list")
{
    auto p4 = HadamardMatrix::paley(3, PaleyKind::I);
    auto ideal = build_system(p4);
    auto basis = buchberger(ideal);
    CHECK(solve_pm1(basis, ideal.nvars).empty());
}
