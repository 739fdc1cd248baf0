#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mero/invariants.hpp"

using namespace mero;

namespace {

bool contains(const std::vector<Rat>& v, const Rat& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_CASE("log-canonical thresholds") {
    auto r1 = resolve_pair(parse_germ("(y^3+x^5)/x"));
    CHECK(lct(r1, true) == make_rat(8, 15));
    CHECK(lct(r1, false) == Rat(1));

    CHECK(lct(resolve_pair(parse_germ("x")), true) == Rat(1));
    CHECK(lct(resolve_pair(parse_germ("y^2+x^4")), true) == make_rat(3, 4));
    CHECK(lct(resolve_pair(parse_germ("x^2+y^4")), true) == make_rat(3, 4));

    auto rq = resolve_pair(parse_germ("(y^2+x^4)/(x^2+y^4)"));
    CHECK(lct(rq, true) == make_rat(3, 4));
    CHECK(lct(rq, false) == make_rat(3, 4));

    CHECK_THROWS_AS(lct(resolve_pair(parse_germ("1/x")), true), std::domain_error);
}

TEST_CASE("lct is resolution independent") {
    // extra blow-ups from the denominator do not change lct of f
    auto alone = resolve_pair(parse_germ("y^3+x^5"));
    auto joint1 = resolve_pair(parse_germ("(y^3+x^5)/x"));
    auto joint2 = resolve_pair(parse_germ("(y^3+x^5)/y"));
    CHECK(lct(alone, true) == lct(joint1, true));
    CHECK(lct(alone, true) == lct(joint2, true));
}

TEST_CASE("candidate Bernstein-Sato roots") {
    auto r1 = resolve_pair(parse_germ("(y^3+x^5)/x"));
    auto set = candidate_bs_roots(r1, 8);
    // E4: base 8/12, step 1/12
    bool found_e4 = false;
    for (const auto& g : set.generators) {
        if (g.divisor_id == 4) {
            found_e4 = true;
            CHECK(g.base == make_rat(8, 12));
            CHECK(g.step == make_rat(1, 12));
        }
    }
    CHECK(found_e4);
    for (const Rat& v : {make_rat(-8, 12), make_rat(-9, 12), make_rat(-10, 12),
                         make_rat(-11, 12), Rat(-1)})
        CHECK(contains(set.enumerated, v));
    for (const auto& v : set.enumerated) CHECK(v < 0);

    // f = x, g = 1: classical -1, -2, ...
    auto rx = resolve_pair(parse_germ("x"));
    auto sx = candidate_bs_roots(rx, 3);
    CHECK(sx.enumerated == std::vector<Rat>{Rat(-4), Rat(-3), Rat(-2), Rat(-1)});

    // f = 1: empty set
    auto r0 = resolve_pair(parse_germ("1/(x^2+y^3)"));
    CHECK(candidate_bs_roots(r0, 8).enumerated.empty());

    // g = 1 reduces to the classical candidate lattice of f
    auto rf = candidate_bs_roots(resolve_pair(parse_germ("y^3+x^5")), 8);
    for (const Rat& v : {make_rat(-8, 15), make_rat(-9, 15), make_rat(-2, 3),
                         make_rat(-3, 5), make_rat(-5, 9), Rat(-1)})
        CHECK(contains(rf.enumerated, v));
}

TEST_CASE("candidate jumping numbers") {
    auto r1 = resolve_pair(parse_germ("(y^3+x^5)/x"));
    auto cands = candidate_jumping_numbers(r1, Rat(2));
    for (const Rat& v : {make_rat(8, 12), make_rat(9, 12), make_rat(10, 12),
                         make_rat(11, 12), Rat(1), make_rat(23, 12), Rat(2)}) {
        bool found = false;
        for (const auto& c : cands) found = found || c.value == v;
        CHECK(found);
    }
    for (const auto& c : cands) {
        CHECK(c.value > 0);
        CHECK(!c.divisors.empty());
    }
    // strict transform of f contributes the integer translates
    for (const auto& c : cands) {
        if (c.value == Rat(1))
            CHECK(std::find(c.divisors.begin(), c.divisors.end(), 5) != c.divisors.end());
    }
    CHECK(candidate_jumping_numbers(resolve_pair(parse_germ("1/x")), Rat(3)).empty());

    auto rx = candidate_jumping_numbers(resolve_pair(parse_germ("x")), Rat(3));
    REQUIRE(rx.size() == 3);
    CHECK(rx[0].value == 1);
    CHECK(rx[1].value == 2);
    CHECK(rx[2].value == 3);
}

TEST_CASE("candidate set is closed under integer translation") {
    auto res = resolve_pair(parse_germ("(y^3+x^5)/x"));
    Rat lmax = Rat(3);
    auto cands = candidate_jumping_numbers(res, lmax);
    auto is_candidate = [&](const Rat& v) {
        for (const auto& c : cands)
            if (c.value == v) return true;
        return false;
    };
    for (const auto& c : cands)
        if (c.value + 1 <= lmax) CHECK(is_candidate(c.value + 1));
}

TEST_CASE("convergence strips") {
    auto rq = resolve_pair(parse_germ("(y^2+x^4)/(x^2+y^4)"));
    auto s = convergence_strip(rq);
    REQUIRE(s.lo.has_value());
    REQUIRE(s.hi.has_value());
    CHECK(*s.lo == make_rat(-3, 4));
    CHECK(*s.hi == make_rat(3, 4));

    auto sf = convergence_strip(resolve_pair(parse_germ("y^3+x^5")));
    REQUIRE(sf.lo.has_value());
    CHECK(*sf.lo == make_rat(-8, 15));
    CHECK(!sf.hi.has_value());  // g = 1: right endpoint infinite

    auto s1 = convergence_strip(resolve_pair(parse_germ("(y^3+x^5)/x")));
    CHECK(*s1.lo == make_rat(-8, 15));
    CHECK(*s1.hi == Rat(1));
}

TEST_CASE("candidate zeta poles") {
    // x/y: alpha = 1, zeta and xi both generated by the smooth branches
    auto rxy = resolve_pair(parse_germ("x/y"));
    auto z = candidate_zeta_poles(rxy, 2, 2);
    CHECK(z.alpha == Rat(1));
    for (const Rat& v : {Rat(-1), Rat(-2), Rat(-3)}) CHECK(contains(z.left, v));
    for (const Rat& v : {Rat(1), Rat(2), Rat(3)}) CHECK(contains(z.right, v));

    // (y^3+x^5)/x with K = 1: left includes -8/12 - k for k in {0,1}
    auto r1 = resolve_pair(parse_germ("(y^3+x^5)/x"));
    auto z1 = candidate_zeta_poles(r1, 1, 8);
    CHECK(z1.alpha == Rat(1));
    CHECK(contains(z1.left, make_rat(-8, 12)));
    CHECK(contains(z1.left, make_rat(-8, 12) - Rat(1)));

    // f = 1: no zero-class divisors, so the left set is empty; the right set
    // comes from the (classical) side of g
    auto r0 = resolve_pair(parse_germ("1/(x^2+y^3)"));
    auto z0 = candidate_zeta_poles(r0, 1, 1);
    CHECK(z0.left.empty());
    CHECK(!z0.right.empty());

    // g constant: no alpha
    CHECK_THROWS_AS(candidate_zeta_poles(resolve_pair(parse_germ("x")), 1, 1),
                    std::domain_error);
}
