#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mero/resolution.hpp"

using namespace mero;

namespace {

const std::vector<std::string> xy = {"x", "y"};

std::vector<long> column(const ResolutionData& r, long DivisorData::*field) {
    std::vector<long> v;
    for (const auto& d : r.divisors) v.push_back(d.*field);
    return v;
}

std::set<std::pair<int, int>> edge_set(const ResolutionData& r) {
    return {r.edges.begin(), r.edges.end()};
}

}  // namespace

TEST_CASE("golden resolution of (y^3+x^5)/x") {
    auto res = resolve_pair(parse_germ("(y^3+x^5)/x"));
    REQUIRE(res.divisors.size() == 8);
    CHECK(column(res, &DivisorData::Nf) ==
          std::vector<long>{3, 5, 9, 15, 1, 0, 3, 3});
    CHECK(column(res, &DivisorData::Ng) ==
          std::vector<long>{1, 1, 2, 3, 0, 1, 2, 3});
    CHECK(column(res, &DivisorData::k) ==
          std::vector<long>{1, 2, 4, 7, 0, 0, 2, 3});
    CHECK(res.divisor(5).kind == DivisorKind::StrictF);
    CHECK(res.divisor(6).kind == DivisorKind::StrictG);
    // dual graph: chain E8-E7-E1-E3-E4-E2 with E6 on E8 and E5 on E4
    CHECK(edge_set(res) == std::set<std::pair<int, int>>{
                               {1, 3}, {1, 7}, {2, 4}, {3, 4},
                               {4, 5}, {6, 8}, {7, 8}});
}

TEST_CASE("golden resolution of (y^3+x^5)/y") {
    auto res = resolve_pair(parse_germ("(y^3+x^5)/y"));
    REQUIRE(res.divisors.size() == 9);
    CHECK(column(res, &DivisorData::Nf) ==
          std::vector<long>{3, 5, 9, 15, 1, 0, 5, 5, 5});
    CHECK(column(res, &DivisorData::Ng) ==
          std::vector<long>{1, 2, 3, 5, 0, 1, 3, 4, 5});
    CHECK(column(res, &DivisorData::k) ==
          std::vector<long>{1, 2, 4, 7, 0, 0, 3, 4, 5});
    CHECK(edge_set(res) == std::set<std::pair<int, int>>{
                               {1, 3}, {2, 4}, {2, 7}, {3, 4},
                               {4, 5}, {6, 9}, {7, 8}, {8, 9}});
}

TEST_CASE("smooth germ resolves without blow-ups") {
    auto res = resolve_pair(parse_germ("x"));
    REQUIRE(res.divisors.size() == 1);
    CHECK(res.divisors[0].kind == DivisorKind::StrictF);
    CHECK(res.divisors[0].Nf == 1);
    CHECK(res.divisors[0].Ng == 0);
    CHECK(res.divisors[0].k == 0);
    CHECK(res.blowups == 0);
    CHECK(res.edges.empty());
}

TEST_CASE("x/y: a single blow-up separates by a dicritical divisor") {
    auto snc = resolve_snc(parse_germ("x/y"));
    CHECK(snc.divisors.size() == 2);  // two strict transforms crossing
    CHECK(snc.blowups == 0);
    auto res = separate_dicritical(snc);
    REQUIRE(res.divisors.size() == 3);
    const auto& e = res.divisor(3);
    CHECK(e.kind == DivisorKind::Exceptional);
    CHECK(e.Nf == 1);
    CHECK(e.Ng == 1);
    CHECK(e.k == 1);
    CHECK(e.cls() == DivisorClass::Dicritical);
    CHECK(edge_set(res) == std::set<std::pair<int, int>>{{1, 3}, {2, 3}});
}

TEST_CASE("separate_dicritical adds E7, E8 to the minimal resolution") {
    auto snc = resolve_snc(parse_germ("(y^3+x^5)/x"));
    CHECK(snc.divisors.size() == 6);
    auto res = separate_dicritical(snc);
    CHECK(res.divisors.size() == 8);
    // idempotent on separated data
    auto again = separate_dicritical(res);
    CHECK(again.divisors.size() == 8);

    // g = 1: nothing to separate
    auto plain = resolve_snc(parse_germ("y^3+x^5"));
    CHECK(separate_dicritical(plain).divisors.size() == plain.divisors.size());
}

TEST_CASE("no mixed-sign adjacency after separation") {
    for (const char* text : {"(y^3+x^5)/x", "(y^3+x^5)/y", "x/y",
                             "(y^2+x^4)/(x^2+y^4)", "(y^2-x^3)/(x*y)"}) {
        auto res = resolve_pair(parse_germ(text));
        for (const auto& [a, b] : res.edges) {
            long na = res.divisor(a).Nfg(), nb = res.divisor(b).Nfg();
            CHECK(!(na > 0 && nb < 0));
            CHECK(!(na < 0 && nb > 0));
        }
    }
}

TEST_CASE("ord_along matches the table and the chart pullback") {
    auto germ = parse_germ("(y^3+x^5)/x");
    auto res = resolve_pair(germ);
    CHECK(ord_along(res, 4, MPoly::variable(xy, 0)) == 3);
    CHECK(ord_along(res, 4, MPoly::variable(xy, 1)) == 5);
    CHECK(ord_along(res, 4, germ.f) == 15);
    CHECK(ord_along(res, 3, MPoly::constant(xy, 1)) == 0);
    CHECK_THROWS_AS(ord_along(res, 1, MPoly(xy)), std::domain_error);

    for (const char* text : {"(y^3+x^5)/x", "(y^3+x^5)/y", "(y^2+x^4)/(x^2+y^4)",
                             "(y^2-x^3)^2 - x^7", "((y^2-x^3)*(y-x)*x)/(y^3)"}) {
        auto g = parse_germ(text);
        auto r = resolve_pair(g);
        for (const auto& d : r.divisors) {
            CHECK(ord_along(r, d.id, g.f) == d.Nf);
            CHECK(ord_along(r, d.id, g.g) == d.Ng);
        }
    }
}

TEST_CASE("ord_along is additive in the function") {
    auto res = resolve_pair(parse_germ("(y^3+x^5)/x"));
    MPoly h1 = parse_poly("y^2 + x^3", xy);
    MPoly h2 = parse_poly("x + y", xy);
    for (const auto& d : res.divisors)
        CHECK(ord_along(res, d.id, h1 * h2) ==
              ord_along(res, d.id, h1) + ord_along(res, d.id, h2));
}

TEST_CASE("Jacobian valuation equals k on preferred charts") {
    for (const char* text : {"(y^3+x^5)/x", "(y^3+x^5)/y", "(y^2+x^4)/(x^2+y^4)",
                             "(y^2-x^3)^2 - x^7"}) {
        auto res = resolve_pair(parse_germ(text));
        for (const auto& d : res.divisors) {
            if (d.kind != DivisorKind::Exceptional) continue;
            CHECK(valuation(chart_jacobian(d.chart), 0) == d.k);
        }
    }
}

TEST_CASE("classify partitions by sign of N_f/g") {
    auto res = resolve_pair(parse_germ("(y^3+x^5)/x"));
    auto c = classify(res);
    CHECK(c.zero == std::vector<int>{1, 2, 3, 4, 5, 7});
    CHECK(c.pole == std::vector<int>{6});
    CHECK(c.dicritical == std::vector<int>{8});

    auto cg = classify(resolve_pair(parse_germ("y^3+x^5")));
    CHECK(cg.pole.empty());
    CHECK(cg.dicritical.empty());
}

TEST_CASE("errors: irrational centers and iteration cap") {
    // (y^2 - 2x^2)^2 + x^7 forces a blow-up at an irrational point of E2
    CHECK_THROWS_AS(resolve_pair(parse_germ("(y^2-2*x^2)^2 + x^7")),
                    ResolutionError);
    try {
        resolve_pair(parse_germ("(y^2-2*x^2)^2 + x^7"));
    } catch (const ResolutionError& e) {
        CHECK(e.kind() == ResolutionError::Kind::UnsupportedExtension);
    }
    try {
        resolve_pair(parse_germ("(y^3+x^5)/x"), 2);
        CHECK(false);
    } catch (const ResolutionError& e) {
        CHECK(e.kind() == ResolutionError::Kind::IterationCap);
    }
    CHECK_THROWS_AS(resolve_pair(parse_germ("5/3")), ResolutionError);
}

TEST_CASE("conjugate branch points are kept as one orbit record") {
    auto res = resolve_pair(parse_germ("(y^2+x^4)/(x^2+y^4)"));
    REQUIRE(res.divisors.size() == 5);
    CHECK(res.divisor(1).cls() == DivisorClass::Dicritical);
    CHECK(res.divisor(4).orbit == 2);
    CHECK(res.divisor(5).orbit == 2);
    CHECK(res.blowups == 3);
}

TEST_CASE("non-reduced germ: strict multiplicities follow the factors") {
    auto res = resolve_pair(parse_germ("x^2*y^3"));
    REQUIRE(res.divisors.size() == 2);
    std::multiset<long> nf = {res.divisors[0].Nf, res.divisors[1].Nf};
    CHECK(nf == std::multiset<long>{2, 3});
    CHECK(res.edges.size() == 1);
}

TEST_CASE("JSON round trip is the identity on the data model") {
    auto res = resolve_pair(parse_germ("(y^3+x^5)/x"));
    std::string j1 = resolution_to_json(res);
    auto back = resolution_from_json(j1);
    std::string j2 = resolution_to_json(back);
    CHECK(j1 == j2);
    // queries still work on loaded data
    CHECK(ord_along(back, 4, parse_poly("y^3+x^5", xy)) == 15);
    CHECK(back.divisors.size() == res.divisors.size());
    CHECK(back.edges == res.edges);
}
