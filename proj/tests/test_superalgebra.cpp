#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starq/printer.hpp"
#include "test_support.hpp"

using namespace starq;
using namespace starq::testing;

TEST_CASE("psi factors anticommute and square to zero") {
    WeylElement p1 = psiv(0), p2 = psiv(1);
    CHECK(superproduct(p1, p2) == -superproduct(p2, p1));
    CHECK(superproduct(p1, p1).is_zero());
    CHECK(superproduct(superproduct(p1, p2), p1).is_zero());
}

TEST_CASE("commuting subring multiplies as plain polynomials") {
    WeylElement lhs = superproduct(xv(0) + yv(0), xv(0) - yv(0));
    WeylElement expect = xv(0) * xv(0) - yv(0) * yv(0);
    CHECK(lhs == expect);
}

TEST_CASE("partial derivatives: left psi derivative signs and polynomial rule") {
    WeylElement p12 = superproduct(psiv(0), psiv(1));
    CHECK(partial(p12, Var{VarKind::Psi, 0}) == psiv(1));
    CHECK(partial(p12, Var{VarKind::Psi, 1}) == -psiv(0));

    WeylElement e = yv(0) * yv(0) * pv(0);
    CHECK(partial(e, Var{VarKind::Y, 0}) == yv(0).scaled(Gaussian(2)) * pv(0));

    CHECK_THROWS_AS(partial(e, Var{VarKind::Y, 7}), std::invalid_argument);
}

TEST_CASE("restrict_00 keeps the (y, psi)-free part and is idempotent") {
    WeylElement a = xv(0) + yv(0) + yv(0) * psiv(1);
    CHECK(restrict_00(a) == xv(0));
    CHECK(restrict_00(pv(0) * pv(1)) == pv(0) * pv(1));
    CHECK(restrict_00(psiv(0)).is_zero());
    RandomGen rng(7);
    for (int t = 0; t < 20; ++t) {
        WeylElement e = rng.poly(2, kAllVars2, 4, 5, -1, 1, true);
        CHECK(restrict_00(restrict_00(e)) == restrict_00(e));
    }
}

TEST_CASE("grade_split partitions by (y, psi) bidegree and sums back") {
    WeylElement a = yv(0) * psiv(0) + yv(0) * yv(1);
    auto parts = grade_split(a);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == Grading{1, 1});
    CHECK(parts[0].second == yv(0) * psiv(0));
    CHECK(parts[1].first == Grading{2, 0});
    CHECK(parts[1].second == yv(0) * yv(1));

    CHECK(grade_split(WeylElement::zero(2)).empty());
    auto single = grade_split(xv(0));
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == Grading{0, 0});

    RandomGen rng(8);
    for (int t = 0; t < 30; ++t) {
        WeylElement e = rng.poly(2, kAllVars2, 4, 6, -1, 1, true);
        WeylElement sum = WeylElement::zero(2);
        for (const auto& [g, part] : grade_split(e)) sum += part;
        CHECK(sum == e);
    }
}

TEST_CASE("superproduct associativity and supercommutativity on random elements") {
    RandomGen rng(2024);
    for (int t = 0; t < 200; ++t) {
        WeylElement a = rng.poly(2, kAllVars2, 4, 3, 0, 1, true);
        WeylElement b = rng.poly(2, kAllVars2, 4, 3, 0, 1, true);
        WeylElement c = rng.poly(2, kAllVars2, 4, 3, 0, 1, true);
        CHECK(superproduct(superproduct(a, b), c) == superproduct(a, superproduct(b, c)));
    }
}

TEST_CASE("Koszul sign coherence for homogeneous parities") {
    RandomGen rng(11);
    for (int t = 0; t < 200; ++t) {
        WeylElement ae = rng.poly(2, kEvenVars2, 3, 3);
        WeylElement be = rng.poly(2, kEvenVars2, 3, 3);
        CHECK(superproduct(ae, be) == superproduct(be, ae));

        WeylElement ao = superproduct(rng.poly(2, kEvenVars2, 2, 2), psiv(t % 2));
        WeylElement bo = superproduct(rng.poly(2, kEvenVars2, 2, 2), psiv((t + 1) % 2));
        CHECK(superproduct(ao, bo) == -superproduct(bo, ao));
        CHECK(superproduct(ao, be) == superproduct(be, ao));
    }
}

TEST_CASE("dimension mismatch is rejected") {
    WeylElement a(2), b(3);
    CHECK_THROWS_AS(superproduct(a, b), std::invalid_argument);
}

TEST_CASE("canonicalization: zero terms vanish and re-canonicalization is the identity") {
    WeylElement a = xv(0);
    a += -xv(0);
    CHECK(a.is_zero());

    RandomGen rng(12);
    for (int t = 0; t < 30; ++t) {
        WeylElement e = rng.poly(2, kAllVars2, 4, 5, -2, 2, true);
        WeylElement again = WeylElement::zero(2);
        for (const auto& [k, c] : e.terms()) again.add_term(k.degree, c, k.hbar_power);
        CHECK(again == e);
        CHECK(e.truncated(e.truncation_order()) == e);
    }
}

TEST_CASE("truncation drops terms above the Fedosov degree and commutes with products") {
    // fedosov degree = deg y + 2 max(0, hbar power)
    WeylElement e(2, 3);
    Multidegree md(2);
    md.set_y_exp(0, 2);
    e.add_term(md, Gaussian(1), 1);  // degree 4 > 3: dropped
    CHECK(e.is_zero());
    e.add_term(md, Gaussian(1), 0);  // degree 2: kept
    CHECK(e.term_count() == 1);

    RandomGen rng(13);
    for (int t = 0; t < 40; ++t) {
        WeylElement a = rng.poly(2, kAllVars2, 3, 4, 0, 2, true);
        WeylElement b = rng.poly(2, kAllVars2, 3, 4, 0, 2, true);
        for (uint32_t order : {2u, 4u, 6u}) {
            WeylElement lhs = superproduct(a.truncated(order), b.truncated(order)).truncated(order);
            WeylElement rhs = superproduct(a, b).truncated(order);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Laurent floor is enforced on arithmetic results") {
    WeylElement e(2, 4);  // floor -8
    Multidegree md(2);
    CHECK_THROWS_AS(e.add_term(md, Gaussian(1), -9), std::domain_error);
    WeylElement ok(2, 4);
    ok.add_term(md, Gaussian(1), -8);
    CHECK(ok.term_count() == 1);
}

TEST_CASE("parity split separates even and odd psi degrees") {
    WeylElement e = xv(0) + psiv(0) + superproduct(psiv(0), psiv(1));
    auto [even, odd] = e.parity_split();
    CHECK(even == xv(0) + superproduct(psiv(0), psiv(1)));
    CHECK(odd == psiv(0));
    CHECK(even + odd == e);
}
