#include <doctest.h>

#include <random>

#include "braidforge/errors.hpp"
#include "braidforge/invariants.hpp"

using namespace braidforge;

static LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

TEST_CASE("laurent arithmetic") {
    auto a = P("1 - t + t^2");
    auto b = P("1 + t");
    CHECK((a * b) == P("1 + t^3"));
    CHECK(P("1 + t^3").divide_exact(b) == a);
    CHECK_THROWS_AS(P("1 + t^2").divide_exact(b), InternalInvariantViolation);
    CHECK(P("t^-2 - 3*t^-1").normalized() == P("-1 + 3*t").normalized());
    CHECK(P("-1 + t - t^2").normalized() == a);
    CHECK(a.to_string() == "1 - t + t^2");
    CHECK(P("-2*t^-1 + 5*t^3").to_string() == "-2*t^-1 + 5*t^3");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(poly_from_json(to_json(a)) == a);
    CHECK(a.mirrored() == P("t^-2 - t^-1 + 1"));
    CHECK(P("1 + t").substitute(3) == P("1 + t^3"));
}

TEST_CASE("laurent overflow is detected") {
    auto big = LaurentPoly(std::int64_t(1) << 62);
    CHECK_THROWS_AS(big * LaurentPoly(4), OverflowError);
}

TEST_CASE("burau convention") {
    auto b = burau_reduced(BraidWord(2, {1}));
    CHECK(b.dim() == 1);
    CHECK(b.m[0][0] == LaurentPoly::monomial(-1, 1));
    CHECK(burau_reduced(BraidWord(4, {})) == identity_burau(3));
    std::mt19937 rng(3);
    for (int it = 0; it < 50; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        BraidWord u, v;
        u.strands = v.strands = n;
        for (int k = 0; k < 6; ++k) {
            int i = 1 + static_cast<int>(rng() % (n - 1));
            u.letters.push_back(rng() % 2 ? i : -i);
            int j = 1 + static_cast<int>(rng() % (n - 1));
            v.letters.push_back(rng() % 2 ? j : -j);
        }
        CHECK(burau_reduced(concat(u, v)) == burau_reduced(u) * burau_reduced(v));
        CHECK(burau_reduced(concat(u, inverse(u))) == identity_burau(n - 1));
    }
    // braid relation
    CHECK(burau_reduced(BraidWord(3, {1, 2, 1})) == burau_reduced(BraidWord(3, {2, 1, 2})));
    CHECK(burau_reduced(BraidWord(4, {1, 3})) == burau_reduced(BraidWord(4, {3, 1})));
}

TEST_CASE("alexander examples") {
    CHECK(alexander_from_braid(BraidWord(2, {1})) == LaurentPoly(1));
    CHECK(alexander_from_braid(BraidWord(2, {1, 1, 1})) == P("1 - t + t^2"));
    CHECK(alexander_from_braid(one_bridge_braid(3, 2, 0)) == P("1 - t + t^2"));
    CHECK(alexander_from_braid(BraidWord(2, {1, 1, 1, 1, 1})) == P("1 - t + t^2 - t^3 + t^4"));
    // figure eight
    CHECK(alexander_from_braid(BraidWord(3, {1, -2, 1, -2})) == P("1 - 3*t + t^2"));
    CHECK(alexander_from_braid(BraidWord(1, {})) == LaurentPoly(1));
    CHECK_THROWS_AS(alexander_from_braid(one_bridge_braid(3, 2, 1)), NotAKnot);
}

TEST_CASE("same closure evidence") {
    auto r = same_closure_evidence(twisted_torus_braid(2, 3, 2, 1), one_bridge_braid(2, 5, 0));
    CHECK(r.verdict == "consistent");
    CHECK(*r.alexander_u == P("1 - t + t^2 - t^3 + t^4"));
    CHECK(r.note.find("not sufficient") != std::string::npos);
    CHECK(same_closure_evidence(BraidWord(2, {1, 1, 1}), BraidWord(2, {1})).verdict == "inconsistent");
    auto w = one_bridge_braid(5, 3, 2);
    CHECK(same_closure_evidence(w, w).verdict == "consistent");
}

TEST_CASE("markov invariance of alexander") {
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 1000) {
        int n = 2 + static_cast<int>(rng() % 4);
        BraidWord w;
        w.strands = n;
        int len = 1 + static_cast<int>(rng() % 12);
        for (int k = 0; k < len; ++k) {
            int i = 1 + static_cast<int>(rng() % (n - 1));
            w.letters.push_back(rng() % 3 ? i : -i);
        }
        if (closure_components(w) != 1) continue;
        auto a = alexander_from_braid(w);
        BraidWord g;
        g.strands = n;
        int i = 1 + static_cast<int>(rng() % (n - 1));
        g.letters.push_back(rng() % 2 ? i : -i);
        CHECK(alexander_from_braid(concat(concat(g, w), inverse(g))) == a);
        BraidWord st = w;
        st.strands = n + 1;
        st.letters.push_back(rng() % 2 ? n : -n);
        CHECK(alexander_from_braid(st) == a);
        ++checked;
    }
}

TEST_CASE("alexander properties on positive braid knots") {
    for (int w = 2; w <= 6; ++w)
        for (int t = 1; t <= 6; ++t)
            for (int b = 0; b <= w - 2; ++b) {
                auto br = one_bridge_braid(w, t, b);
                if (closure_components(br) != 1) continue;
                auto a = alexander_from_braid(br);
                CHECK((a.at_one() == 1 || a.at_one() == -1));
                CHECK(a.mirrored().normalized() == a);
                CHECK(a.span() == 2 * positive_closure_genus(br).genus);
            }
}
