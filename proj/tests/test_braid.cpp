#include <doctest.h>

#include <random>

#include "braidforge/braid.hpp"
#include "braidforge/errors.hpp"

using namespace braidforge;

TEST_CASE("one_bridge_braid examples") {
    CHECK(one_bridge_braid(3, 2, 0) == BraidWord(3, {2, 1, 2, 1}));
    CHECK(one_bridge_braid(5, 3, 2) == BraidWord(5, {2, 1, 4, 3, 2, 1, 4, 3, 2, 1, 4, 3, 2, 1}));
    CHECK_THROWS_AS(one_bridge_braid(3, 2, 2), DomainError);
    CHECK_THROWS_AS(one_bridge_braid(1, 2, 0), DomainError);
    CHECK_THROWS_AS(one_bridge_braid(3, 0, 0), DomainError);
}

TEST_CASE("twisted_torus_braid examples") {
    CHECK(twisted_torus_braid(3, 4, 2, 1) == BraidWord(3, {1, 1, 2, 1, 2, 1, 2, 1, 2, 1}));
    CHECK(twisted_torus_braid(2, 3, 2, 1) == BraidWord(2, {1, 1, 1, 1, 1}));
}

TEST_CASE("twisted_torus_braid domain") {
    CHECK_THROWS_AS(twisted_torus_braid(3, 4, 3, 1), DomainError);
    CHECK_THROWS_AS(twisted_torus_braid(3, 0, 2, 1), DomainError);
    for (int p = 2; p <= 7; ++p)
        for (int q = 1; q <= 6; ++q)
            for (int l = 1; l < p || (l == 2 && p == 2); ++l)
                for (int m = 1; m <= 3; ++m)
                    CHECK(twisted_torus_braid(p, q, l, m).letters.size() ==
                          static_cast<std::size_t>(l * m * (l - 1) + q * (p - 1)));
}

TEST_CASE("pi words") {
    CHECK(pi_power(2, 1, 3).letters == std::vector<int>{2, 1});
    CHECK(big_pi(2, 3).letters == std::vector<int>{1, 2, 1});
    CHECK_THROWS_AS(pi_power(3, 1, 3), DomainError);
    CHECK_THROWS_AS(big_pi(0, 3), DomainError);
    for (int w = 2; w <= 8; ++w)
        for (int t = 1; t <= 8; ++t) CHECK(one_bridge_braid(w, t, 0) == pi_power(w - 1, t, w));
}

TEST_CASE("closure components") {
    CHECK(closure_components(BraidWord(2, {1, 1, 1})) == 1);
    CHECK(closure_components(one_bridge_braid(3, 2, 1)) == 2);
    CHECK(closure_components(one_bridge_braid(5, 3, 2)) == 1);
    // twist block sends k -> k+1 and omega -> 1
    auto p = braid_permutation(pi_power(4, 1, 5));
    CHECK(p.images == std::vector<int>{2, 3, 4, 5, 1});
}

TEST_CASE("closure components under conjugation and stabilization") {
    std::mt19937 rng(7);
    for (int it = 0; it < 500; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        BraidWord w;
        w.strands = n;
        int len = static_cast<int>(rng() % 20);
        for (int k = 0; k < len; ++k) {
            int i = 1 + static_cast<int>(rng() % (n - 1));
            w.letters.push_back(rng() % 2 ? i : -i);
        }
        BraidWord g;
        g.strands = n;
        for (int k = 0; k < 4; ++k) g.letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
        auto conj = concat(concat(g, w), inverse(g));
        CHECK(closure_components(conj) == closure_components(w));
        BraidWord st = w;
        st.strands = n + 1;
        st.letters.push_back(rng() % 2 ? n : -n);
        CHECK(closure_components(st) == closure_components(w));
    }
}

TEST_CASE("genus and slope threshold") {
    auto g = positive_closure_genus(one_bridge_braid(3, 2, 0));
    CHECK(g.genus == 1);
    CHECK(g.slope_threshold == 1);
    g = positive_closure_genus(one_bridge_braid(5, 3, 2));
    CHECK(g.genus == 5);
    CHECK(g.slope_threshold == 9);
    CHECK_THROWS_AS(positive_closure_genus(BraidWord(2, {1, -1, 1})), NotPositiveBraid);
    CHECK_THROWS_AS(positive_closure_genus(one_bridge_braid(3, 2, 1)), NotAKnot);
}

TEST_CASE("slope threshold identity on the grid") {
    int knots = 0;
    for (int w = 2; w <= 8; ++w)
        for (int t = 1; t <= 8; ++t)
            for (int b = 0; b <= w - 2; ++b) {
                auto br = one_bridge_braid(w, t, b);
                if (closure_components(br) != 1) continue;
                ++knots;
                CHECK(positive_closure_genus(br).slope_threshold == w * t + b - t - w);
            }
    CHECK(knots == 77);
}

TEST_CASE("lspace ttk condition") {
    CHECK(lspace_ttk_condition(5, 1, 4, 7));
    CHECK(lspace_ttk_condition(7, 1, 2, 1));
    CHECK_FALSE(lspace_ttk_condition(7, 1, 3, 2));
    CHECK(lspace_ttk_condition(7, 1, 5, 1));
    CHECK_THROWS_AS(lspace_ttk_condition(3, 1, 3, 1), DomainError);
}

TEST_CASE("braid json round trip") {
    auto w = one_bridge_braid(5, 3, 2);
    CHECK(braid_from_json(to_json(w)) == w);
    CHECK_THROWS_AS(braid_from_json(nlohmann::json::parse(R"({"strands":2,"word":[2]})")), DomainError);
    CHECK_THROWS_AS(braid_from_json(nlohmann::json::parse(R"({"word":[1]})")), DomainError);
}
