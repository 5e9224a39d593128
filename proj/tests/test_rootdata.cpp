#include "oracles.hpp"

#include "frobflag/errors.hpp"
#include "frobflag/rootdata.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace frobflag;

namespace {
const RootType kTypes[] = {RootType::A2, RootType::B2, RootType::G2};
}

TEST_CASE("root types parse and print") {
    CHECK(parse_root_type("A2") == RootType::A2);
    CHECK(parse_root_type("B2") == RootType::B2);
    CHECK(parse_root_type("C2") == RootType::B2);
    CHECK(parse_root_type("G2") == RootType::G2);
    CHECK(to_string(RootType::G2) == "G2");
    CHECK_THROWS_AS(parse_root_type("A3"), ParseError);
}

TEST_CASE("coroot functionals agree with a Euclidean realization") {
    for (RootType t : kTypes) {
        CAPTURE(to_string(t));
        const auto expected = oracle::coroot_functionals(t);
        const auto& rd = root_data(t);
        REQUIRE(rd.positive_coroots.size() == expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) {
            CHECK(rd.positive_coroots[k].ca == expected[k][0]);
            CHECK(rd.positive_coroots[k].cb == expected[k][1]);
        }
        const auto roots = oracle::simple_roots_as_weights(t);
        CHECK(rd.simple_roots[0] == roots[0]);
        CHECK(rd.simple_roots[1] == roots[1]);
        CHECK(rd.weyl_order == static_cast<int>(oracle::weyl_matrices(t).size()));
    }
}

TEST_CASE("pairings with positive coroots") {
    CHECK(pairing_all_positive(RootType::A2, kRho) == std::vector<std::int64_t>{1, 1, 2});
    CHECK(pairing_all_positive(RootType::B2, {0, 1}) == std::vector<std::int64_t>{0, 1, 1, 2});
    CHECK(pairing_all_positive(RootType::G2, {2, 1}) == std::vector<std::int64_t>{2, 1, 3, 4, 5, 7});
    CHECK(root_data(RootType::G2).rho_pairings == std::vector<std::int64_t>{1, 1, 2, 3, 4, 5});
}

TEST_CASE("simple reflections and the dot action") {
    CHECK(reflect_simple(RootType::A2, 1, {1, 0}) == Weight{-1, 1});
    CHECK(reflect_simple(RootType::B2, 2, {0, 1}) == Weight{2, -1});
    CHECK(reflect_simple(RootType::G2, 1, {0, 5}) == Weight{0, 5});
    CHECK_THROWS_AS(reflect_simple(RootType::A2, 3, {0, 0}), InvalidParameter);

    CHECK(dot_action(RootType::A2, {{1}}, {-1, -1}) == Weight{-1, -1});
    CHECK(dot_action(RootType::A2, {{1}}, {0, 0}) == Weight{-2, 1});
    CHECK(dot_action(RootType::B2, {{2}}, {0, 0}) == Weight{2, -2});
    // rightmost letter first
    CHECK(dot_action(RootType::A2, {{1, 2}}, {0, 0}) == dot_simple(RootType::A2, 1, dot_simple(RootType::A2, 2, {0, 0})));
}

TEST_CASE("Weyl group enumeration") {
    auto lengths = [](RootType t) {
        std::vector<int> l;
        for (const auto& w : weyl_group(t)) l.push_back(w.length());
        return l;
    };
    CHECK(lengths(RootType::A2) == std::vector<int>{0, 1, 1, 2, 2, 3});
    CHECK(lengths(RootType::B2) == std::vector<int>{0, 1, 1, 2, 2, 3, 3, 4});
    CHECK(lengths(RootType::G2) == std::vector<int>{0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6});
    CHECK(to_string(weyl_group(RootType::A2).front()) == "e");
    CHECK(to_string(weyl_group(RootType::A2).back()) == "s1 s2 s1");

    for (RootType t : kTypes) {
        // distinct elements, each of the length the oracle assigns
        const auto mats = oracle::weyl_matrices(t);
        std::set<Weight> images;
        const Weight generic{3, 7};
        for (const auto& w : weyl_group(t)) {
            images.insert(act(t, w, generic));
            int oracle_len = -1;
            for (const auto& [m, l] : mats) {
                if (m(generic) == act(t, w, generic)) oracle_len = l;
            }
            CHECK(oracle_len == w.length());
        }
        CHECK(images.size() == mats.size());
    }
}

TEST_CASE("weight literals") {
    CHECK(parse_weight("-2,1") == Weight{-2, 1});
    CHECK(parse_weight(" -2,1") == Weight{-2, 1});
    CHECK(parse_weight("( 3 , -4 )") == Weight{3, -4});
    CHECK_THROWS_AS(parse_weight("3"), ParseError);
    CHECK_THROWS_AS(parse_weight("a,b"), ParseError);
    CHECK_THROWS_AS(parse_weight("1,2,3"), ParseError);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
    for (int k = 0; k < 200; ++k) {
        Weight w{d(rng), d(rng)};
        CHECK(parse_weight(to_string(w)) == w);
    }
}

TEST_CASE("the dot action is a group action") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> d(-20, 20);
    for (RootType t : kTypes) {
        const auto& group = weyl_group(t);
        for (int k = 0; k < 100; ++k) {
            const Weight w{d(rng), d(rng)};
            const auto& x = group[rng() % group.size()];
            const auto& y = group[rng() % group.size()];
            CHECK(dot_action(t, concat(x, y), w) == dot_action(t, x, dot_action(t, y, w)));
        }
    }
}

TEST_CASE("reflections are involutions and permute coroot pairings up to sign") {
    for (RootType t : kTypes) {
        for (std::int64_t a = -6; a <= 6; ++a) {
            for (std::int64_t b = -6; b <= 6; ++b) {
                const Weight w{a, b};
                for (int i = 1; i <= 2; ++i) {
                    CHECK(reflect_simple(t, i, reflect_simple(t, i, w)) == w);
                    CHECK(dot_simple(t, i, dot_simple(t, i, w)) == w);
                    auto abs_sorted = [&](Weight x) {
                        auto v = pairing_all_positive(t, x);
                        for (auto& c : v) c = c < 0 ? -c : c;
                        std::sort(v.begin(), v.end());
                        return v;
                    };
                    CHECK(abs_sorted(reflect_simple(t, i, w)) == abs_sorted(w));
                }
            }
        }
    }
}

TEST_CASE("dot action composes on the full grid") {
    for (RootType t : kTypes) {
        const auto& group = weyl_group(t);
        for (std::int64_t a = -6; a <= 6; ++a) {
            for (std::int64_t b = -6; b <= 6; ++b) {
                const Weight w{a, b};
                for (const auto& x : group) {
                    for (const auto& y : group) {
                        REQUIRE(dot_action(t, concat(x, y), w) == dot_action(t, x, dot_action(t, y, w)));
                    }
                }
            }
        }
    }
}
