#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "excepta/rootsystem.hpp"

using namespace excepta;

namespace {

std::vector<DynkinType> all_types(int max_classical_rank = 8) {
    std::vector<DynkinType> out;
    for (int l = 1; l <= max_classical_rank; ++l) out.push_back({Family::A, l});
    for (int l = 2; l <= max_classical_rank; ++l) out.push_back({Family::B, l});
    for (int l = 2; l <= max_classical_rank; ++l) out.push_back({Family::C, l});
    for (int l = 4; l <= max_classical_rank; ++l) out.push_back({Family::D, l});
    out.push_back({Family::E, 6});
    out.push_back({Family::E, 7});
    out.push_back({Family::E, 8});
    out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

int expected_positive_count(DynkinType t) {
    int l = t.rank;
    switch (t.family) {
        case Family::A: return l * (l + 1) / 2;
        case Family::B:
        case Family::C: return l * l;
        case Family::D: return l * (l - 1);
        case Family::E: return l == 6 ? 36 : (l == 7 ? 63 : 120);
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return -1;
}

}  // namespace

TEST_CASE("positive root counts match the closed forms") {
    for (DynkinType t : all_types()) {
        RootSystem rs = build(t);
        CAPTURE(type_name(t));
        CHECK(rs.num_positive() == expected_positive_count(t));
    }
}

TEST_CASE("G2 long positive roots are {a2, 3a1+a2, 3a1+2a2}") {
    RootSystem rs = build({Family::G, 2});
    std::vector<RootVector> longs;
    for (int i : rs.long_positive_indices) longs.push_back(rs.positive_roots[i]);
    std::vector<RootVector> expect = {{0, 1}, {3, 1}, {3, 2}};
    CHECK(longs == expect);
}

TEST_CASE("F4 has 24 positive roots, 12 long") {
    RootSystem rs = build({Family::F, 4});
    CHECK(rs.num_positive() == 24);
    CHECK(rs.long_positive_indices.size() == 12);
}

TEST_CASE("A1 has a single positive root which is the highest root") {
    RootSystem rs = build({Family::A, 1});
    REQUIRE(rs.num_positive() == 1);
    CHECK(rs.positive_roots[0] == RootVector{1});
    CHECK(rs.highest_root == RootVector{1});
}

TEST_CASE("highest root dominates every positive root coordinatewise") {
    for (DynkinType t : all_types()) {
        RootSystem rs = build(t);
        for (const RootVector& g : rs.positive_roots)
            for (int i = 0; i < rs.rank(); ++i) CHECK(g[i] <= rs.highest_root[i]);
    }
}

TEST_CASE("invalid ranks are rejected") {
    CHECK_THROWS_AS(build({Family::D, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::E, 9}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::G, 3}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::B, 1}), std::invalid_argument);
}

TEST_CASE("inner product examples") {
    RootSystem a2 = build({Family::A, 2});
    CHECK(inner_product(a2, {1, 0}, {1, 0}) == 1);
    RootSystem g2 = build({Family::G, 2});
    CHECK(inner_product(g2, {1, 0}, {3, 2}) == 3);
    CHECK(inner_product(g2, {0, 0}, {3, 2}) == 0);
}

TEST_CASE("inner product agrees with the symmetrized Gram matrix") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (DynkinType t : all_types(6)) {
        RootSystem rs = build(t);
        int l = rs.rank();
        for (int trial = 0; trial < 20; ++trial) {
            Weight mu(l);
            RootVector gamma(l);
            for (int i = 0; i < l; ++i) {
                mu[i] = coef(rng);
                gamma[i] = coef(rng);
            }
            // Gram form: (mu, gamma) = x^T (d_i C[i][j]) y with mu in alpha-coords.
            auto x = weight_to_root_coords(rs, mu);
            BigRat gram = 0;
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < l; ++j)
                    gram += x[i] * rs.d[i] * rs.cartan[i][j] * gamma[j];
            CHECK(gram == BigRat(inner_product(rs, mu, gamma)));
        }
    }
}

TEST_CASE("weight/root coordinate conversions") {
    RootSystem g2 = build({Family::G, 2});
    auto x = weight_to_root_coords(g2, {1, 0});
    CHECK(x == std::vector<BigRat>{2, 1});
    RootSystem f4 = build({Family::F, 4});
    auto y = weight_to_root_coords(f4, {0, 0, 0, 1});
    CHECK(y == std::vector<BigRat>{1, 2, 3, 2});
    CHECK(weight_to_root_coords(f4, {0, 0, 0, 0}) == std::vector<BigRat>(4, 0));
}

TEST_CASE("coordinate conversion round-trips") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (DynkinType t : all_types(6)) {
        RootSystem rs = build(t);
        for (int trial = 0; trial < 10; ++trial) {
            RootVector x(rs.rank());
            for (int& v : x) v = coef(rng);
            Weight mu = root_to_weight_coords(rs, x);
            auto back = weight_to_root_coords(rs, mu);
            for (int i = 0; i < rs.rank(); ++i) CHECK(back[i] == BigRat(x[i]));
        }
    }
}

TEST_CASE("prime classifiers match the standard lists") {
    CHECK(is_bad_prime({Family::E, 8}, 5));
    CHECK_FALSE(is_bad_prime({Family::E, 7}, 5));
    CHECK_FALSE(is_bad_prime({Family::A, 4}, 2));
    CHECK(is_bad_prime({Family::B, 3}, 2));
    CHECK(is_bad_prime({Family::G, 2}, 3));
    CHECK_FALSE(is_bad_prime({Family::G, 2}, 5));

    CHECK(is_special_prime({Family::C, 3}, 2));
    CHECK(is_special_prime({Family::B, 5}, 2));
    CHECK(is_special_prime({Family::F, 4}, 2));
    CHECK(is_special_prime({Family::G, 2}, 3));
    CHECK_FALSE(is_special_prime({Family::G, 2}, 2));
    CHECK_FALSE(is_special_prime({Family::D, 4}, 2));
    CHECK_FALSE(is_special_prime({Family::E, 6}, 2));

    CHECK_FALSE(is_bad_prime({Family::A, 4}, 5));
    CHECK_FALSE(is_very_good_prime({Family::A, 4}, 5));  // 5 divides l+1
    CHECK(is_very_good_prime({Family::A, 4}, 7));
    CHECK_FALSE(is_very_good_prime({Family::E, 8}, 5));

    CHECK_THROWS_AS(is_bad_prime({Family::A, 2}, 4), std::invalid_argument);
}

TEST_CASE("dim_g values") {
    CHECK(dim_g({Family::E, 8}) == 248);
    CHECK(dim_g({Family::E, 7}) == 133);
    CHECK(dim_g({Family::E, 6}) == 78);
    CHECK(dim_g({Family::F, 4}) == 52);
    CHECK(dim_g({Family::G, 2}) == 14);
    CHECK(dim_g({Family::A, 4}) == 24);
    CHECK(dim_g({Family::B, 3}) == 21);
    CHECK(dim_g({Family::C, 3}) == 21);
    CHECK(dim_g({Family::D, 4}) == 28);
}

TEST_CASE("center_dim is the Cartan corank mod p") {
    CHECK(center_dim({Family::A, 4}, 5) == 1);
    for (long long p : {2, 3, 5, 7}) {
        CHECK(center_dim({Family::E, 8}, p) == 0);
        CHECK(center_dim({Family::F, 4}, p) == 0);
        CHECK(center_dim({Family::G, 2}, p) == 0);
    }
    // A_l: 1 iff p | l+1.
    for (int l = 1; l <= 8; ++l)
        for (long long p : {2, 3, 5, 7})
            CHECK(center_dim({Family::A, l}, p) == ((l + 1) % p == 0 ? 1 : 0));
    CHECK(center_dim({Family::D, 4}, 2) == 2);
    CHECK(center_dim({Family::D, 5}, 2) == 1);
    CHECK(center_dim({Family::E, 6}, 3) == 1);
    CHECK(center_dim({Family::E, 7}, 2) == 1);
    // C_l: nu=1 if p | l (p odd), else 0... corank: det = 2, so 1 at p=2.
    CHECK(center_dim({Family::C, 3}, 2) == 1);
    CHECK(center_dim({Family::C, 3}, 3) == 0);
}

TEST_CASE("graph twist examples") {
    RootSystem e6 = build({Family::E, 6});
    CHECK(graph_twist(e6, {1, 0, 0, 0, 0, 0}, Automorphism::E6Involution) ==
          Weight{0, 0, 0, 0, 0, 1});
    RootSystem a5 = build({Family::A, 5});
    CHECK(graph_twist(a5, {0, 1, 0, 0, 0}, Automorphism::Reversal) == Weight{0, 0, 0, 1, 0});
    RootSystem d4 = build({Family::D, 4});
    Weight w3 = {0, 0, 1, 0};
    Weight t1 = graph_twist(d4, w3, Automorphism::Triality);
    Weight t2 = graph_twist(d4, w3, Automorphism::TrialityInverse);
    CHECK(((t1 == Weight{0, 0, 0, 1} && t2 == Weight{1, 0, 0, 0}) ||
           (t1 == Weight{1, 0, 0, 0} && t2 == Weight{0, 0, 0, 1})));
    // Involutions square to the identity; triality cubes to it.
    Weight v = {1, 2, 0, 3, 0};
    CHECK(graph_twist(a5, graph_twist(a5, v, Automorphism::Reversal), Automorphism::Reversal) == v);
    Weight u = {2, 1, 0, 3};
    Weight c = u;
    for (int k = 0; k < 3; ++k) c = graph_twist(d4, c, Automorphism::Triality);
    CHECK(c == u);
    CHECK(graph_twist(d4, graph_twist(d4, u, Automorphism::Triality),
                      Automorphism::TrialityInverse) == u);
}

TEST_CASE("invalid automorphisms are rejected") {
    RootSystem a1 = build({Family::A, 1});
    CHECK_THROWS_AS(graph_twist(a1, {1}, Automorphism::Reversal), std::invalid_argument);
    RootSystem b3 = build({Family::B, 3});
    CHECK_THROWS_AS(graph_twist(b3, {1, 0, 0}, Automorphism::DSwap), std::invalid_argument);
    RootSystem d5 = build({Family::D, 5});
    CHECK_THROWS_AS(graph_twist(d5, {1, 0, 0, 0, 0}, Automorphism::Triality),
                    std::invalid_argument);
}
