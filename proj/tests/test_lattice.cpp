#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cluster/lattice.hpp"

#include <random>

using namespace cluster;

namespace {

Mat kronecker_bt() { return Mat::from_int_rows({{0, -2}, {2, 0}}); }
Mat a2_bt() { return Mat::from_int_rows({{0, -1}, {1, 0}}); }

// Brute-force dominance oracle: search n in a box.
std::optional<IntVec> brute_dominance(const IntVec& from, const IntVec& to, const Mat& bt, i64 box) {
    int m = bt.cols();
    IntVec n(m, 0);
    while (true) {
        IntVec probe = to;
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < bt.rows(); ++i)
                probe[i] += n[k] * bt.at(i, k).as_integer();
        if (probe == from) return n;
        int k = 0;
        while (k < m && n[k] == box) { n[k] = 0; ++k; }
        if (k == m) return std::nullopt;
        ++n[k];
    }
}

} // namespace

TEST_CASE("dominance solve on the Kronecker seed") {
    auto n = solve_dominance({-1, 1}, {1, -1}, kronecker_bt());
    REQUIRE(n);
    CHECK(*n == IntVec{1, 1});
}

TEST_CASE("dominance solve identity case") {
    auto n = solve_dominance({3, -4}, {3, -4}, kronecker_bt());
    REQUIRE(n);
    CHECK(*n == IntVec{0, 0});
    auto n2 = solve_dominance({7, 2}, {7, 2}, a2_bt());
    REQUIRE(n2);
    CHECK(*n2 == IntVec{0, 0});
}

TEST_CASE("dominance solve rejects negative witnesses") {
    CHECK_FALSE(solve_dominance({-1, 0}, {-1, 1}, a2_bt()));
}

TEST_CASE("rank-deficient matrix is a configuration error") {
    Mat bad = Mat::from_int_rows({{0, 0}, {2, 0}});
    CHECK_THROWS_AS(solve_dominance({0, 0}, {1, 1}, bad), ConfigError);
}

TEST_CASE("dominance agrees with brute force") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-6, 6);
    Mat bts[] = {kronecker_bt(), a2_bt(), Mat::from_int_rows({{0, -1}, {1, 0}, {2, 1}})};
    for (const Mat& bt : bts) {
        DomSolver solver(bt);
        for (int trial = 0; trial < 200; ++trial) {
            IntVec from(bt.rows()), to(bt.rows());
            for (auto& x : from) x = coord(rng);
            for (auto& x : to) x = coord(rng);
            auto fast = solve_dominance(from, to, solver);
            auto slow = brute_dominance(from, to, bt, 8);
            if (fast && ivec_sum(*fast) <= 8) {
                REQUIRE(slow);
                CHECK(*fast == *slow);
            }
            if (slow) {
                REQUIRE(fast);
                CHECK(*fast == *slow);
            }
        }
    }
}

TEST_CASE("dominance antisymmetry") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-5, 5);
    DomSolver solver(kronecker_bt());
    for (int trial = 0; trial < 300; ++trial) {
        IntVec a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
        auto ab = solve_dominance(a, b, solver);
        auto ba = solve_dominance(b, a, solver);
        if (ab && ba) CHECK(a == b);
    }
}

TEST_CASE("interval on the Kronecker seed") {
    auto box = interval({-1, 1}, {1, -1}, kronecker_bt());
    std::set<IntVec> want{{1, -1}, {1, 1}, {-1, -1}, {-1, 1}};
    CHECK(box == want);
}

TEST_CASE("interval singleton and empty cases") {
    CHECK(interval({2, 5}, {2, 5}, a2_bt()) == std::set<IntVec>{{2, 5}});
    CHECK(interval({-1, 0}, {-1, 1}, a2_bt()).empty());
}

TEST_CASE("interval on A2") {
    auto box = interval({0, 1}, {0, 0}, a2_bt());
    std::set<IntVec> want{{0, 0}, {0, 1}};
    CHECK(box == want);
}

TEST_CASE("interval cardinality is prod(n_k + 1)") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> small(0, 3);
    DomSolver solver(kronecker_bt());
    for (int trial = 0; trial < 50; ++trial) {
        IntVec n{small(rng), small(rng)};
        IntVec g{small(rng) - 2, small(rng) - 2};
        IntVec eta = g;
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i) eta[i] += n[k] * solver.bt().at(i, k).as_integer();
        auto box = interval(eta, g, solver);
        CHECK(i64(box.size()) == (n[0] + 1) * (n[1] + 1));
        // every member sits between eta and g
        for (const auto& pt : box) {
            CHECK(solve_dominance(pt, g, solver));
            CHECK(solve_dominance(eta, pt, solver));
        }
    }
}

TEST_CASE("int_inverse basics") {
    CHECK(int_inverse(Mat::identity(3)) == Mat::identity(3));
    Mat flip = Mat::from_int_rows({{-1, 0}, {0, 1}});
    CHECK(int_inverse(flip) == flip);
    Mat shear = Mat::from_int_rows({{1, 1}, {0, 1}});
    CHECK(int_inverse(shear) == Mat::from_int_rows({{1, -1}, {0, 1}}));
}

TEST_CASE("int_inverse rejects non-unimodular input") {
    CHECK_THROWS_AS(int_inverse(Mat::from_int_rows({{2, 0}, {0, 1}})), InvariantError);
    CHECK_THROWS_AS(int_inverse(Mat::from_int_rows({{1, 0}, {1, 0}})), InvariantError);
}
