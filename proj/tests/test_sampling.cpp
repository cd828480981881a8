#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <set>

#include "hypervis/parallel.hpp"
#include "hypervis/sampling.hpp"

using namespace hypervis;

TEST_CASE("rng streams are deterministic and decorrelated") {
    rng::Stream a(42, 0), b(42, 0), c(42, 1), d(43, 0);
    std::uint64_t first = a.next();
    CHECK(b.next() == first);
    CHECK(c.next() != first);
    CHECK(d.next() != first);

    rng::Stream u(7, 7);
    double mean = 0.0;
    for (int i = 0; i < 100000; ++i) {
        double x = u.uniform01();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        mean += x;
    }
    CHECK(mean / 100000.0 == doctest::Approx(0.5).epsilon(0.01));

    rng::Stream bd(1, 2);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 3000; ++i) {
        std::uint64_t x = bd.bounded(10);
        REQUIRE(x < 10);
        seen.insert(x);
    }
    CHECK(seen.size() == 10);
}

TEST_CASE("sample_point stays in the cube") {
    LatticeParams params{5, 3};
    rng::Stream s(0, 0);
    bool hit_low = false, hit_high = false;
    for (int i = 0; i < 2000; ++i) {
        Point p = sample_point(params, s);
        REQUIRE(params.contains(p));
        for (Coord c : p) {
            if (c == 0) hit_low = true;
            if (c == 3) hit_high = true;
        }
    }
    CHECK(hit_low);
    CHECK(hit_high);
}

TEST_CASE("experiments are bit-identical across thread counts") {
    auto r1 = pair_distance_experiment(8, 50, 30000, 0.05, 123, 1);
    auto r4 = pair_distance_experiment(8, 50, 30000, 0.05, 123, 4);
    CHECK(r1.fraction_in_window == r4.fraction_in_window);
    CHECK(r1.mean == r4.mean);
    CHECK(r1.std_error == r4.std_error);
    CHECK(r1.accepted == r4.accepted);

    auto p1 = polytope_experiment(3, 20, 3, 30000, 0.1, 9, 1);
    auto p3 = polytope_experiment(3, 20, 3, 30000, 0.1, 9, 3);
    CHECK(p1.mean == p3.mean);
    CHECK(p1.accepted == p3.accepted);

    auto b1 = continuous_baseline(16, 30000, 5, 1);
    auto b2 = continuous_baseline(16, 30000, 5, 2);
    CHECK(b1.mean == b2.mean);
    CHECK(b1.mean_dist == b2.mean_dist);
}

TEST_CASE("different seeds give different estimates") {
    auto a = pair_distance_experiment(4, 30, 20000, 0.05, 0);
    auto b = pair_distance_experiment(4, 30, 20000, 0.05, 1);
    CHECK(a.mean != b.mean);
}

TEST_CASE("pair acceptance approaches the visible-pair density") {
    // fraction of coprime difference vectors tends to 1/zeta(d)
    auto r = pair_distance_experiment(2, 1000, 200000, 0.05, 2024);
    CHECK(r.acceptance_rate == doctest::Approx(0.6079).epsilon(0.01));
    auto r3 = pair_distance_experiment(3, 1000, 200000, 0.05, 2024);
    CHECK(r3.acceptance_rate == doctest::Approx(1.0 / 1.2020569).epsilon(0.01));
}

TEST_CASE("distance concentrates near 1/sqrt(6) as d grows") {
    auto lo = pair_distance_experiment(10, 100, 40000, 0.05, 3);
    auto hi = pair_distance_experiment(200, 100, 40000, 0.05, 3);
    CHECK(std::abs(hi.mean - 1.0 / std::sqrt(6.0)) < 0.01);
    CHECK(hi.fraction_in_window > lo.fraction_in_window);
}

TEST_CASE("sines concentrate near sqrt(7)/4 as d grows") {
    auto hi = pair_angle_experiment(200, 100, 40000, 0.05, 3);
    CHECK(std::abs(hi.mean - std::sqrt(7.0) / 4.0) < 0.01);
    CHECK(hi.fraction_in_window > 0.5);
}

TEST_CASE("window fraction is monotone in the halfwidth") {
    double prev = -1.0;
    for (double hw : {0.005, 0.02, 0.05, 0.2}) {
        auto r = pair_distance_experiment(50, 100, 20000, hw, 11);
        CHECK(r.fraction_in_window >= prev);
        prev = r.fraction_in_window;
    }
}

TEST_CASE("polytope acceptance matches the exact small case") {
    // (d, N, K) = (2, 1, 3): 24 of 64 tuples are self-visible
    auto r = polytope_experiment(2, 1, 3, 400000, 0.5, 17);
    double exact = 24.0 / 64.0;
    CHECK(std::abs(r.acceptance_rate - exact) < 4.0 * r.acceptance_std_error + 1e-9);
}

TEST_CASE("polytope experiment at K = 2 agrees with the pair experiment") {
    auto pair = pair_distance_experiment(5, 40, 50000, 0.05, 21);
    auto poly = polytope_experiment(5, 40, 2, 50000, 0.05, 21);
    // same acceptance condition, same draws per sample
    CHECK(poly.accepted == pair.accepted);
    CHECK(poly.mean == pair.mean);
}

TEST_CASE("pathological parameters are refused") {
    // no 3 points of {0,1} are pairwise at distance with gcd 1 in d = 1
    CHECK_THROWS_AS(polytope_experiment(1, 1, 3, 1000, 0.02, 0), BudgetError);
    CHECK_THROWS_AS(polytope_experiment(2, 10, 1, 1000, 0.02, 0), UsageError);
    CHECK_THROWS_AS(pair_distance_experiment(2, 10, 0, 0.02, 0), UsageError);
    CHECK_THROWS_AS(continuous_baseline(0, 100, 0), UsageError);
}

TEST_CASE("continuous baseline matches closed forms") {
    auto r = continuous_baseline(400, 50000, 4);
    CHECK(r.mean == doctest::Approx(1.0 / 6.0).epsilon(0.005));
    CHECK(r.mean_dist == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(0.01));
    CHECK(r.window_center == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("thread count resolution") {
    CHECK(resolve_thread_count(3) == 3);
    setenv("HYPERVIS_THREADS", "2", 1);
    CHECK(resolve_thread_count(0) == 2);
    CHECK(resolve_thread_count(5) == 5);
    unsetenv("HYPERVIS_THREADS");
    CHECK(resolve_thread_count(0) >= 1);
}
