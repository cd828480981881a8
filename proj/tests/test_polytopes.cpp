#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "hypervis/polytopes.hpp"

using namespace hypervis;

namespace {

// Oracle report computed straight from materialized points, no fast paths.
struct PlainStats {
    double min = 1e300, max = -1e300, sum = 0;
    std::uint64_t n = 0;
};

PlainStats plain_distances(const std::vector<Point>& a, const std::vector<Point>& b,
                           double normalizer) {
    PlainStats s;
    for (const auto& x : a)
        for (const auto& y : b) {
            if (x == y) continue;
            double dist = std::sqrt(static_cast<double>(distance_sq(x, y))) / normalizer;
            s.min = std::min(s.min, dist);
            s.max = std::max(s.max, dist);
            s.sum += dist;
            ++s.n;
        }
    return s;
}

bool all_visible(const std::vector<Point>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!is_visible(pts[i], pts[j])) return false;
    return true;
}

} // namespace

TEST_CASE("family C matrix at d = 2") {
    auto c = build_family(FamilyKind::C, 2);
    CHECK(c.size() == 3);
    CHECK(c.dim() == 3);
    CHECK(c.point(0) == Point{0, 1, 2});
    CHECK(c.point(1) == Point{1, 2, 0});
    CHECK(c.point(2) == Point{2, 0, 1});
    CHECK(c.normalizer() == doctest::Approx(std::pow(2.0, 1.5)));
}

TEST_CASE("family G at p = 5") {
    auto g = build_family(FamilyKind::G, 5);
    CHECK(g.point(0) == Point{0, 1, 3, 2, 4});
    CHECK(g.point(1) == Point{1, 3, 2, 4, 0});
    CHECK(g.normalizer() == doctest::Approx(std::pow(5.0, 1.5)));
    CHECK_THROWS_AS(build_family(FamilyKind::G, 6), UsageError);
}

TEST_CASE("family B coordinate rule") {
    auto b = build_family(FamilyKind::B, 5);
    CHECK(b.point(2) == Point{2, 1, 2, 3, 2, 2});
    CHECK(b.point(0) == Point{0, 1, 0, 0, 0, 5});
    CHECK(b.point(5) == Point{0, 5, 5, 5, 4, 5});
    // every point: constant h away from the two special slots
    for (std::int64_t d : {3, 7, 10}) {
        auto f = build_family(FamilyKind::B, d);
        for (std::int64_t h = 0; h <= d; ++h) {
            Point expect(static_cast<std::size_t>(d + 1), h);
            std::int64_t lo = ((h - 1) % (d + 1) + (d + 1)) % (d + 1);
            std::int64_t hi = (h + 1) % (d + 1);
            expect[static_cast<std::size_t>(lo)] = lo == d && h == 0 ? d : h - 1;
            expect[static_cast<std::size_t>(hi)] = hi == 0 && h == d ? 0 : h + 1;
            CHECK(f.point(h) == expect);
        }
    }
}

TEST_CASE("inverse_mod and inverse_table") {
    CHECK(inverse_mod(2, 5) == 3);
    CHECK(inverse_mod(0, 7) == 0);
    CHECK(inverse_mod(4, 5) == 4);
    for (std::int64_t p : {2, 3, 5, 7, 101, 997}) {
        auto table = inverse_table(p);
        REQUIRE(static_cast<std::int64_t>(table.size()) == p);
        CHECK(table[0] == 0);
        for (std::int64_t a = 1; a < p; ++a) {
            CHECK(a * table[static_cast<std::size_t>(a)] % p == 1);
            CHECK(table[static_cast<std::size_t>(a)] == inverse_mod(a, p));
        }
    }
}

TEST_CASE("C distance closed form and rotation invariance") {
    for (std::int64_t d : {2, 3, 10, 50}) {
        auto c = build_family(FamilyKind::C, d);
        auto profile = circulant_dist_sq_profile(c);
        REQUIRE(static_cast<std::int64_t>(profile.size()) == d + 1);
        for (std::int64_t x = 0; x <= d; ++x) {
            CHECK(profile[static_cast<std::size_t>(x)] == (d + 1) * x * (d + 1 - x));
            CHECK(distance_sq(c.point(0), c.point(x)) == (d + 1) * x * (d + 1 - x));
        }
        // rows k, l at the same shift as rows 0, l-k
        for (std::int64_t k = 0; k <= d; ++k)
            for (std::int64_t l = 0; l <= d; ++l) {
                std::int64_t shift = ((l - k) % (d + 1) + d + 1) % (d + 1);
                CHECK(distance_sq(c.point(k), c.point(l)) ==
                      profile[static_cast<std::size_t>(shift)]);
            }
    }
}

TEST_CASE("visibility reports on small families") {
    for (std::int64_t p : {3, 5, 7, 11}) {
        auto c = build_family(FamilyKind::C, p - 1);
        auto g = build_family(FamilyKind::G, p);
        CHECK(visibility_report(c).all_pairs_visible);
        CHECK(visibility_report(g).all_pairs_visible);
        auto both = visibility_report(c, g);
        if (p == 7) {
            // the one small-prime exception: row k of C and row k of G differ
            // by (x - x^{-1}) componentwise, which is even for every x mod 7
            CHECK(both.failing_total == 7);
            for (auto [i, j] : both.failing_pairs) CHECK(j - i == 7);
        } else {
            CHECK(both.all_pairs_visible);
            CHECK(both.failing_total == 0);
            CHECK(both.failing_pairs.empty());
        }
        CHECK(std::ranges::all_of(both.origin_visible, [](bool v) { return v; }));
    }
    // rows 1 and 2 of B differ by (2,0,0,2) at d = 3, so the family is only
    // pairwise visible from d = 4 on
    CHECK_FALSE(visibility_report(build_family(FamilyKind::B, 3)).all_pairs_visible);
    CHECK(visibility_report(build_family(FamilyKind::B, 4)).all_pairs_visible);
    CHECK(visibility_report(build_family(FamilyKind::B, 5)).all_pairs_visible);
}

TEST_CASE("visibility report matches pairwise oracle") {
    for (std::int64_t d : {3, 4, 5, 6, 8}) {
        auto b = build_family(FamilyKind::B, d);
        CHECK(visibility_report(b).all_pairs_visible == all_visible(b.points()));
    }
}

TEST_CASE("distance reports match materialized-point oracle") {
    auto check_report = [](const FamilyReport& r, const PlainStats& s) {
        CHECK(r.distance_min == doctest::Approx(s.min));
        CHECK(r.distance_max == doctest::Approx(s.max));
        CHECK(r.distance_mean == doctest::Approx(s.sum / static_cast<double>(s.n)));
    };
    for (std::int64_t p : {5, 7, 13}) {
        auto c = build_family(FamilyKind::C, p - 1);
        auto g = build_family(FamilyKind::G, p);
        check_report(distance_report(c), plain_distances(c.points(), c.points(), c.normalizer()));
        check_report(distance_report(g), plain_distances(g.points(), g.points(), g.normalizer()));
        // cross statistics use the p^{3/2} normalizer
        check_report(distance_report(c, g),
                     plain_distances(c.points(), g.points(), g.normalizer()));
    }
    auto b = build_family(FamilyKind::B, 9);
    check_report(distance_report(b), plain_distances(b.points(), b.points(), b.normalizer()));
}

TEST_CASE("named distance values") {
    auto c = distance_report(build_family(FamilyKind::C, 2));
    CHECK(c.distance_min == doctest::Approx(0.866025).epsilon(1e-5));
    CHECK(c.distance_max == doctest::Approx(0.866025).epsilon(1e-5));

    auto g5 = build_family(FamilyKind::G, 5);
    double d01 = std::sqrt(static_cast<double>(distance_sq(g5.point(0), g5.point(1)))) /
                 g5.normalizer();
    CHECK(d01 == doctest::Approx(0.456070).epsilon(1e-5));

    auto b100 = build_family(FamilyKind::B, 100);
    double d_10_30 = std::sqrt(static_cast<double>(distance_sq(b100.point(10), b100.point(30)))) /
                     b100.normalizer();
    CHECK(std::abs(d_10_30 - 0.2) <= 5.0 / 100.0);
}

TEST_CASE("spectrum reports match materialized-point oracle") {
    for (std::int64_t p : {5, 11}) {
        auto c = build_family(FamilyKind::C, p - 1);
        auto g = build_family(FamilyKind::G, p);
        auto fast = spectrum_report(c);
        auto slow = spectrum(c.points(), c.points());
        CHECK(fast.count == slow.count);
        CHECK(fast.min_sin == doctest::Approx(slow.min_sin));
        CHECK(fast.max_sin == doctest::Approx(slow.max_sin));
        CHECK(fast.mean_sin == doctest::Approx(slow.mean_sin));
        auto cross_fast = spectrum_report(c, g);
        auto cross_slow = spectrum(c.points(), g.points());
        CHECK(cross_fast.count == cross_slow.count);
        CHECK(cross_fast.mean_sin == doctest::Approx(cross_slow.mean_sin));
    }
    auto c2 = spectrum_report(build_family(FamilyKind::C, 2));
    CHECK(c2.min_sin == doctest::Approx(0.916515).epsilon(1e-5));
    CHECK(c2.max_sin == doctest::Approx(0.916515).epsilon(1e-5));
}

TEST_CASE("average normalized distance over C union G") {
    // exact accumulation vs direct double-loop summation
    for (std::int64_t p : {5, 13}) {
        auto c = build_family(FamilyKind::C, p - 1);
        auto g = build_family(FamilyKind::G, p);
        std::vector<Point> all = c.points();
        for (auto& pt : g.points()) all.push_back(pt);
        double t = 0;
        for (const auto& x : all)
            for (const auto& y : all) t += static_cast<double>(distance_sq(x, y));
        double direct = std::sqrt(t / static_cast<double>(all.size() * all.size())) /
                        std::pow(static_cast<double>(p), 1.5);
        CHECK(avg_norm_distance_CG(p) == doctest::Approx(direct));
    }
}

TEST_CASE("inverse gap counts") {
    CHECK(inverse_gap_count(5) == 2);
    CHECK(inverse_gap_count(11) == 3);
    CHECK(inverse_gap_count(13) == 4);
    // against a direct set-based oracle
    for (std::int64_t p : {2, 3, 7, 17, 101, 499}) {
        std::set<std::int64_t> gaps;
        for (std::int64_t a = 1; a < p; ++a) gaps.insert(std::llabs(a - inverse_mod(a, p)));
        CHECK(inverse_gap_count(p) == static_cast<std::int64_t>(gaps.size()));
        CHECK(inverse_gap_count(p) == p / 4 + 1);
    }
}

TEST_CASE("inverse increment square sums") {
    CHECK(inverse_increment_sqsum(5, 1) == 9);
    CHECK(inverse_increment_sqsum(7, 1) == 29);
    for (std::int64_t p : {5, 7, 11, 13}) {
        for (std::int64_t h = 1; h < p; ++h) {
            BigInt direct = 0;
            for (std::int64_t x = 0; x < p; ++x) {
                if (x == 0 || x == p - h) continue;
                std::int64_t diff = inverse_mod((x + h) % p, p) - inverse_mod(x, p);
                direct += BigInt(diff) * diff;
            }
            CHECK(inverse_increment_sqsum(p, h) == direct);
        }
    }
    CHECK_THROWS_AS(inverse_increment_sqsum(7, 0), UsageError);
    CHECK_THROWS_AS(inverse_increment_sqsum(7, 7), UsageError);
}

TEST_CASE("inverse pair counts in progressions") {
    ArithProgression full{1, 1, 6}, evens{2, 2, 3}, one{1, 1, 1};
    CHECK(inverse_pair_count_in_boxes(7, full, full) == 6);
    CHECK(inverse_pair_count_in_boxes(7, evens, evens) == 3);
    CHECK(inverse_pair_count_in_boxes(5, one, one) == 1);
    // brute-force cross check
    for (std::int64_t p : {11, 13}) {
        ArithProgression i{2, 3, 3}, j{1, 2, 5};
        std::int64_t direct = 0;
        for (std::int64_t a = 1; a < p; ++a)
            for (std::int64_t b = 1; b < p; ++b)
                if (a * b % p == 1 && i.contains(a) && j.contains(b)) ++direct;
        CHECK(inverse_pair_count_in_boxes(p, i, j) == direct);
    }
}

TEST_CASE("origin distances approach their limits") {
    for (std::int64_t p : {101, 997}) {
        std::int64_t d = p - 1;
        auto c = build_family(FamilyKind::C, d);
        auto g = build_family(FamilyKind::G, p);
        for (const auto& f : {c, g}) {
            auto r = distance_report(f);
            for (double dist : r.origin_distances)
                CHECK(std::abs(dist - 1.0 / std::sqrt(3.0)) <= 0.51 / static_cast<double>(d));
        }
    }
}
