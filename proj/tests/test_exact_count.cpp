#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "hypervis/exact_count.hpp"

using namespace hypervis;

namespace {

// Independent enumeration over all ordered pairs of [0,N]^d, d fixed small.
struct PairOracle {
    BigInt count = 0;
    BigInt sum_sq = 0;
    BigInt sum_quartic = 0;
};

void enum_points(int d, std::int64_t n, Point& cur, std::vector<Point>& out) {
    if (static_cast<int>(cur.size()) == d) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t c = 0; c <= n; ++c) {
        cur.push_back(c);
        enum_points(d, n, cur, out);
        cur.pop_back();
    }
}

PairOracle pair_oracle(int d, std::int64_t n) {
    std::vector<Point> pts;
    Point cur;
    enum_points(d, n, cur, pts);
    PairOracle r;
    for (const auto& v : pts)
        for (const auto& w : pts) {
            if (!is_visible(v, w)) continue;
            r.count += 1;
            BigInt ds = distance_sq(v, w);
            r.sum_sq += ds;
            r.sum_quartic += ds * ds;
        }
    return r;
}

std::int8_t mu_oracle(std::int64_t m) {
    int factors = 0;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;
        ++factors;
    }
    if (m > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

} // namespace

TEST_CASE("mobius table matches direct factorization") {
    auto t = mobius_table(200);
    REQUIRE(t.limit == 200);
    CHECK(t.mu(1) == 1);
    CHECK(t.mu(2) == -1);
    CHECK(t.mu(4) == 0);
    CHECK(t.mu(6) == 1);
    CHECK(t.mu(30) == -1);
    for (std::int64_t m = 1; m <= 200; ++m) CHECK(t.mu(m) == mu_oracle(m));
}

TEST_CASE("pair_moment_mod matches enumeration of b-divisible differences") {
    for (std::int64_t n : {1, 2, 3, 5, 8}) {
        for (std::int64_t b = 1; b <= n + 1; ++b) {
            BigInt c0 = 0, c2 = 0, c4 = 0;
            for (std::int64_t v = 0; v <= n; ++v)
                for (std::int64_t w = 0; w <= n; ++w) {
                    if ((v - w) % b != 0) continue;
                    BigInt diff2 = BigInt(v - w) * (v - w);
                    c0 += 1;
                    c2 += diff2;
                    c4 += diff2 * diff2;
                }
            CHECK(pair_moment_mod(n, b, 0) == c0);
            CHECK(pair_moment_mod(n, b, 2) == c2);
            CHECK(pair_moment_mod(n, b, 4) == c4);
        }
    }
}

TEST_CASE("golden counts at tiny sizes") {
    CHECK(count_visible_exact({2, 1}) == 12);
    CHECK(count_visible_exact({3, 1}) == 56);
    CHECK(count_visible_exact({2, 2}) == 56);
    auto r = visible_distance_moments({2, 2});
    CHECK(r.omega_count == 56);
    CHECK(r.a_vis == BigRat(17, 7));
    CHECK(r.m2_vis == BigRat(138, 49));
}

TEST_CASE("count_visible_exact matches enumeration oracle") {
    for (int d : {2, 3}) {
        for (std::int64_t n = 1; n <= (d == 2 ? 10 : 4); ++n) {
            auto oracle = pair_oracle(d, n);
            CHECK(count_visible_exact({d, n}) == oracle.count);
        }
    }
    // d = 1: visible means adjacent, so 2N ordered pairs
    for (std::int64_t n = 1; n <= 6; ++n) CHECK(count_visible_exact({1, n}) == 2 * n);
}

TEST_CASE("moments match enumeration oracle exactly") {
    for (int d : {2, 3}) {
        for (std::int64_t n = 1; n <= (d == 2 ? 8 : 3); ++n) {
            auto oracle = pair_oracle(d, n);
            auto r = visible_distance_moments({d, n});
            CHECK(r.omega_count == oracle.count);
            CHECK(r.sum_sq == oracle.sum_sq);
            CHECK(r.sum_quartic == oracle.sum_quartic);
            CHECK(r.a_vis == BigRat(oracle.sum_sq, oracle.count));
            // second central moment of the squared distance
            BigRat ex2(oracle.sum_quartic, oracle.count);
            BigRat ex(oracle.sum_sq, oracle.count);
            CHECK(r.m2_vis == ex2 - ex * ex);
        }
    }
}

TEST_CASE("omega_count is monotone in N and bounded by all pairs") {
    BigInt prev = 0;
    for (std::int64_t n = 1; n <= 30; ++n) {
        BigInt c = count_visible_exact({2, n});
        CHECK(c > prev);
        BigInt all = BigInt(n + 1) * (n + 1);
        CHECK(c < all * all);
        prev = c;
    }
}

TEST_CASE("brute_force_reference agrees with the exact count at K = 2") {
    for (int d : {2, 3}) {
        for (std::int64_t n = 1; n <= 3; ++n) {
            auto bf = brute_force_reference({d, n}, 2);
            auto r = visible_distance_moments({d, n});
            CHECK(bf.tuple_count == r.omega_count);
            CHECK(bf.sum_sq == r.sum_sq);
            CHECK(bf.sum_quartic == r.sum_quartic);
            CHECK(bf.total_tuples ==
                  boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(2 * d)));
        }
    }
}

TEST_CASE("brute_force_reference at K = 3 matches direct triple enumeration") {
    auto bf = brute_force_reference({2, 1}, 3);
    CHECK(bf.tuple_count == 24);
    CHECK(bf.total_tuples == 64);

    std::vector<Point> pts;
    Point cur;
    enum_points(2, 2, cur, pts);
    BigInt triples = 0;
    for (const auto& a : pts)
        for (const auto& b : pts)
            for (const auto& c : pts)
                if (is_visible(a, b) && is_visible(a, c) && is_visible(b, c)) triples += 1;
    CHECK(brute_force_reference({2, 2}, 3).tuple_count == triples);
}

TEST_CASE("brute_force_reference refuses oversized enumerations") {
    CHECK_THROWS_AS(brute_force_reference({2, 100}, 2, 1000), BudgetError);
    CHECK_THROWS_AS(brute_force_reference({3, 1000}, 4), BudgetError);
}
