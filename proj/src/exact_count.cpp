#include "hypervis/exact_count.hpp"

#include <cmath>

namespace hypervis {

MobiusTable mobius_table(std::int64_t limit) {
    if (limit < 1) throw UsageError("mobius_table: limit must be >= 1");
    MobiusTable t;
    t.limit = limit;
    t.values.assign(static_cast<std::size_t>(limit), 0);
    // linear sieve
    std::vector<std::int64_t> primes;
    std::vector<std::int8_t>& mu = t.values;
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    mu[0] = 1; // mu(1)
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            mu[static_cast<std::size_t>(i - 1)] = -1;
        }
        for (std::int64_t p : primes) {
            if (p * i > limit) break;
            composite[static_cast<std::size_t>(p * i)] = 1;
            if (i % p == 0) {
                mu[static_cast<std::size_t>(p * i - 1)] = 0;
                break;
            }
            mu[static_cast<std::size_t>(p * i - 1)] =
                static_cast<std::int8_t>(-mu[static_cast<std::size_t>(i - 1)]);
        }
    }
    return t;
}

namespace {

// Power sums S_r(M) = 1^r + ... + M^r.
BigInt s1(std::int64_t m) { return BigInt(m) * (m + 1) / 2; }
BigInt s2(std::int64_t m) { return BigInt(m) * (m + 1) * (2 * m + 1) / 6; }
BigInt s3(std::int64_t m) { BigInt t = s1(m); return t * t; }
BigInt s4(std::int64_t m) {
    return BigInt(m) * (m + 1) * (2 * m + 1) * (BigInt(3) * m * m + 3 * m - 1) / 30;
}

// Sum of (m-n)^order over the grid {0..M}^2.
BigInt grid_moment(std::int64_t m, int order) {
    switch (order) {
    case 0: return BigInt(m + 1) * (m + 1);
    case 2: return 2 * (m + 1) * s2(m) - 2 * s1(m) * s1(m);
    case 4: return 2 * (m + 1) * s4(m) - 8 * s1(m) * s3(m) + 6 * s2(m) * s2(m);
    default: throw UsageError("pair_moment_mod: order must be 0, 2 or 4");
    }
}

} // namespace

BigInt pair_moment_mod(std::int64_t n, std::int64_t b, int order) {
    if (n < 1) throw UsageError("pair_moment_mod: N must be >= 1");
    if (b < 1 || b > n + 1) throw UsageError("pair_moment_mod: need 1 <= b <= N+1");
    if (order != 0 && order != 2 && order != 4)
        throw UsageError("pair_moment_mod: order must be 0, 2 or 4");
    // Residue classes r = 0..b-1 split into two groups: M = floor((N-r)/b)
    // is q for r <= N mod b, and q-1 otherwise.
    std::int64_t q = n / b, s = n % b;
    BigInt total = (s + 1) * grid_moment(q, order);
    if (b - 1 - s > 0) total += BigInt(b - 1 - s) * grid_moment(q - 1, order);
    if (order == 2) total *= BigInt(b) * b;
    if (order == 4) total *= BigInt(b) * b * b * b;
    return total;
}

BigInt count_visible_exact(const LatticeParams& params) {
    params.validate();
    const std::int64_t n = params.n;
    MobiusTable mu = mobius_table(n);
    BigInt omega = 0;
    std::int64_t mertens = 0;
    for (std::int64_t b = 1; b <= n; ++b) {
        int m = mu.mu(b);
        mertens += m;
        if (m == 0) continue;
        BigInt h = pair_moment_mod(n, b, 0);
        omega += m * boost::multiprecision::pow(h, static_cast<unsigned>(params.d));
    }
    // The Moebius indicator sums to Mertens(N), not 0, on the diagonal v = w
    // (all moduli divide the zero difference vector), so those pairs are
    // counted with weight Mertens(N) and must be removed.
    BigInt diag = boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(params.d));
    omega -= mertens * diag;
    return omega;
}

ExactCountReport visible_distance_moments(const LatticeParams& params) {
    params.validate();
    if (params.d < 2)
        throw UsageError("visible_distance_moments: d must be >= 2");
    const std::int64_t n = params.n;
    const unsigned d = static_cast<unsigned>(params.d);
    MobiusTable mu = mobius_table(n);

    ExactCountReport rep;
    rep.params = params;
    std::int64_t mertens = 0;
    for (std::int64_t b = 1; b <= n; ++b) {
        int m = mu.mu(b);
        mertens += m;
        if (m == 0) continue;
        BigInt h = pair_moment_mod(n, b, 0);
        BigInt p2 = pair_moment_mod(n, b, 2);
        BigInt p4 = pair_moment_mod(n, b, 4);
        BigInt h_dm1 = boost::multiprecision::pow(h, d - 1);
        BigInt h_dm2 = boost::multiprecision::pow(h, d - 2);
        rep.omega_count += m * h_dm1 * h;
        rep.sum_sq += m * BigInt(params.d) * p2 * h_dm1;
        rep.sum_quartic +=
            m * (BigInt(params.d) * p4 * h_dm1 +
                 BigInt(params.d) * (params.d - 1) * p2 * p2 * h_dm2);
    }
    // Diagonal correction (zero distance, so only the count needs it).
    BigInt diag = boost::multiprecision::pow(BigInt(n + 1), d);
    rep.omega_count -= mertens * diag;

    rep.a_vis = BigRat(rep.sum_sq, rep.omega_count);
    rep.m2_vis = BigRat(rep.sum_quartic, rep.omega_count) - rep.a_vis * rep.a_vis;
    return rep;
}

namespace {

Point decode_point(std::uint64_t index, int d, std::int64_t n) {
    Point p(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        p[static_cast<std::size_t>(i)] = static_cast<Coord>(index % static_cast<std::uint64_t>(n + 1));
        index /= static_cast<std::uint64_t>(n + 1);
    }
    return p;
}

void enumerate_tuples(const std::vector<Point>& points, int k, std::size_t next,
                      std::vector<std::size_t>& chosen, BigInt& count) {
    if (static_cast<int>(chosen.size()) == k) {
        count += 1;
        return;
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool ok = true;
        for (std::size_t j : chosen)
            if (!is_visible(points[j], points[i])) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(i);
        enumerate_tuples(points, k, next, chosen, count);
        chosen.pop_back();
    }
}

} // namespace

BruteForceResult brute_force_reference(const LatticeParams& params, int k,
                                       std::uint64_t enum_budget) {
    params.validate();
    if (k < 2) throw UsageError("brute_force_reference: K must be >= 2");
    long double tuples = std::pow(static_cast<long double>(params.n + 1),
                                  static_cast<long double>(params.d * k));
    if (tuples > static_cast<long double>(enum_budget))
        throw BudgetError("brute_force_reference: (N+1)^(d*K) exceeds enumeration budget of " +
                          std::to_string(enum_budget));

    std::uint64_t npoints = 1;
    for (int i = 0; i < params.d; ++i) npoints *= static_cast<std::uint64_t>(params.n + 1);
    std::vector<Point> points;
    points.reserve(npoints);
    for (std::uint64_t i = 0; i < npoints; ++i)
        points.push_back(decode_point(i, params.d, params.n));

    BruteForceResult res;
    res.total_tuples = boost::multiprecision::pow(BigInt(npoints), static_cast<unsigned>(k));
    if (k == 2) {
        for (const auto& v : points)
            for (const auto& w : points) {
                if (!is_visible(v, w)) continue;
                res.tuple_count += 1;
                BigInt dsq = distance_sq(v, w);
                res.sum_sq += dsq;
                res.sum_quartic += dsq * dsq;
            }
    } else {
        std::vector<std::size_t> chosen;
        enumerate_tuples(points, k, 0, chosen, res.tuple_count);
    }
    return res;
}

} // namespace hypervis
