#include "hypervis/euler_products.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hypervis {

std::vector<std::int64_t> primes_up_to(std::int64_t m) {
    if (m < 0) throw UsageError("primes_up_to: M must be >= 0");
    std::vector<std::int64_t> primes;
    if (m < 2) return primes;

    // Segmented sieve of Eratosthenes.
    const std::int64_t segment_size = 1 << 16;
    std::int64_t sqrt_m = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
    while ((sqrt_m + 1) * (sqrt_m + 1) <= m) ++sqrt_m;

    std::vector<char> small(static_cast<std::size_t>(sqrt_m) + 1, 1);
    std::vector<std::int64_t> base;
    for (std::int64_t i = 2; i <= sqrt_m; ++i) {
        if (!small[static_cast<std::size_t>(i)]) continue;
        base.push_back(i);
        for (std::int64_t j = i * i; j <= sqrt_m; j += i)
            small[static_cast<std::size_t>(j)] = 0;
    }

    std::vector<char> sieve(static_cast<std::size_t>(segment_size));
    for (std::int64_t low = 2; low <= m; low += segment_size) {
        std::int64_t high = std::min(low + segment_size - 1, m);
        std::fill(sieve.begin(), sieve.end(), 1);
        for (std::int64_t p : base) {
            std::int64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (std::int64_t j = start; j <= high; j += p)
                sieve[static_cast<std::size_t>(j - low)] = 0;
        }
        for (std::int64_t i = low; i <= high; ++i)
            if (sieve[static_cast<std::size_t>(i - low)]) primes.push_back(i);
    }
    return primes;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1;
    a %= mod;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, mod);
        a = mulmod_u64(a, a, mod);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Primorial primorial(std::int64_t m) {
    Primorial b;
    b.m = m;
    for (std::int64_t p : primes_up_to(m)) b.value *= p;
    return b;
}

Primorial largest_primorial_below(const BigInt& bound) {
    if (bound < 2) throw UsageError("largest_primorial_below: bound must be >= 2");
    Primorial b;
    b.m = 1;
    for (std::int64_t p = 2;; ++p) {
        if (!is_prime_u64(static_cast<std::uint64_t>(p))) continue;
        if (b.value * p > bound) break;
        b.value *= p;
        b.m = p;
    }
    return b;
}

double zeta(int d, double tol) {
    if (d < 2) throw UsageError("zeta: series diverges for d < 2");
    if (!(tol > 0)) throw UsageError("zeta: tol must be positive");
    // The tail sum_{m>M} m^-d is replaced by its midpoint-rule value
    // (M+1/2)^(1-d)/(d-1); the leftover error is at most (d/24)(M-1/2)^(-d-1).
    double m_needed = std::pow(d / (24.0 * tol), 1.0 / (d + 1)) + 0.5;
    std::int64_t m = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(m_needed)));
    long double sum = 0.0L;
    for (std::int64_t i = m; i >= 1; --i)
        sum += std::pow(static_cast<long double>(i), static_cast<long double>(-d));
    sum += std::pow(static_cast<long double>(m) + 0.5L, static_cast<long double>(1 - d)) / (d - 1);
    return static_cast<double>(sum);
}

BigInt h_p(std::int64_t p, int d, int k) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw UsageError("h_p: p must be prime");
    if (d < 1) throw UsageError("h_p: d must be >= 1");
    if (k < 1) throw UsageError("h_p: K must be >= 1");
    BigInt pd = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d));
    if (pd <= k - 1) return 0;
    BigInt prod = 1;
    for (int i = 0; i < k; ++i) prod *= pd - i;
    return prod;
}

namespace {

// Number of primes up to which the truncated product stays exact-rational;
// beyond it the rational grows too large and a long double pass is used
// (its rounding is orders of magnitude below any certified tail).
constexpr std::int64_t kRationalCutoff = 20'000;

long double lambda_factor(std::int64_t p, int d, int k) {
    long double pd = std::pow(static_cast<long double>(p), static_cast<long double>(d));
    long double f = 1.0L;
    for (int i = 1; i < k; ++i) f *= 1.0L - static_cast<long double>(i) / pd;
    return f;
}

} // namespace

double truncated_lambda(int d, int k, std::int64_t m) {
    if (d < 2) throw UsageError("truncated_lambda: d must be >= 2");
    if (k < 2) throw UsageError("truncated_lambda: K must be >= 2");
    if (m < 0) throw UsageError("truncated_lambda: M must be >= 0");
    auto primes = primes_up_to(m);
    if (m <= kRationalCutoff) {
        BigRat prod = 1;
        for (std::int64_t p : primes) {
            BigInt pd = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d));
            for (int i = 1; i < k; ++i) prod *= BigRat(pd - i, pd);
        }
        return static_cast<double>(prod);
    }
    long double prod = 1.0L;
    for (std::int64_t p : primes) prod *= lambda_factor(p, d, k);
    return static_cast<double>(prod);
}

EulerProductValue lambda_dk(int d, int k, double tol, std::int64_t sieve_budget) {
    if (d < 2) throw UsageError("lambda_dk: d must be >= 2");
    if (k < 2) throw UsageError("lambda_dk: K must be >= 2");
    if (!(tol > 0)) throw UsageError("lambda_dk: tol must be positive");

    EulerProductValue out;
    out.d = d;
    out.k = k;

    // The p = 2 factor vanishes once K-1 >= 2^d, and the product with it.
    if (boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(d)) <= k - 1) {
        out.truncation_m = 2;
        return out;
    }

    // Tail: sum_{p>M} sum_{i<K} i/(p^d - i) <= K(K-1) M^(1-d)/(d-1),
    // valid once p^d >= 2K for all p > M.
    double kk = static_cast<double>(k) * (k - 1);
    double target = std::log1p(tol);
    double m_needed = std::pow(kk / ((d - 1) * target), 1.0 / (d - 1));
    std::int64_t m = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(m_needed)));
    while (std::pow(static_cast<double>(m + 1), static_cast<double>(d)) < 2.0 * k) ++m;
    if (m > sieve_budget) {
        double achievable = std::expm1(kk * std::pow(static_cast<double>(sieve_budget), 1.0 - d) / (d - 1));
        throw BudgetError("lambda_dk: tolerance needs prime bound " + std::to_string(m) +
                          " beyond sieve budget " + std::to_string(sieve_budget) +
                          "; achievable tolerance is " + std::to_string(achievable));
    }

    long double prod = 1.0L;
    for (std::int64_t p : primes_up_to(m)) prod *= lambda_factor(p, d, k);
    out.value = static_cast<double>(prod);
    out.truncation_m = m;
    out.tail_bound = std::expm1(kk * std::pow(static_cast<double>(m), 1.0 - d) / (d - 1));
    return out;
}

double feller_tornier_truncated(std::int64_t m, double zeta2) {
    long double prod = 1.0L;
    for (std::int64_t p : primes_up_to(m))
        prod *= 1.0L - 1.0L / (static_cast<long double>(p) * p - 1.0L);
    return static_cast<double>(0.5L * (1.0L + prod / zeta2));
}

double feller_tornier(double tol, std::int64_t sieve_budget) {
    if (!(tol > 0)) throw UsageError("feller_tornier: tol must be positive");
    // |log tail| <= sum_{m>M} 1/(m^2 - 2) <= 1/(M-1).
    std::int64_t m = std::max<std::int64_t>(3, static_cast<std::int64_t>(std::ceil(1.0 / std::log1p(tol))) + 1);
    if (m > sieve_budget)
        throw BudgetError("feller_tornier: tolerance needs prime bound " + std::to_string(m) +
                          " beyond sieve budget " + std::to_string(sieve_budget));
    double z2 = zeta(2, tol / 4.0);
    return feller_tornier_truncated(m, z2);
}

} // namespace hypervis
