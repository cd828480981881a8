#ifndef HYPERVIS_EULER_PRODUCTS_HPP
#define HYPERVIS_EULER_PRODUCTS_HPP

#include <cstdint>
#include <vector>

#include "hypervis/bigint.hpp"
#include "hypervis/errors.hpp"

namespace hypervis {

/// A truncated or completed Euler product with a certified tail bound.
struct EulerProductValue {
    double value = 0.0;
    std::int64_t truncation_m = 0; // largest prime bound used
    double tail_bound = 0.0;       // certified bound on the relative error
    int d = 0;
    int k = 0;
};

struct Primorial {
    std::int64_t m = 0;
    BigInt value = 1;
};

inline constexpr std::int64_t kDefaultSieveBudget = 100'000'000;

std::vector<std::int64_t> primes_up_to(std::int64_t m);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

Primorial primorial(std::int64_t m);

/// Largest primorial that is <= bound, with its prime cutoff.
Primorial largest_primorial_below(const BigInt& bound);

/// Riemann zeta via the direct series with an integral tail bound.
double zeta(int d, double tol);

/// H(p) = p^d (p^d - 1) ... (p^d - (K-1)): the number of K-tuples of
/// pairwise distinct residue vectors mod p.
BigInt h_p(std::int64_t p, int d, int k);

/// prod_{p <= M} prod_{k=1}^{K-1} (1 - k/p^d), no tail control.
double truncated_lambda(int d, int k, std::int64_t m);

/// The self-visibility constant Lambda_{d,K}, certified within tol.
EulerProductValue lambda_dk(int d, int k, double tol,
                            std::int64_t sieve_budget = kDefaultSieveBudget);

/// Feller-Tornier constant (1/2)(1 + zeta(2)^-1 prod_p (1 - 1/(p^2-1))),
/// certified within tol. truncation_m = 1 gives the empty-product value.
double feller_tornier(double tol, std::int64_t sieve_budget = kDefaultSieveBudget);

/// One truncated Feller-Tornier step, exposed for the empty-product check.
double feller_tornier_truncated(std::int64_t m, double zeta2);

} // namespace hypervis

#endif
