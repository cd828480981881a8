#ifndef HYPERVIS_SAMPLING_HPP
#define HYPERVIS_SAMPLING_HPP

#include <cstdint>

#include "hypervis/lattice.hpp"
#include "hypervis/rng.hpp"

namespace hypervis {

/// Seeded Monte Carlo summary. `samples` counts draws; draws that fail the
/// visibility (or nonzero-ray) condition are discarded and counted in
/// `rejected`, so window fractions and moments are conditional on acceptance.
struct SampleReport {
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    int d = 0;
    std::int64_t n = 0;
    int k = 0;
    double window_center = 0.0;
    double window_halfwidth = 0.0;
    double fraction_in_window = 0.0;
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t rejected = 0;
    std::uint64_t accepted = 0;
    double acceptance_rate = 0.0;
    double acceptance_std_error = 0.0;
    double mean_dist = 0.0; // continuous baseline only
};

/// One uniform draw from the lattice [0,N]^d, deterministic per stream.
Point sample_point(const LatticeParams& params, rng::Stream& stream);

/// Normalized distance between sampled visible pairs, window around 1/sqrt(6).
SampleReport pair_distance_experiment(int d, std::int64_t n, std::uint64_t samples,
                                      double halfwidth, std::uint64_t seed, int threads = 0);

/// Sine of the origin-ray angle of sampled visible pairs, window around sqrt(7)/4.
SampleReport pair_angle_experiment(int d, std::int64_t n, std::uint64_t samples,
                                   double halfwidth, std::uint64_t seed, int threads = 0);

/// Self-visible K-tuples: fraction whose worst pairwise normalized distance
/// stays within halfwidth of 1/sqrt(6), plus the acceptance-rate estimate of
/// the self-visibility probability.
SampleReport polytope_experiment(int d, std::int64_t n, int k, std::uint64_t samples,
                                 double halfwidth, std::uint64_t seed, int threads = 0);

/// Continuous [0,1]^d baseline: mean of the squared normalized distance
/// (in `mean`) and of the distance itself (in `mean_dist`).
SampleReport continuous_baseline(int d, std::uint64_t samples, std::uint64_t seed,
                                 int threads = 0);

} // namespace hypervis

#endif
