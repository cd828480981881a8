#ifndef HYPERVIS_LATTICE_HPP
#define HYPERVIS_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "hypervis/errors.hpp"

namespace hypervis {

using Coord = std::int64_t;
using Point = std::vector<Coord>;

/// The ambient cube [0,N]^d.
struct LatticeParams {
    int d = 1;
    std::int64_t n = 1;

    void validate() const {
        if (d < 1) throw UsageError("LatticeParams: d must be >= 1");
        if (n < 1) throw UsageError("LatticeParams: N must be >= 1");
    }
    bool contains(const Point& p) const;
};

/// Summary of the sines of angles between distinct rays from the origin.
struct SpectrumSummary {
    std::uint64_t count = 0;
    double min_sin = 0.0;
    double max_sin = 0.0;
    double mean_sin = 0.0;
    std::vector<std::uint64_t> histogram; // fixed-width bins over [0,1]
};

inline constexpr int kDefaultSpectrumBins = 256;

/// gcd of the absolute coordinate differences; 0 for the all-zero vector.
std::uint64_t visibility_gcd(const Point& v, const Point& w);

/// True iff no lattice point lies strictly between v and w.
/// Equal points are never visible (their difference gcd is 0).
bool is_visible(const Point& v, const Point& w);

/// Exact squared Euclidean distance.
std::int64_t distance_sq(const Point& v, const Point& w);

/// Euclidean distance divided by N*sqrt(d); lies in [0,1] for in-cube points.
double normalized_distance(const LatticeParams& params, const Point& v, const Point& w);

/// Sine of the angle between the rays from the origin through v and w.
/// Both must be nonzero. The cosine is clamped into [-1,1] before use.
double sin_between(const Point& v, const Point& w);

/// Streaming accumulator so pairwise reports never materialize all sines.
class SpectrumAccumulator {
public:
    explicit SpectrumAccumulator(int bins = kDefaultSpectrumBins);
    void add(double s, std::uint64_t weight = 1);
    void merge(const SpectrumAccumulator& other);
    SpectrumSummary summary() const;

private:
    std::uint64_t count_ = 0;
    double min_ = 2.0;
    double max_ = -1.0;
    double sum_ = 0.0;
    std::vector<std::uint64_t> hist_;
};

/// Spectrum over all ordered pairs (a,b), a in A, b in B, a != b as points.
/// Throws if any point is the origin. Empty inputs give a count-0 summary.
SpectrumSummary spectrum(const std::vector<Point>& a, const std::vector<Point>& b,
                         int bins = kDefaultSpectrumBins);

} // namespace hypervis

#endif
