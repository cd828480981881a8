#ifndef HYPERVIS_POLYTOPES_HPP
#define HYPERVIS_POLYTOPES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hypervis/bigint.hpp"
#include "hypervis/lattice.hpp"

namespace hypervis {

enum class FamilyKind { C, G, B };

/// One of the three distinguished point families. C and G are circulant
/// (every row is a left rotation of row 0), so only row 0 is stored and
/// coordinates are produced on demand; B is generated from its index rule.
class PolytopeFamily {
public:
    static PolytopeFamily build(FamilyKind kind, std::int64_t param);

    FamilyKind kind() const { return kind_; }
    std::int64_t param() const { return param_; }
    std::int64_t size() const { return n_; }      // number of points
    std::int64_t dim() const { return n_; }       // coordinates per point
    bool circulant() const { return kind_ != FamilyKind::B; }

    Coord coord(std::int64_t row, std::int64_t col) const;
    Point point(std::int64_t row) const;
    std::vector<Point> points() const;

    /// Divisor for normalized distances: d^(3/2) for C and B, p^(3/2) for G.
    double normalizer() const;

private:
    FamilyKind kind_;
    std::int64_t param_;
    std::int64_t n_;
    std::vector<Coord> row0_; // C and G only
};

struct FamilyReport {
    bool all_pairs_visible = true;
    std::vector<std::pair<std::int64_t, std::int64_t>> failing_pairs; // capped
    std::uint64_t failing_total = 0;
    std::vector<bool> origin_visible;
    double distance_min = 0.0;
    double distance_max = 0.0;
    double distance_mean = 0.0;
    std::vector<double> origin_distances; // normalized, per point
    SpectrumSummary spectrum;
};

inline constexpr std::size_t kFailingPairsCap = 100;

/// Modular inverse with the family-G convention that 0 maps to 0.
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

/// Table of inverse_mod(a, p) for a = 0..p-1, built in O(p).
std::vector<Coord> inverse_table(std::int64_t p);

PolytopeFamily build_family(FamilyKind kind, std::int64_t param);

/// Exhaustive pairwise visibility inside f, or over the union of f and g.
FamilyReport visibility_report(const PolytopeFamily& f,
                               const std::optional<PolytopeFamily>& g = std::nullopt);

/// Pairwise normalized distance statistics inside f, or across f x g.
FamilyReport distance_report(const PolytopeFamily& f,
                             const std::optional<PolytopeFamily>& g = std::nullopt);

/// Spectrum of f, or the cross spectrum spec(f, g).
SpectrumSummary spectrum_report(const PolytopeFamily& f,
                                const std::optional<PolytopeFamily>& g = std::nullopt,
                                int bins = kDefaultSpectrumBins);

/// Squared distances from row 0 to every row of a circulant family.
std::vector<std::int64_t> circulant_dist_sq_profile(const PolytopeFamily& f);

/// Average of all normalized distances over C union G at d = p-1, from the
/// exact integer sum of squared distances over all 4p^2 ordered pairs.
double avg_norm_distance_CG(std::int64_t p);

/// Number of distinct values |n - n^{-1}| for 1 <= n <= p-1.
std::int64_t inverse_gap_count(std::int64_t p);

/// Exact sum of |(x+h)^{-1} - x^{-1}|^2 over x in F_p minus {0, p-h}.
BigInt inverse_increment_sqsum(std::int64_t p, std::int64_t h);

struct ArithProgression {
    std::int64_t start = 0;
    std::int64_t step = 1;
    std::int64_t count = 0;

    bool contains(std::int64_t x) const {
        if (step < 1 || count < 1) return false;
        if (x < start) return false;
        std::int64_t off = x - start;
        return off % step == 0 && off / step < count;
    }
    std::int64_t last() const { return start + step * (count - 1); }
};

/// Exact count of (a,b) in I x J with ab = 1 (mod p).
std::int64_t inverse_pair_count_in_boxes(std::int64_t p, const ArithProgression& i,
                                         const ArithProgression& j);

} // namespace hypervis

#endif
