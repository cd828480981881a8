#include "hypervis/polytopes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hypervis/euler_products.hpp"

namespace hypervis {

namespace {

void require_prime(std::int64_t p, const char* who) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw UsageError(std::string(who) + ": p must be prime");
}

} // namespace

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    require_prime(p, "inverse_mod");
    if (a < 0 || a >= p) throw UsageError("inverse_mod: need 0 <= a < p");
    if (a == 0) return 0; // stated convention
    std::int64_t r = 1;
    std::int64_t base = a, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * base % p);
        base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
        e >>= 1;
    }
    return r;
}

std::vector<Coord> inverse_table(std::int64_t p) {
    require_prime(p, "inverse_table");
    std::vector<Coord> inv(static_cast<std::size_t>(p), 0);
    if (p > 1) inv[1] = 1;
    for (std::int64_t i = 2; i < p; ++i)
        inv[static_cast<std::size_t>(i)] =
            static_cast<Coord>(p - (p / i) * inv[static_cast<std::size_t>(p % i)] % p);
    return inv;
}

PolytopeFamily PolytopeFamily::build(FamilyKind kind, std::int64_t param) {
    PolytopeFamily f;
    f.kind_ = kind;
    f.param_ = param;
    switch (kind) {
    case FamilyKind::C:
        if (param < 2) throw UsageError("build_family: C needs d >= 2");
        f.n_ = param + 1;
        f.row0_.resize(static_cast<std::size_t>(f.n_));
        std::iota(f.row0_.begin(), f.row0_.end(), Coord{0});
        break;
    case FamilyKind::G:
        require_prime(param, "build_family");
        f.n_ = param;
        f.row0_ = inverse_table(param);
        break;
    case FamilyKind::B:
        if (param < 2) throw UsageError("build_family: B needs d >= 2");
        f.n_ = param + 1;
        break;
    }
    return f;
}

PolytopeFamily build_family(FamilyKind kind, std::int64_t param) {
    return PolytopeFamily::build(kind, param);
}

Coord PolytopeFamily::coord(std::int64_t row, std::int64_t col) const {
    if (kind_ == FamilyKind::B) {
        // b_h is constantly h except just before and after position h,
        // with index and value both wrapping modulo d+1.
        std::int64_t d1 = n_;
        if (col == (row - 1 + d1) % d1) return static_cast<Coord>((row - 1 + d1) % d1);
        if (col == (row + 1) % d1) return static_cast<Coord>((row + 1) % d1);
        return static_cast<Coord>(row);
    }
    return row0_[static_cast<std::size_t>((col + row) % n_)];
}

Point PolytopeFamily::point(std::int64_t row) const {
    Point p(static_cast<std::size_t>(n_));
    for (std::int64_t j = 0; j < n_; ++j) p[static_cast<std::size_t>(j)] = coord(row, j);
    return p;
}

std::vector<Point> PolytopeFamily::points() const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (std::int64_t i = 0; i < n_; ++i) out.push_back(point(i));
    return out;
}

double PolytopeFamily::normalizer() const {
    return std::pow(static_cast<double>(param_), 1.5);
}

namespace {

// Concatenated view over one or two families, for union reports.
struct UnionView {
    const PolytopeFamily* a;
    const PolytopeFamily* b; // may be null

    std::int64_t size() const { return a->size() + (b ? b->size() : 0); }
    const PolytopeFamily& family_of(std::int64_t i, std::int64_t& row) const {
        if (i < a->size()) { row = i; return *a; }
        row = i - a->size();
        return *b;
    }
    Point point(std::int64_t i) const {
        std::int64_t row;
        const PolytopeFamily& f = family_of(i, row);
        return f.point(row);
    }
};

void check_cross_dims(const PolytopeFamily& f, const PolytopeFamily& g) {
    if (f.dim() != g.dim())
        throw UsageError("family dimensions do not match (need d = p-1)");
}

std::uint64_t pair_gcd(const Point& v, const Point& w) { return visibility_gcd(v, w); }

double cross_normalizer(const PolytopeFamily& f, const std::optional<PolytopeFamily>& g) {
    if (g && g->kind() == FamilyKind::G) return g->normalizer();
    if (f.kind() == FamilyKind::G) return f.normalizer();
    return f.normalizer();
}

std::int64_t dist_sq_rows(const Point& v, const Point& w) { return distance_sq(v, w); }

} // namespace

std::vector<std::int64_t> circulant_dist_sq_profile(const PolytopeFamily& f) {
    if (!f.circulant()) throw UsageError("circulant_dist_sq_profile: family is not circulant");
    std::int64_t n = f.size();
    Point r0 = f.point(0);
    std::vector<std::int64_t> profile(static_cast<std::size_t>(n), 0);
    for (std::int64_t h = 1; h < n; ++h)
        profile[static_cast<std::size_t>(h)] = dist_sq_rows(r0, f.point(h));
    return profile;
}

FamilyReport visibility_report(const PolytopeFamily& f, const std::optional<PolytopeFamily>& g) {
    if (g) check_cross_dims(f, *g);
    UnionView view{&f, g ? &*g : nullptr};
    std::int64_t n = view.size();

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) pts.push_back(view.point(i));

    FamilyReport rep;
    Point origin(static_cast<std::size_t>(f.dim()), 0);
    rep.origin_visible.reserve(static_cast<std::size_t>(n));
    for (const auto& p : pts) rep.origin_visible.push_back(is_visible(origin, p));

    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            // the union is a point set, so a row duplicated across the two
            // families is one point, not a failing pair
            if (pts[static_cast<std::size_t>(i)] == pts[static_cast<std::size_t>(j)]) continue;
            if (pair_gcd(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]) == 1)
                continue;
            rep.all_pairs_visible = false;
            ++rep.failing_total;
            if (rep.failing_pairs.size() < kFailingPairsCap)
                rep.failing_pairs.emplace_back(i, j);
        }
    return rep;
}

FamilyReport distance_report(const PolytopeFamily& f, const std::optional<PolytopeFamily>& g) {
    FamilyReport rep;
    double min_d = std::numeric_limits<double>::infinity();
    double max_d = 0.0;
    long double sum = 0.0L;
    std::uint64_t count = 0;

    if (!g) {
        double norm = f.normalizer();
        std::int64_t n = f.size();
        if (f.circulant()) {
            auto profile = circulant_dist_sq_profile(f);
            for (std::int64_t h = 1; h < n; ++h) {
                double d = std::sqrt(static_cast<double>(profile[static_cast<std::size_t>(h)])) / norm;
                min_d = std::min(min_d, d);
                max_d = std::max(max_d, d);
                sum += static_cast<long double>(d) * static_cast<long double>(n);
                count += static_cast<std::uint64_t>(n);
            }
        } else {
            std::vector<Point> pts = f.points();
            for (std::int64_t i = 0; i < n; ++i)
                for (std::int64_t j = i + 1; j < n; ++j) {
                    double d = std::sqrt(static_cast<double>(
                                   dist_sq_rows(pts[static_cast<std::size_t>(i)],
                                                pts[static_cast<std::size_t>(j)]))) / norm;
                    min_d = std::min(min_d, d);
                    max_d = std::max(max_d, d);
                    sum += 2.0L * d;
                    count += 2;
                }
        }
        Point origin(static_cast<std::size_t>(f.dim()), 0);
        for (std::int64_t i = 0; i < n; ++i)
            rep.origin_distances.push_back(
                std::sqrt(static_cast<double>(dist_sq_rows(origin, f.point(i)))) / norm);
    } else {
        check_cross_dims(f, *g);
        double norm = cross_normalizer(f, g);
        std::int64_t n = f.size();
        if (f.circulant() && g->circulant() && f.size() == g->size()) {
            // dist(f_i, g_j) depends only on (j - i) mod n.
            Point r0 = f.point(0);
            for (std::int64_t h = 0; h < n; ++h) {
                double d = std::sqrt(static_cast<double>(dist_sq_rows(r0, g->point(h)))) / norm;
                min_d = std::min(min_d, d);
                max_d = std::max(max_d, d);
                sum += static_cast<long double>(d) * static_cast<long double>(n);
                count += static_cast<std::uint64_t>(n);
            }
        } else {
            for (std::int64_t i = 0; i < n; ++i) {
                Point pi = f.point(i);
                for (std::int64_t j = 0; j < g->size(); ++j) {
                    double d = std::sqrt(static_cast<double>(dist_sq_rows(pi, g->point(j)))) / norm;
                    min_d = std::min(min_d, d);
                    max_d = std::max(max_d, d);
                    sum += d;
                    ++count;
                }
            }
        }
    }

    rep.distance_min = count ? min_d : 0.0;
    rep.distance_max = max_d;
    rep.distance_mean = count ? static_cast<double>(sum / static_cast<long double>(count)) : 0.0;
    return rep;
}

SpectrumSummary spectrum_report(const PolytopeFamily& f, const std::optional<PolytopeFamily>& g,
                                int bins) {
    SpectrumAccumulator acc(bins);
    if (!g) {
        std::int64_t n = f.size();
        if (f.circulant()) {
            Point r0 = f.point(0);
            for (std::int64_t h = 1; h < n; ++h)
                acc.add(sin_between(r0, f.point(h)), static_cast<std::uint64_t>(n));
        } else {
            std::vector<Point> pts = f.points();
            for (std::int64_t i = 0; i < n; ++i)
                for (std::int64_t j = i + 1; j < n; ++j)
                    acc.add(sin_between(pts[static_cast<std::size_t>(i)],
                                        pts[static_cast<std::size_t>(j)]), 2);
        }
    } else {
        check_cross_dims(f, *g);
        std::int64_t n = f.size();
        if (f.circulant() && g->circulant() && f.size() == g->size()) {
            Point r0 = f.point(0);
            for (std::int64_t h = 0; h < n; ++h) {
                Point gh = g->point(h);
                if (r0 == gh) continue; // same point, no angle
                acc.add(sin_between(r0, gh), static_cast<std::uint64_t>(n));
            }
        } else {
            for (std::int64_t i = 0; i < n; ++i) {
                Point pi = f.point(i);
                for (std::int64_t j = 0; j < g->size(); ++j) {
                    Point pj = g->point(j);
                    if (pi == pj) continue;
                    acc.add(sin_between(pi, pj));
                }
            }
        }
    }
    return acc.summary();
}

double avg_norm_distance_CG(std::int64_t p) {
    require_prime(p, "avg_norm_distance_CG");
    if (p < 3) throw UsageError("avg_norm_distance_CG: need p >= 3");
    PolytopeFamily c = build_family(FamilyKind::C, p - 1);
    PolytopeFamily gfam = build_family(FamilyKind::G, p);

    // T over all 4p^2 ordered pairs of C union G, via rotation symmetry:
    // each shift class contributes p ordered pairs.
    unsigned __int128 t = 0;
    auto profile_c = circulant_dist_sq_profile(c);
    auto profile_g = circulant_dist_sq_profile(gfam);
    for (std::int64_t h = 0; h < p; ++h) {
        t += static_cast<unsigned __int128>(profile_c[static_cast<std::size_t>(h)]) *
             static_cast<unsigned __int128>(p);
        t += static_cast<unsigned __int128>(profile_g[static_cast<std::size_t>(h)]) *
             static_cast<unsigned __int128>(p);
    }
    Point c0 = c.point(0);
    for (std::int64_t h = 0; h < p; ++h)
        t += 2 * static_cast<unsigned __int128>(dist_sq_rows(c0, gfam.point(h))) *
             static_cast<unsigned __int128>(p);

    long double avg_sq = static_cast<long double>(t) /
                         (4.0L * static_cast<long double>(p) * static_cast<long double>(p));
    return static_cast<double>(std::sqrt(avg_sq) /
                               std::pow(static_cast<long double>(p), 1.5L));
}

std::int64_t inverse_gap_count(std::int64_t p) {
    require_prime(p, "inverse_gap_count");
    auto inv = inverse_table(p);
    std::vector<char> seen(static_cast<std::size_t>(p), 0);
    std::int64_t distinct = 0;
    for (std::int64_t n = 1; n < p; ++n) {
        std::int64_t gap = n - inv[static_cast<std::size_t>(n)];
        if (gap < 0) gap = -gap;
        if (!seen[static_cast<std::size_t>(gap)]) {
            seen[static_cast<std::size_t>(gap)] = 1;
            ++distinct;
        }
    }
    return distinct;
}

BigInt inverse_increment_sqsum(std::int64_t p, std::int64_t h) {
    require_prime(p, "inverse_increment_sqsum");
    if (h < 1 || h > p - 1) throw UsageError("inverse_increment_sqsum: need 1 <= h <= p-1");
    auto inv = inverse_table(p);
    unsigned __int128 sum = 0;
    for (std::int64_t x = 1; x < p; ++x) {
        if (x == p - h) continue;
        std::int64_t diff = inv[static_cast<std::size_t>((x + h) % p)] - inv[static_cast<std::size_t>(x)];
        sum += static_cast<unsigned __int128>(diff * diff);
    }
    BigInt out = static_cast<std::uint64_t>(sum >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(sum);
    return out;
}

std::int64_t inverse_pair_count_in_boxes(std::int64_t p, const ArithProgression& i,
                                         const ArithProgression& j) {
    require_prime(p, "inverse_pair_count_in_boxes");
    for (const auto* prog : {&i, &j}) {
        if (prog->count < 1 || prog->step < 1 || prog->start < 1 || prog->last() > p - 1)
            throw UsageError("inverse_pair_count_in_boxes: progression not inside {1..p-1}");
    }
    auto inv = inverse_table(p);
    std::int64_t count = 0;
    for (std::int64_t a = i.start; a <= i.last(); a += i.step)
        if (j.contains(inv[static_cast<std::size_t>(a)])) ++count;
    return count;
}

} // namespace hypervis
