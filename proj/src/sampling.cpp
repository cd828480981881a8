#include "hypervis/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "hypervis/errors.hpp"
#include "hypervis/parallel.hpp"

namespace hypervis {

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPERVIS_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

Point sample_point(const LatticeParams& params, rng::Stream& stream) {
    params.validate();
    Point p(static_cast<std::size_t>(params.d));
    for (auto& c : p)
        c = static_cast<Coord>(stream.bounded(static_cast<std::uint64_t>(params.n) + 1));
    return p;
}

namespace {

constexpr std::uint64_t kChunk = 4096;
const double kInvSqrt6 = 1.0 / std::sqrt(6.0);
const double kSqrt7Over4 = std::sqrt(7.0) / 4.0;

struct Partial {
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
    std::uint64_t in_window = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
};

void draw_coords(rng::Stream& s, std::uint64_t range, Coord* out, int count) {
    for (int i = 0; i < count; ++i) out[i] = static_cast<Coord>(s.bounded(range));
}

bool coprime_diffs(const Coord* a, const Coord* b, int d) {
    std::uint64_t g = 0;
    for (int i = 0; i < d; ++i) {
        std::int64_t diff = a[i] - b[i];
        g = std::gcd(g, static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
        if (g == 1) return true;
    }
    return false;
}

SampleReport finalize(std::uint64_t seed, std::uint64_t samples, int d, std::int64_t n, int k,
                      double center, double halfwidth, const std::vector<Partial>& partials) {
    SampleReport rep;
    rep.seed = seed;
    rep.samples = samples;
    rep.d = d;
    rep.n = n;
    rep.k = k;
    rep.window_center = center;
    rep.window_halfwidth = halfwidth;

    std::uint64_t in_window = 0;
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& p : partials) { // fixed chunk order, bit-reproducible
        rep.accepted += p.accepted;
        rep.rejected += p.rejected;
        in_window += p.in_window;
        sum += p.sum;
        sum_sq += p.sum_sq;
    }
    if (rep.accepted > 0) {
        auto na = static_cast<double>(rep.accepted);
        rep.fraction_in_window = static_cast<double>(in_window) / na;
        rep.mean = sum / na;
        if (rep.accepted > 1) {
            double var = std::max(0.0, (sum_sq - sum * sum / na) / (na - 1.0));
            rep.std_error = std::sqrt(var / na);
        }
    }
    if (samples > 0) {
        auto ns = static_cast<double>(samples);
        rep.acceptance_rate = static_cast<double>(rep.accepted) / ns;
        rep.acceptance_std_error =
            std::sqrt(rep.acceptance_rate * (1.0 - rep.acceptance_rate) / ns);
    }
    return rep;
}

void check_not_pathological(const SampleReport& rep, const char* what) {
    if (rep.samples >= 100 && rep.accepted * 100 < rep.samples)
        throw BudgetError(std::string(what) + ": rejection rate above 99% (" +
                          std::to_string(rep.rejected) + " of " + std::to_string(rep.samples) +
                          " draws rejected); parameters look pathological");
}

enum class PairStat { Distance, Sine };

SampleReport pair_experiment(PairStat stat, int d, std::int64_t n, std::uint64_t samples,
                             double halfwidth, std::uint64_t seed, int threads) {
    LatticeParams params{d, n};
    params.validate();
    if (samples < 1) throw UsageError("pair experiment: samples must be >= 1");

    const double center = stat == PairStat::Distance ? kInvSqrt6 : kSqrt7Over4;
    const double norm = static_cast<double>(n) * std::sqrt(static_cast<double>(d));
    const auto range = static_cast<std::uint64_t>(n) + 1;

    auto partials = run_chunks<Partial>(
        samples, kChunk, threads,
        [&](std::uint64_t, std::uint64_t begin, std::uint64_t end, Partial& part) {
            std::vector<Coord> v(static_cast<std::size_t>(d)), w(static_cast<std::size_t>(d));
            for (std::uint64_t i = begin; i < end; ++i) {
                rng::Stream s(seed, i);
                draw_coords(s, range, v.data(), d);
                draw_coords(s, range, w.data(), d);
                if (!coprime_diffs(v.data(), w.data(), d)) {
                    ++part.rejected;
                    continue;
                }
                double x;
                if (stat == PairStat::Distance) {
                    std::int64_t dsq = 0;
                    for (int c = 0; c < d; ++c) {
                        std::int64_t diff = v[static_cast<std::size_t>(c)] - w[static_cast<std::size_t>(c)];
                        dsq += diff * diff;
                    }
                    x = std::sqrt(static_cast<double>(dsq)) / norm;
                } else {
                    // rays from the origin need nonzero endpoints
                    auto zero = [d](const std::vector<Coord>& p) {
                        return std::all_of(p.begin(), p.end(), [](Coord c) { return c == 0; });
                    };
                    if (zero(v) || zero(w)) {
                        ++part.rejected;
                        continue;
                    }
                    x = sin_between(v, w);
                }
                ++part.accepted;
                part.sum += x;
                part.sum_sq += x * x;
                if (std::abs(x - center) <= halfwidth) ++part.in_window;
            }
        });

    SampleReport rep = finalize(seed, samples, d, n, 2, center, halfwidth, partials);
    check_not_pathological(rep, stat == PairStat::Distance ? "pair_distance_experiment"
                                                           : "pair_angle_experiment");
    return rep;
}

} // namespace

SampleReport pair_distance_experiment(int d, std::int64_t n, std::uint64_t samples,
                                      double halfwidth, std::uint64_t seed, int threads) {
    return pair_experiment(PairStat::Distance, d, n, samples, halfwidth, seed, threads);
}

SampleReport pair_angle_experiment(int d, std::int64_t n, std::uint64_t samples,
                                   double halfwidth, std::uint64_t seed, int threads) {
    return pair_experiment(PairStat::Sine, d, n, samples, halfwidth, seed, threads);
}

SampleReport polytope_experiment(int d, std::int64_t n, int k, std::uint64_t samples,
                                 double halfwidth, std::uint64_t seed, int threads) {
    LatticeParams params{d, n};
    params.validate();
    if (k < 2) throw UsageError("polytope_experiment: K must be >= 2");
    if (samples < 1) throw UsageError("polytope_experiment: samples must be >= 1");

    const double norm = static_cast<double>(n) * std::sqrt(static_cast<double>(d));
    const auto range = static_cast<std::uint64_t>(n) + 1;
    const auto dim = static_cast<std::size_t>(d);

    auto partials = run_chunks<Partial>(
        samples, kChunk, threads,
        [&](std::uint64_t, std::uint64_t begin, std::uint64_t end, Partial& part) {
            std::vector<Coord> pts(static_cast<std::size_t>(k) * dim);
            for (std::uint64_t i = begin; i < end; ++i) {
                rng::Stream s(seed, i);
                draw_coords(s, range, pts.data(), k * d);
                bool visible = true;
                for (int a = 0; a < k && visible; ++a)
                    for (int b = a + 1; b < k; ++b)
                        if (!coprime_diffs(&pts[static_cast<std::size_t>(a) * dim],
                                           &pts[static_cast<std::size_t>(b) * dim], d)) {
                            visible = false;
                            break;
                        }
                if (!visible) {
                    ++part.rejected;
                    continue;
                }
                double max_dev = 0.0;
                double dist_sum = 0.0;
                int pairs = 0;
                for (int a = 0; a < k; ++a)
                    for (int b = a + 1; b < k; ++b) {
                        std::int64_t dsq = 0;
                        for (int c = 0; c < d; ++c) {
                            std::int64_t diff = pts[static_cast<std::size_t>(a) * dim + static_cast<std::size_t>(c)] -
                                                pts[static_cast<std::size_t>(b) * dim + static_cast<std::size_t>(c)];
                            dsq += diff * diff;
                        }
                        double x = std::sqrt(static_cast<double>(dsq)) / norm;
                        max_dev = std::max(max_dev, std::abs(x - kInvSqrt6));
                        dist_sum += x;
                        ++pairs;
                    }
                ++part.accepted;
                double mean_dist = dist_sum / static_cast<double>(pairs);
                part.sum += mean_dist;
                part.sum_sq += mean_dist * mean_dist;
                if (max_dev <= halfwidth) ++part.in_window;
            }
        });

    SampleReport rep = finalize(seed, samples, d, n, k, kInvSqrt6, halfwidth, partials);
    if (rep.accepted == 0)
        throw BudgetError("polytope_experiment: no self-visible tuples accepted; "
                          "acceptance too low for these parameters");
    return rep;
}

SampleReport continuous_baseline(int d, std::uint64_t samples, std::uint64_t seed, int threads) {
    if (d < 1) throw UsageError("continuous_baseline: d must be >= 1");
    if (samples < 1) throw UsageError("continuous_baseline: samples must be >= 1");

    struct BasePartial {
        double sum_sq_dist = 0.0; // normalized squared distance
        double sum_sq_dist_sq = 0.0;
        double sum_dist = 0.0;
    };
    auto partials = run_chunks<BasePartial>(
        samples, kChunk, threads,
        [&](std::uint64_t, std::uint64_t begin, std::uint64_t end, BasePartial& part) {
            for (std::uint64_t i = begin; i < end; ++i) {
                rng::Stream s(seed, i);
                double acc = 0.0;
                for (int c = 0; c < d; ++c) {
                    double diff = s.uniform01() - s.uniform01();
                    acc += diff * diff;
                }
                double dsq = acc / static_cast<double>(d);
                part.sum_sq_dist += dsq;
                part.sum_sq_dist_sq += dsq * dsq;
                part.sum_dist += std::sqrt(dsq);
            }
        });

    SampleReport rep;
    rep.seed = seed;
    rep.samples = samples;
    rep.accepted = samples;
    rep.d = d;
    rep.k = 2;
    rep.window_center = 1.0 / 6.0;
    double sum = 0.0, sum_sq = 0.0, sum_dist = 0.0;
    for (const auto& p : partials) {
        sum += p.sum_sq_dist;
        sum_sq += p.sum_sq_dist_sq;
        sum_dist += p.sum_dist;
    }
    auto ns = static_cast<double>(samples);
    rep.mean = sum / ns;
    rep.mean_dist = sum_dist / ns;
    if (samples > 1) {
        double var = std::max(0.0, (sum_sq - sum * sum / ns) / (ns - 1.0));
        rep.std_error = std::sqrt(var / ns);
    }
    return rep;
}

} // namespace hypervis
