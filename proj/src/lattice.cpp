#include "hypervis/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hypervis {

namespace {

void check_same_dim(const Point& v, const Point& w) {
    if (v.size() != w.size())
        throw UsageError("points have different dimensions");
}

bool is_origin(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](Coord c) { return c == 0; });
}

} // namespace

bool LatticeParams::contains(const Point& p) const {
    if (static_cast<int>(p.size()) != d) return false;
    return std::all_of(p.begin(), p.end(),
                       [this](Coord c) { return c >= 0 && c <= n; });
}

std::uint64_t visibility_gcd(const Point& v, const Point& w) {
    check_same_dim(v, w);
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::int64_t diff = w[i] - v[i];
        g = std::gcd(g, static_cast<std::uint64_t>(diff < 0 ? -diff : diff));
        if (g == 1) return 1;
    }
    return g;
}

bool is_visible(const Point& v, const Point& w) {
    return visibility_gcd(v, w) == 1;
}

std::int64_t distance_sq(const Point& v, const Point& w) {
    check_same_dim(v, w);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::int64_t diff = w[i] - v[i];
        s += diff * diff;
    }
    return s;
}

double normalized_distance(const LatticeParams& params, const Point& v, const Point& w) {
    params.validate();
    if (!params.contains(v) || !params.contains(w))
        throw UsageError("point outside cube [0,N]^d");
    double dist = std::sqrt(static_cast<double>(distance_sq(v, w)));
    return dist / (static_cast<double>(params.n) * std::sqrt(static_cast<double>(params.d)));
}

double sin_between(const Point& v, const Point& w) {
    check_same_dim(v, w);
    if (is_origin(v) || is_origin(w))
        throw UsageError("sin_between: zero vector has no ray");
    __int128 dot = 0, nv = 0, nw = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        dot += static_cast<__int128>(v[i]) * w[i];
        nv += static_cast<__int128>(v[i]) * v[i];
        nw += static_cast<__int128>(w[i]) * w[i];
    }
    long double cosv = static_cast<long double>(dot) /
                       std::sqrt(static_cast<long double>(nv) * static_cast<long double>(nw));
    cosv = std::clamp(cosv, static_cast<long double>(-1.0), static_cast<long double>(1.0));
    return static_cast<double>(std::sqrt(1.0L - cosv * cosv));
}

SpectrumAccumulator::SpectrumAccumulator(int bins) : hist_(static_cast<std::size_t>(bins), 0) {
    if (bins < 1) throw UsageError("spectrum: need at least one bin");
}

void SpectrumAccumulator::add(double s, std::uint64_t weight) {
    count_ += weight;
    sum_ += s * static_cast<double>(weight);
    min_ = std::min(min_, s);
    max_ = std::max(max_, s);
    auto bin = static_cast<std::size_t>(s * static_cast<double>(hist_.size()));
    if (bin >= hist_.size()) bin = hist_.size() - 1;
    hist_[bin] += weight;
}

void SpectrumAccumulator::merge(const SpectrumAccumulator& other) {
    count_ += other.count_;
    sum_ += other.sum_;
    min_ = std::min(min_, other.min_);
    max_ = std::max(max_, other.max_);
    for (std::size_t i = 0; i < hist_.size(); ++i) hist_[i] += other.hist_[i];
}

SpectrumSummary SpectrumAccumulator::summary() const {
    SpectrumSummary s;
    s.count = count_;
    s.histogram = hist_;
    if (count_ > 0) {
        s.min_sin = min_;
        s.max_sin = max_;
        s.mean_sin = sum_ / static_cast<double>(count_);
    }
    return s;
}

SpectrumSummary spectrum(const std::vector<Point>& a, const std::vector<Point>& b, int bins) {
    for (const auto* set : {&a, &b})
        for (const auto& p : *set)
            if (is_origin(p)) throw UsageError("spectrum: origin has no ray");
    SpectrumAccumulator acc(bins);
    for (const auto& pa : a)
        for (const auto& pb : b) {
            if (pa == pb) continue;
            acc.add(sin_between(pa, pb));
        }
    return acc.summary();
}

} // namespace hypervis
