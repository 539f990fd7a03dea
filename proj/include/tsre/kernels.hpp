#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "tsre/common.hpp"

namespace tsre {

/// Dispersion estimator selector for gk_cov and the cluster projection.
enum class Dispersion { mad, raw_mad, qn };

/// Sample median; mean of the two central order statistics for even length.
inline double median(std::vector<double> x) {
    if (x.empty()) throw std::invalid_argument("empty sample");
    require_finite(x, "median");
    std::size_t n = x.size();
    std::size_t h = n / 2;
    std::nth_element(x.begin(), x.begin() + h, x.end());
    double hi = x[h];
    if (n % 2 == 1) return hi;
    double lo = *std::max_element(x.begin(), x.begin() + h);
    return 0.5 * (lo + hi);
}

/// Median absolute deviation; multiplied by 1.4826 when normalized.
inline double mad(const std::vector<double>& x, bool normalized = true) {
    if (x.size() < 2) throw std::invalid_argument("mad: sample must have at least 2 values");
    double med = median(x);
    std::vector<double> dev(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) dev[i] = std::fabs(x[i] - med);
    double m = median(std::move(dev));
    return normalized ? 1.4826 * m : m;
}

namespace detail {

// #{(i,j), i<j : x_(j) - x_(i) <= t} for sorted x, by a two-pointer sweep.
inline std::int64_t count_pair_diffs_le(const std::vector<double>& xs, double t) {
    std::int64_t count = 0;
    std::size_t n = xs.size();
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (j < i + 1) j = i + 1;
        while (j < n && xs[j] - xs[i] <= t) ++j;
        count += static_cast<std::int64_t>(j - i - 1);
    }
    return count;
}

}  // namespace detail

/// Rousseeuw-Croux Qn: the C(h,2)-th order statistic of the pairwise absolute
/// differences, h = floor(n/2) + 1, scaled by the asymptotic constant 2.2219.
/// No finite-sample correction factors are applied.
inline double qn(std::vector<double> x) {
    std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("qn: sample must have at least 2 values");
    require_finite(x, "qn");
    std::sort(x.begin(), x.end());
    std::int64_t h = static_cast<std::int64_t>(n) / 2 + 1;
    std::int64_t k = h * (h - 1) / 2;  // 1-based rank among the n(n-1)/2 differences
    double lo = 0.0;
    double hi = x[n - 1] - x[0];
    if (hi <= 0.0) return 0.0;
    if (detail::count_pair_diffs_le(x, 0.0) >= k) return 0.0;
    // value-space bisection: the answer is the smallest t with count(t) >= k
    for (int iter = 0; iter < 2200 && std::nextafter(lo, hi) < hi; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (detail::count_pair_diffs_le(x, mid) >= k)
            hi = mid;
        else
            lo = mid;
    }
    return 2.2219 * hi;
}

inline double dispersion(const std::vector<double>& x, Dispersion kind) {
    switch (kind) {
        case Dispersion::mad: return mad(x, true);
        case Dispersion::raw_mad: return mad(x, false);
        case Dispersion::qn: return qn(x);
    }
    throw std::invalid_argument("dispersion: unknown selector");
}

/// Gnanadesikan-Kettenring covariance: (S(x+y)^2 - S(x-y)^2) / 4.
inline double gk_cov(const std::vector<double>& x, const std::vector<double>& y, Dispersion kind) {
    require(x.size() == y.size(), "gk_cov: length mismatch");
    require(x.size() >= 2, "gk_cov: samples must have at least 2 values");
    std::vector<double> sum(x.size()), diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum[i] = x[i] + y[i];
        diff[i] = x[i] - y[i];
    }
    double sp = dispersion(sum, kind);
    double sm = dispersion(diff, kind);
    return 0.25 * (sp * sp - sm * sm);
}

}  // namespace tsre
