#pragma once

#include <cmath>
#include <limits>

#include "tsre/common.hpp"

namespace tsre {

namespace detail {

/// Regularized lower incomplete gamma P(a, x), series branch (x < a + 1).
inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

/// Regularized upper incomplete gamma Q(a, x) via Lentz continued fraction (x >= a + 1).
inline double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_p(double a, double x) {
    if (x <= 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

inline double log_choose(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace detail

/// Chi-square CDF with k degrees of freedom.
inline double chi2_cdf(double t, int k) {
    require(k >= 1, "chi2_cdf: degrees of freedom must be positive");
    if (t <= 0.0) return 0.0;
    return detail::gamma_p(0.5 * k, 0.5 * t);
}

inline double chi2_pdf(double t, int k) {
    if (t <= 0.0) return 0.0;
    double a = 0.5 * k;
    return std::exp((a - 1.0) * std::log(t) - 0.5 * t - std::lgamma(a) - a * 0.6931471805599453);
}

/// Chi-square quantile: bracketed bisection then Newton polish.
inline double chi2_quantile(double p, int k) {
    require(k >= 1, "chi2_quantile: degrees of freedom must be positive");
    require(p > 0.0 && p < 1.0, "chi2_quantile: probability must lie in (0,1)");
    double lo = 0.0;
    double hi = std::max(1.0, static_cast<double>(k));
    while (chi2_cdf(hi, k) < p) {
        hi *= 2.0;
        if (hi > 1e308) throw numeric_error("chi2_quantile: bracket expansion failed");
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (chi2_cdf(mid, k) < p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-14 * std::max(hi, 1.0)) break;
    }
    double x = 0.5 * (lo + hi);
    // Newton polish against the density
    for (int i = 0; i < 4; ++i) {
        double f = chi2_cdf(x, k) - p;
        double d = chi2_pdf(x, k);
        if (d <= 0.0) break;
        double step = f / d;
        double nx = x - step;
        if (nx <= lo || nx >= hi || !(nx > 0.0)) break;
        x = nx;
    }
    return x;
}

/// Smallest integer c with P(Bin(n, prob) <= c) >= level, by exact CDF summation.
inline int binom_quantile(int n, double prob, double level) {
    require(n >= 0, "binom_quantile: n must be nonnegative");
    require(prob >= 0.0 && prob <= 1.0, "binom_quantile: prob must lie in [0,1]");
    require(level > 0.0 && level <= 1.0, "binom_quantile: level must lie in (0,1]");
    if (n == 0 || prob == 0.0) return 0;
    if (prob == 1.0) return n;
    double lp = std::log(prob);
    double lq = std::log1p(-prob);
    double cdf = 0.0;
    for (int c = 0; c <= n; ++c) {
        cdf += std::exp(detail::log_choose(n, c) + c * lp + (n - c) * lq);
        if (cdf >= level) return c;
    }
    return n;  // guards against accumulated rounding just below the level
}

}  // namespace tsre
