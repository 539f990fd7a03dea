#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "tsre/common.hpp"

namespace tsre {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Seedable random stream. Independent child streams are derived by hashing
/// (seed, path...) so that parallel and serial execution draw identical values.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(detail::splitmix64(seed)) {}

    static Rng stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        std::uint64_t h = detail::splitmix64(seed);
        for (std::uint64_t part : path) h = detail::splitmix64(h ^ (part + 0x9e3779b97f4a7c15ULL));
        Rng r(0);
        r.engine_.seed(h);
        return r;
    }

    /// Uniform on [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (cached spare).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double chi2(int k) {
        double s = 0.0;
        for (int i = 0; i < k; ++i) {
            double z = normal();
            s += z * z;
        }
        return s;
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the draw exactly uniform
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    /// k distinct indices from {0,...,n-1}, returned sorted.
    std::vector<int> sample_without_replacement(int n, int k, const std::vector<int>* pool = nullptr) {
        require(k >= 0 && k <= n, "sample size exceeds population");
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        if (pool != nullptr)
            for (int& v : idx) v = (*pool)[v];
        std::sort(idx.begin(), idx.end());
        return idx;
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace tsre
