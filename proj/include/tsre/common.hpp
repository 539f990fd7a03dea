#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsre {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Mask = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Numerical failure while computing (singular update, no root, ...).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input data (CSV/mask parsing).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (flags, campaign schema).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void require_finite(const std::vector<double>& values, const std::string& what) {
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument(what + ": non-finite value");
}

inline bool all_finite(const Matrix& m) {
    return m.allFinite();
}

}  // namespace tsre
