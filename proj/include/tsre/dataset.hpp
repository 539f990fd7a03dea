#pragma once

#include <vector>

#include "tsre/common.hpp"

namespace tsre {

/// Numeric matrix with a companion missingness mask (1 = observed).
/// Values at masked cells are ignored by every consumer.
struct Dataset {
    Matrix x;
    Mask u;

    Dataset() = default;
    Dataset(Matrix values, Mask mask) : x(std::move(values)), u(std::move(mask)) { validate(); }

    static Dataset complete(Matrix values) {
        Mask mask = Mask::Ones(values.rows(), values.cols());
        return Dataset(std::move(values), std::move(mask));
    }

    Eigen::Index rows() const { return x.rows(); }
    Eigen::Index cols() const { return x.cols(); }
    bool observed(Eigen::Index i, Eigen::Index j) const { return u(i, j) != 0; }

    int observed_in_row(Eigen::Index i) const {
        int c = 0;
        for (Eigen::Index j = 0; j < cols(); ++j) c += u(i, j);
        return c;
    }

    /// Observed values of column j together with their row indices.
    std::vector<double> column_observed(Eigen::Index j, std::vector<int>* rows_out = nullptr) const {
        std::vector<double> v;
        if (rows_out) rows_out->clear();
        for (Eigen::Index i = 0; i < rows(); ++i) {
            if (u(i, j)) {
                v.push_back(x(i, j));
                if (rows_out) rows_out->push_back(static_cast<int>(i));
            }
        }
        return v;
    }

    double missing_fraction() const {
        double total = static_cast<double>(rows() * cols());
        double miss = total - static_cast<double>(u.cast<int>().sum());
        return total > 0 ? miss / total : 0.0;
    }

    Dataset subset_rows(const std::vector<int>& idx) const {
        Matrix xs(static_cast<Eigen::Index>(idx.size()), cols());
        Mask us(static_cast<Eigen::Index>(idx.size()), cols());
        for (std::size_t r = 0; r < idx.size(); ++r) {
            xs.row(static_cast<Eigen::Index>(r)) = x.row(idx[r]);
            us.row(static_cast<Eigen::Index>(r)) = u.row(idx[r]);
        }
        return Dataset(std::move(xs), std::move(us));
    }

    void validate() const {
        require(x.rows() == u.rows() && x.cols() == u.cols(), "dataset: value/mask dimension mismatch");
        require(x.rows() >= 2 && x.cols() >= 1, "dataset: requires n >= 2 and p >= 1");
        for (Eigen::Index i = 0; i < rows(); ++i)
            for (Eigen::Index j = 0; j < cols(); ++j) {
                require(u(i, j) == 0 || u(i, j) == 1, "dataset: mask entries must be 0 or 1");
                if (u(i, j) && !std::isfinite(x(i, j)))
                    throw std::invalid_argument("dataset: observed cell holds a non-finite value");
            }
    }
};

}  // namespace tsre
