#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace ilz {

/// Positive-definite quadratic form q(x) = x^T gram x with its Cholesky data,
/// ready for Fincke-Pohst enumeration.
class LatticeGram {
public:
    /// Validates symmetry (1e-12) and positive definiteness; throws
    /// DimensionMismatch or DivergentRegion.
    explicit LatticeGram(Eigen::MatrixXd gram);

    long dim() const { return d_; }
    const Eigen::MatrixXd& gram() const { return gram_; }
    double covolume() const { return covolume_; }

    double q(const Eigen::VectorXd& x) const { return x.dot(gram_ * x); }

    /// Gram of the dual lattice (inverse matrix).
    LatticeGram dual() const;

    /// Visits one representative of each +-pair of nonzero lattice vectors v
    /// with q(v) <= bound, passing (integer coefficients, q(v)). Depth-first
    /// Fincke-Pohst on the Cholesky factor.
    template <typename Visit>
    void enumerate_short_vectors(double bound, Visit&& visit) const {
        if (bound < 0.0) return;
        std::vector<long> x(static_cast<std::size_t>(d_), 0);
        walk_(d_ - 1, 0.0, true, bound, x, visit);
    }

    /// Number of lattice points (origin included, both signs) in the closed
    /// ball q(v) <= r_sq.
    long count_points(double r_sq) const;

private:
    // Level-by-level descent: at coordinate i the admissible x_i form an
    // integer interval around -center_i. `lead` tracks whether every higher
    // coordinate is still zero; while it is, x_i < 0 is skipped so each
    // +-pair appears once.
    template <typename Visit>
    void walk_(long level, double used, bool lead, double bound,
               std::vector<long>& x, Visit&& visit) const {
        auto li = static_cast<std::size_t>(level);
        double c = 0.0;
        for (long j = level + 1; j < d_; ++j)
            c += mu_(level, j) * static_cast<double>(x[static_cast<std::size_t>(j)]);
        double room = (bound - used) / qdiag_[li];
        double half = room > 0.0 ? std::sqrt(room) : 0.0;
        long lo = static_cast<long>(std::ceil(-c - half - 1e-9));
        long hi = static_cast<long>(std::floor(-c + half + 1e-9));
        if (lead && lo < 0) lo = 0;
        for (long v = lo; v <= hi; ++v) {
            double dv = static_cast<double>(v) + c;
            double total = used + qdiag_[li] * dv * dv;
            if (total > bound * (1.0 + 1e-12) + 1e-12) continue;
            x[li] = v;
            if (level == 0) {
                if (!(lead && v == 0)) visit(x, total);
            } else {
                walk_(level - 1, total, lead && v == 0, bound, x, visit);
            }
        }
        x[li] = 0;
    }

    long d_ = 0;
    Eigen::MatrixXd gram_;
    double covolume_ = 0.0;
    std::vector<double> qdiag_;  // diagonal of the LDL-style decomposition
    Eigen::MatrixXd mu_;         // strictly upper Gram-Schmidt coefficients
};

}  // namespace ilz
