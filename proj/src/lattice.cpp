#include "ilz/lattice.hpp"

#include <string>

#include "ilz/errors.hpp"

namespace ilz {

LatticeGram::LatticeGram(Eigen::MatrixXd gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
        throw DimensionMismatch("Gram matrix must be square and nonempty");
    d_ = gram_.rows();
    for (long i = 0; i < d_; ++i)
        for (long j = 0; j < i; ++j)
            if (std::abs(gram_(i, j) - gram_(j, i)) > 1e-12 * (1.0 + std::abs(gram_(i, j))))
                throw DimensionMismatch("Gram matrix is not symmetric at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
    Eigen::LLT<Eigen::MatrixXd> llt(gram_);
    if (llt.info() != Eigen::Success)
        throw DivergentRegion("Gram matrix is not positive definite");
    Eigen::MatrixXd L = llt.matrixL();
    qdiag_.resize(static_cast<std::size_t>(d_));
    mu_ = Eigen::MatrixXd::Zero(d_, d_);
    for (long i = 0; i < d_; ++i) {
        qdiag_[static_cast<std::size_t>(i)] = L(i, i) * L(i, i);
        for (long j = i + 1; j < d_; ++j) mu_(i, j) = L(j, i) / L(i, i);
    }
    double det = 1.0;
    for (double q : qdiag_) det *= q;
    covolume_ = std::sqrt(det);
}

LatticeGram LatticeGram::dual() const {
    return LatticeGram(gram_.inverse());
}

long LatticeGram::count_points(double r_sq) const {
    long pairs = 0;
    enumerate_short_vectors(r_sq, [&](const std::vector<long>&, double) { ++pairs; });
    return 1 + 2 * pairs;
}

}  // namespace ilz
