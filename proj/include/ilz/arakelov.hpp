#pragma once

#include <cstdint>
#include <vector>

#include "ilz/cyclo_field.hpp"
#include "ilz/lattice.hpp"

namespace ilz {

/// Basis of the log-embedded unit lattice inside the sum-zero hyperplane
/// of R^{r2} (weight-2 log coordinates 2 log|sigma_j|).
struct LogUnitBasis {
    long rank = 0;
    std::vector<Eigen::VectorXd> vectors;
    /// Absolute determinant of the basis with the last coordinate dropped;
    /// this is the classical regulator of the field.
    double regulator_like = 1.0;
};

/// Point of the Arakelov torus: log-moduli (summing to zero) and phases.
struct ArakelovPoint {
    Eigen::VectorXd lambda;  // r2 weight-2 log-moduli, sum 0
    Eigen::VectorXd theta;   // r2 phases in [0, 2pi)
};

/// Unit-covolume ideal lattice realified from the r2 complex embeddings.
struct IdealLatticeReal {
    std::vector<Eigen::VectorXd> basis_embedded;  // d vectors in R^d
    LatticeGram gram;
};

/// True when the sampler supports n: class number 1 with totally real
/// class number 1, so cyclotomic units generate the full unit group
/// modulo torsion.
bool field_allowlisted(long n);

/// Log vectors of cyclotomic units reduced to a lattice basis of rank
/// r2 - 1. Throws UnsupportedField for non-allowlisted n.
LogUnitBasis log_unit_basis(const CyclotomicField& K);

/// Haar sample: uniform coefficients in the fundamental parallelepiped of
/// the log-unit lattice, phases uniform on each circle.
ArakelovPoint sample_point(const CyclotomicField& K, const LogUnitBasis& basis,
                           std::uint64_t seed, std::uint64_t stream = 0);

/// Unit-determinant lattice Delta^{-1/(2d)} a O_K for the sampled a, with
/// the weight-2 realification (sqrt 2 Re, sqrt 2 Im per complex place).
IdealLatticeReal lattice_of(const CyclotomicField& K, const ArakelovPoint& p);

/// Lattice points (origin included) in the closed ball q(v) <= R^2.
long count_points_in_ball(const IdealLatticeReal& L, double R);

struct MeanCountResult {
    double mean = 0.0;
    double stderr_ = 0.0;
    long samples = 0;
};

/// Monte Carlo mean of count_points_in_ball over Haar samples, with the
/// radius solved from V = pi^{d/2} R^d / Gamma(1 + d/2).
MeanCountResult mean_count_mc(const CyclotomicField& K, double V, long N,
                              std::uint64_t seed);

/// Ball radius with vol(B_R) = V in dimension d, computed in logs.
double radius_from_volume(long d, double V);

}  // namespace ilz
