#pragma once

#include <complex>

#include "ilz/lattice.hpp"

namespace ilz {

using Complex = std::complex<double>;

/// Upper incomplete gamma Gamma(a, x) for complex a and x > 0; continued
/// fraction for x > |a| + 1, series through the lower function otherwise.
Complex upper_incomplete_gamma(Complex a, double x);

struct EpsteinDirectResult {
    Complex value;
    /// Magnitude of the integral approximation of the sum beyond the cutoff;
    /// that correction is already folded into `value`.
    double tail_estimate = 0.0;
};

/// Direct sum E(L, s) = sum over nonzero v of q(v)^{-s/2} truncated at
/// q(v) <= cutoff_radius^2, plus the radial integral estimate of the tail.
/// Requires Re s > d; throws DivergentRegion otherwise.
EpsteinDirectResult epstein_direct(const LatticeGram& L, Complex s, double cutoff_radius);

/// Analytic continuation of E(L, s) to all s != d via the incomplete-gamma
/// (Riemann splitting) representation at the self-dual split point.
/// Throws PoleAtD.
Complex epstein_continued(const LatticeGram& L, Complex s);

/// Completed form E*(L, s) = pi^{-s/2} Gamma(s/2) E(L, s), which satisfies
/// E*(L, s) = E*(dual L, d - s) for unit covolume. Throws NotUnitCovolume,
/// PoleAtZero, PoleAtD.
Complex completed_epstein(const LatticeGram& L, Complex s);

}  // namespace ilz
