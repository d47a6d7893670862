#pragma once

#include <cstdint>
#include <map>

#include "ilz/characters.hpp"
#include "ilz/gamma_mellin.hpp"

namespace ilz {

/// vol(Ar(K)) = sqrt(|Delta|) * Res_{s=1} zeta_K, the normalization of the
/// averaged Epstein formula.
double arakelov_volume(const CyclotomicField& K);

/// Closed form of the averaged Epstein zeta over the Arakelov class group:
///   avg E(Lambda, d s) = zeta_K(s)/vol(Ar) * pi^{sd/2}/(Gamma(sd/2) d/2)
///                        * Delta^{s/2} (2pi)^{-s r2} Gamma(s)^{r2} (2pi)^{r2},
/// evaluated in log space. Throws PoleAtOne at s = 1, DivergentRegion s < 1.
double hecke_rhs(const CyclotomicField& K, double s);

struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
};

/// Monte Carlo counterpart: average of epstein_continued(lattice, d s) over
/// Haar samples of the Arakelov torus.
McEstimate hecke_lhs_mc(const CyclotomicField& K, double s, long N, std::uint64_t seed);

struct ErrorTermResult {
    double epsilon = 0.0;
    double sigma = 0.5;
    double T = 60.0;
    double quad_error_est = 0.0;
    /// Heuristic: envelope tail times an empirical zeta_K ceiling on [T, 2T].
    double tail_bound = 0.0;
    long n_nodes = 0;
    /// Largest Hermitian-symmetry violation |g(s-it) - conj g(s+it)| seen at
    /// the quadrature nodes, relative.
    double im_residual = 0.0;
};

/// Contour quadrature of the mean-count error term
///   eps = (2 (2pi)^{r2} / (vol(Ar) pi)) Int_0^T Re g(sigma + it) dt,
/// with g(s) = Delta^{s/2} zeta_K(s) R^{2 s r2}/(2 s r2) Gamma(s)^{r2} /
/// (2^{s r2} Gamma(s r2)) and R solved from the ball volume V.
/// Caches zeta_K at the quadrature nodes so repeated calls with different V
/// (same sigma, T) reuse every evaluation. Throws InsufficientDecay when
/// r2 < 4, BadSigma outside [1/2, 1).
class ErrorTermEvaluator {
public:
    ErrorTermEvaluator(const CyclotomicField& K, double sigma, double T);

    ErrorTermResult evaluate(double V);

    const CyclotomicField& field() const { return K_; }

private:
    Complex g_factor(Complex s, double log_r) const;  // g without zeta_K
    Complex zeta_at(double t);

    const CyclotomicField& K_;
    double sigma_, T_;
    double log_disc_, prefactor_log_;
    long r2_;
    long panels_;  // base panel count from the oscillation estimate
    std::map<double, Complex> zeta_cache_;
    GammaRatioBoundConfig cfg_;
    double zeta_ceiling_ = -1.0;  // empirical max |zeta_K| on [T, 2T]
};

ErrorTermResult error_term(const CyclotomicField& K, double V, double sigma = 0.5,
                           double T = 60.0);

/// 1 + V + eps(V, K) with the default contour parameters.
double mean_count_prediction(const CyclotomicField& K, double V);

}  // namespace ilz
