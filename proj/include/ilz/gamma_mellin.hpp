#pragma once

#include <complex>
#include <string>

namespace ilz {

using Complex = std::complex<double>;

/// Principal-branch log gamma via the Stirling series with argument shifting
/// and reflection. Relative accuracy of exp(log_gamma) better than 1e-12 for
/// |z| <= 1e3 away from poles. Throws PoleAtNonPositiveInteger.
Complex log_gamma(Complex z);

/// Constant C of the critical-line gamma-ratio bound
///   |Gamma(1/2+it)|^r / |Gamma(r(1/2+it))| <= e^{-(1/2) r log r + C r} / (|t|+1)^{(r-1)/2},
/// fitted on an explicit grid.
struct GammaRatioBoundConfig {
    double C = 0.0;
    std::string fitted_over;
};

/// Fits C as the smallest grid-valid constant, rounded up to 2 decimals.
/// Grid: r in 1..r_max, t in {0, step, ..., t_max}.
GammaRatioBoundConfig fit_gamma_ratio_bound(long r_max = 64, double t_max = 100.0,
                                            double t_step = 0.1);

/// log of |Gamma(1/2+it)|^r / |Gamma(r(1/2+it))| by the exact closed-form
/// products (separate odd/even shapes), fully in log space.
double log_gamma_ratio_abs(long r, double t);

double gamma_ratio_abs(long r, double t);

/// Right side of the fitted bound.
double gamma_ratio_bound(long r, double t, const GammaRatioBoundConfig& cfg);

/// Mellin transform of the ball indicator: R^s / s. Throws PoleAtZero.
Complex mellin_indicator(double R, Complex s);

/// Quadrature-tail envelope R^r e^{-(1/2) r log r + C r} / (|t|+1)^{(r+1)/2}
/// dominating the full error-term integrand on the fit grid.
double integrand_envelope(long r, double R, double t, const GammaRatioBoundConfig& cfg);

}  // namespace ilz
