#include "ilz/gamma_mellin.hpp"

#include <cmath>
#include <numbers>

#include "ilz/errors.hpp"

namespace ilz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093453;  // log(2 pi)

// B_{2n} / (2n (2n-1)) for the Stirling series, n = 1..10.
constexpr double kStirling[10] = {
    1.0 / 12,         -1.0 / 360,        1.0 / 1260,        -1.0 / 1680,
    1.0 / 1188,       -691.0 / 360360,   1.0 / 156,         -3617.0 / 122400,
    43867.0 / 244188, -174611.0 / 125400};

Complex stirling_log_gamma(Complex z) {
    Complex acc = 0.0;
    while (std::abs(z) < 20.0) {
        acc -= std::log(z);
        z += 1.0;
    }
    Complex res = (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi;
    Complex zp = 1.0 / z;
    Complex z2 = zp * zp;
    for (double c : kStirling) {
        res += c * zp;
        zp *= z2;
    }
    return res + acc;
}

// log(e^a + e^{-a}) without overflow.
double log_2cosh(double a) {
    a = std::abs(a);
    return a + std::log1p(std::exp(-2.0 * a));
}

// log(sinh(a) / a), stable through a = 0.
double log_sinh_over(double a) {
    a = std::abs(a);
    if (a < 1e-4) return std::log1p(a * a / 6.0);
    return a + std::log1p(-std::exp(-2.0 * a)) - std::log(2.0 * a);
}

}  // namespace

Complex log_gamma(Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw PoleAtNonPositiveInteger("log_gamma pole at z = " + std::to_string(z.real()));
    if (z.real() >= 0.5) return stirling_log_gamma(z);
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z),
    // with log sin evaluated in log space to survive large |Im z|.
    Complex log_sin;
    if (std::abs(z.imag()) < 10.0) {
        log_sin = std::log(std::sin(kPi * z));
    } else if (z.imag() > 0.0) {
        Complex iz(0.0, 1.0);
        log_sin = iz * kPi * z * -1.0 + std::log(1.0 - std::exp(2.0 * iz * kPi * z)) -
                  std::log(Complex(0.0, 2.0));
    } else {
        Complex iz(0.0, 1.0);
        log_sin = iz * kPi * z + std::log(1.0 - std::exp(-2.0 * iz * kPi * z)) -
                  std::log(Complex(0.0, -2.0));
    }
    return std::log(kPi) - log_sin - stirling_log_gamma(1.0 - z);
}

double log_gamma_ratio_abs(long r, double t) {
    if (r < 1) throw DimensionMismatch("gamma ratio needs r >= 1");
    if (r == 1) return 0.0;
    const double rt2 = static_cast<double>(r) * static_cast<double>(r) * t * t;
    double log_sq;
    if (r % 2 == 1) {
        double prod = 0.0;
        for (long k = 1; k <= (r - 1) / 2; ++k) {
            double h = static_cast<double>(k) - 0.5;
            prod += std::log(h * h + rt2);
        }
        log_sq = (r - 1) * kLog2Pi - prod + log_2cosh(r * kPi * t) -
                 r * log_2cosh(kPi * t);
    } else {
        double prod = 0.0;
        for (long j = 1; j <= r / 2 - 1; ++j) {
            double dj = static_cast<double>(j);
            prod += std::log(dj * dj + rt2);
        }
        // (e^{r pi t} - e^{-r pi t}) / (r t) = 2 pi sinh(r pi t)/(r pi t)
        log_sq = (r - 1) * kLog2Pi - prod + kLog2Pi +
                 log_sinh_over(r * kPi * t) - r * log_2cosh(kPi * t);
    }
    return 0.5 * log_sq;
}

double gamma_ratio_abs(long r, double t) { return std::exp(log_gamma_ratio_abs(r, t)); }

GammaRatioBoundConfig fit_gamma_ratio_bound(long r_max, double t_max, double t_step) {
    double c = -1e300;
    for (long r = 1; r <= r_max; ++r) {
        double rlogr = 0.5 * static_cast<double>(r) * std::log(static_cast<double>(r));
        for (double t = 0.0; t <= t_max + 1e-9; t += t_step) {
            double need = (log_gamma_ratio_abs(r, t) + rlogr +
                           0.5 * (r - 1) * std::log1p(std::abs(t))) /
                          static_cast<double>(r);
            if (need > c) c = need;
        }
    }
    GammaRatioBoundConfig cfg;
    cfg.C = std::ceil(c * 100.0) / 100.0;
    cfg.fitted_over = "r in 1.." + std::to_string(r_max) + ", t in 0:" +
                      std::to_string(t_step) + ":" + std::to_string(t_max);
    return cfg;
}

double gamma_ratio_bound(long r, double t, const GammaRatioBoundConfig& cfg) {
    double lr = static_cast<double>(r);
    return std::exp(-0.5 * lr * std::log(lr) + cfg.C * lr -
                    0.5 * (lr - 1.0) * std::log1p(std::abs(t)));
}

Complex mellin_indicator(double R, Complex s) {
    if (s == Complex(0.0, 0.0)) throw PoleAtZero("mellin_indicator pole at s = 0");
    return std::pow(Complex(R), s) / s;
}

double integrand_envelope(long r, double R, double t, const GammaRatioBoundConfig& cfg) {
    double lr = static_cast<double>(r);
    return std::exp(lr * std::log(R) - 0.5 * lr * std::log(lr) + cfg.C * lr -
                    0.5 * (lr + 1.0) * std::log1p(std::abs(t)));
}

}  // namespace ilz
