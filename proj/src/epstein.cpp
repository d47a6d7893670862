#include "ilz/epstein.hpp"

#include <cmath>
#include <numbers>

#include "ilz/errors.hpp"
#include "ilz/gamma_mellin.hpp"

namespace ilz {

namespace {

constexpr double kPi = std::numbers::pi;

Complex incomplete_gamma_cf(Complex a, double x) {
    // Lentz evaluation of Gamma(a,x) = e^{-x} x^a / (x+1-a - 1(1-a)/(x+3-a - ...)).
    const double tiny = 1e-300;
    Complex b = x + 1.0 - a;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i <= 300; ++i) {
        Complex an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        Complex delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x)) * h;
}

Complex incomplete_gamma_series(Complex a, double x) {
    // Lower function gamma(a,x) = x^a e^{-x} sum x^n / (a (a+1) ... (a+n)),
    // then subtract from Gamma(a).
    Complex term = 1.0 / a;
    Complex sum = term;
    for (int n = 1; n <= 500; ++n) {
        term *= x / (a + static_cast<double>(n));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    Complex lower = sum * std::exp(-x + a * std::log(x));
    return std::exp(log_gamma(a)) - lower;
}

// Exponential integral E1(x) = Gamma(0, x) for 0 < x <= 1 (larger x goes
// through the continued fraction).
double e1_series(double x) {
    constexpr double kEulerGamma = 0.5772156649015329;
    double sum = 0.0, term = 1.0;
    for (int k = 1; k <= 40; ++k) {
        term *= -x / k;
        sum -= term / k;
        if (std::abs(term) < 1e-18) break;
    }
    return -kEulerGamma - std::log(x) + sum;
}

// Integer orders admit closed forms; the non-positive ones walk down from
// E1 with Gamma(a-1,x) = (Gamma(a,x) - x^{a-1} e^{-x})/(a-1).
double incomplete_gamma_int(long m, double x) {
    if (m > 0) {
        double sum = 1.0, term = 1.0, fact = 1.0;
        for (long k = 1; k < m; ++k) {
            term *= x / static_cast<double>(k);
            sum += term;
            fact *= static_cast<double>(k);
        }
        return fact * std::exp(-x) * sum;
    }
    double g = e1_series(x);
    double p = std::exp(-x) / x;  // x^{a-1} e^{-x} at a = 0
    for (long a = 0; a > m; --a) {
        g = (g - p) / static_cast<double>(a - 1);
        p /= x;
    }
    return g;
}

}  // namespace

Complex upper_incomplete_gamma(Complex a, double x) {
    if (x <= 0.0) throw DivergentRegion("upper incomplete gamma needs x > 0");
    const bool integral =
        a.imag() == 0.0 && a.real() == std::floor(a.real()) && std::abs(a.real()) < 200.0;
    if (integral && a.real() > 0.0)
        return incomplete_gamma_int(static_cast<long>(a.real()), x);
    if (x > std::abs(a) + 1.0) return incomplete_gamma_cf(a, x);
    if (integral) return incomplete_gamma_int(static_cast<long>(a.real()), x);
    return incomplete_gamma_series(a, x);
}

EpsteinDirectResult epstein_direct(const LatticeGram& L, Complex s, double cutoff_radius) {
    const double d = static_cast<double>(L.dim());
    if (s.real() <= d)
        throw DivergentRegion("Epstein direct sum requires Re s > d = " +
                              std::to_string(L.dim()));
    Complex sum = 0.0;
    L.enumerate_short_vectors(cutoff_radius * cutoff_radius,
                              [&](const std::vector<long>&, double q) {
                                  sum += 2.0 * std::pow(Complex(q), -s / 2.0);
                              });
    // Radial integral estimate of the omitted region:
    // (1/covol) * surface(S^{d-1}) * R^{d-s} / (s - d).
    double log_surface = std::log(2.0) + (d / 2.0) * std::log(kPi) -
                         log_gamma(Complex(d / 2.0)).real();
    Complex tail = std::exp(Complex(log_surface)) *
                   std::pow(Complex(cutoff_radius), d - s) / (s - d) / L.covolume();
    EpsteinDirectResult r;
    r.value = sum + tail;
    r.tail_estimate = std::abs(tail);
    return r;
}

namespace {

// sum over nonzero v of (pi q(v))^{-a} Gamma(a, pi q(v)), pairs folded,
// with the enumeration radius grown until a shell is negligible.
Complex theta_tail_sum(const LatticeGram& L, Complex a) {
    double bound = 12.0;
    Complex prev = 0.0;
    for (int iter = 0; iter < 12; ++iter) {
        Complex sum = 0.0;
        L.enumerate_short_vectors(bound, [&](const std::vector<long>&, double q) {
            double x = kPi * q;
            sum += 2.0 * std::pow(Complex(x), -a) * upper_incomplete_gamma(a, x);
        });
        if (iter > 0 && std::abs(sum - prev) <= 1e-14 * (1.0 + std::abs(sum)))
            return sum;
        prev = sum;
        bound += 4.0;
    }
    return prev;
}

Complex completed_core(const LatticeGram& L, Complex s) {
    const double d = static_cast<double>(L.dim());
    const double V = L.covolume();
    Complex total = theta_tail_sum(L, s / 2.0);
    total += theta_tail_sum(L.dual(), (d - s) / 2.0) / V;
    total += -2.0 / s + 2.0 / (V * (s - d));
    return total;
}

}  // namespace

Complex epstein_continued(const LatticeGram& L, Complex s) {
    const double d = static_cast<double>(L.dim());
    if (s == Complex(d, 0.0))
        throw PoleAtD("Epstein zeta has its pole at s = d = " + std::to_string(L.dim()));
    if (s == Complex(0.0, 0.0)) return -1.0;
    Complex cstar = completed_core(L, s);
    // Remove the completion factor pi^{-s/2} Gamma(s/2).
    return cstar * std::exp((s / 2.0) * std::log(kPi) - log_gamma(s / 2.0));
}

Complex completed_epstein(const LatticeGram& L, Complex s) {
    const double d = static_cast<double>(L.dim());
    if (std::abs(L.covolume() - 1.0) > 1e-9)
        throw NotUnitCovolume("completed Epstein form is defined for unit covolume; got " +
                              std::to_string(L.covolume()));
    if (s == Complex(0.0, 0.0)) throw PoleAtZero("completed Epstein form has a pole at s = 0");
    if (s == Complex(d, 0.0))
        throw PoleAtD("completed Epstein form has a pole at s = d = " +
                      std::to_string(L.dim()));
    return completed_core(L, s);
}

}  // namespace ilz
