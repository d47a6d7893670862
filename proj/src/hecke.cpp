#include "ilz/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "ilz/arakelov.hpp"
#include "ilz/epstein.hpp"
#include "ilz/errors.hpp"

namespace ilz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093453;

struct GlRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on the Legendre polynomial.
GlRule gauss_legendre(int m) {
    GlRule rule;
    rule.nodes.resize(static_cast<std::size_t>(m));
    rule.weights.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (m + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= m; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = m * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= m; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = m * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GlRule& gl16() {
    static const GlRule rule = gauss_legendre(16);
    return rule;
}

// zeta_K as a product of L-functions with the character group prebuilt.
class DedekindEvaluator {
public:
    explicit DedekindEvaluator(const CyclotomicField& K)
        : chars_(characters_mod(K.n())) {}

    Complex operator()(Complex s) const {
        Complex prod = 1.0;
        for (const auto& chi : chars_)
            prod *= chi.principal() ? riemann_zeta(s) : l_function(chi, s);
        return prod;
    }

private:
    std::vector<DirichletCharacter> chars_;
};

}  // namespace

double arakelov_volume(const CyclotomicField& K) {
    return std::sqrt(K.abs_disc().get_d()) * dedekind_residue(K);
}

double hecke_rhs(const CyclotomicField& K, double s) {
    if (s == 1.0) throw PoleAtOne("hecke_rhs has the zeta_K pole at s = 1");
    if (s < 1.0) throw DivergentRegion("hecke_rhs requires s > 1");
    const long d = K.degree();
    const long r2 = K.r2();
    const double log_disc = std::log(K.abs_disc().get_d());
    double zk = dedekind_zeta(K, Complex(s, 0.0)).real();
    double log_rest = -std::log(arakelov_volume(K)) + (s * d / 2.0) * std::log(kPi) -
                      log_gamma(Complex(s * d / 2.0, 0.0)).real() - std::log(d / 2.0) +
                      (s / 2.0) * log_disc - s * r2 * kLog2Pi +
                      r2 * log_gamma(Complex(s, 0.0)).real() + r2 * kLog2Pi;
    return zk * std::exp(log_rest);
}

McEstimate hecke_lhs_mc(const CyclotomicField& K, double s, long N, std::uint64_t seed) {
    if (s <= 1.0) throw DivergentRegion("hecke_lhs_mc requires s > 1");
    auto basis = log_unit_basis(K);
    const double ds = static_cast<double>(K.degree()) * s;
    std::vector<double> vals(static_cast<std::size_t>(N));
    for (long i = 0; i < N; ++i) {
        auto lat = lattice_of(K, sample_point(K, basis, seed, static_cast<std::uint64_t>(i)));
        vals[static_cast<std::size_t>(i)] = epstein_continued(lat.gram, Complex(ds, 0.0)).real();
    }
    McEstimate e;
    double sum = 0.0;
    for (double v : vals) sum += v;
    e.mean = sum / static_cast<double>(N);
    double ss = 0.0;
    for (double v : vals) ss += (v - e.mean) * (v - e.mean);
    e.stderr_ = std::sqrt(ss / std::max<long>(N - 1, 1) / static_cast<double>(N));
    return e;
}

namespace {

// Shared per-field Dedekind evaluator for the contour nodes.
const DedekindEvaluator& dedekind_for(const CyclotomicField& K) {
    thread_local long cached_n = 0;
    thread_local std::unique_ptr<DedekindEvaluator> ev;
    if (cached_n != K.n()) {
        ev = std::make_unique<DedekindEvaluator>(K);
        cached_n = K.n();
    }
    return *ev;
}

}  // namespace

ErrorTermEvaluator::ErrorTermEvaluator(const CyclotomicField& K, double sigma, double T)
    : K_(K), sigma_(sigma), T_(T), r2_(K.r2()) {
    if (r2_ < 4)
        throw InsufficientDecay("error-term contour needs r2 >= 4, field has r2 = " +
                                std::to_string(r2_));
    if (sigma < 0.5 || sigma >= 1.0)
        throw BadSigma("sigma must lie in [1/2, 1), got " + std::to_string(sigma));
    if (T <= 0.0) throw DivergentRegion("truncation height T must be positive");
    log_disc_ = std::log(K.abs_disc().get_d());
    prefactor_log_ = std::log(2.0) + r2_ * kLog2Pi - std::log(arakelov_volume(K)) -
                     std::log(kPi);
    cfg_ = fit_gamma_ratio_bound();

    // Oscillation frequency estimate at the largest radius the packing
    // bisection can request (V = n), plus the gamma-ratio phase speed.
    double rmax = radius_from_volume(K.degree(), static_cast<double>(K.n()));
    double omega = 0.5 * log_disc_ + 2.0 * r2_ * std::abs(std::log(rmax));
    auto phase = [&](double t) {
        Complex s(sigma_, t);
        return (static_cast<double>(r2_) * log_gamma(s) - log_gamma(s * static_cast<double>(r2_)) -
                s * static_cast<double>(r2_) * std::log(2.0))
            .imag();
    };
    double h = 1e-4;
    for (double t : {1.0, T_ / 2.0, T_}) {
        double dp = std::abs(phase(t + h) - phase(t - h)) / (2.0 * h);
        omega = std::max(omega, 0.5 * log_disc_ + 2.0 * r2_ * std::abs(std::log(rmax)) + dp);
    }
    double width = kPi / (4.0 * omega);
    panels_ = std::max<long>(8, static_cast<long>(std::ceil(T_ / width)));
}

Complex ErrorTermEvaluator::zeta_at(double t) {
    auto it = zeta_cache_.find(t);
    if (it != zeta_cache_.end()) return it->second;
    Complex z = dedekind_for(K_)(Complex(sigma_, t));
    zeta_cache_.emplace(t, z);
    return z;
}

Complex ErrorTermEvaluator::g_factor(Complex s, double log_r) const {
    double r2 = static_cast<double>(r2_);
    Complex lg = (s / 2.0) * log_disc_ + 2.0 * s * r2 * log_r - std::log(2.0 * s * r2) +
                 r2 * log_gamma(s) - s * r2 * std::log(2.0) - log_gamma(s * r2);
    return std::exp(lg);
}

ErrorTermResult ErrorTermEvaluator::evaluate(double V) {
    if (V <= 0.0) throw DivergentRegion("ball volume must be positive");
    const double log_r = std::log(radius_from_volume(K_.degree(), V));
    const auto& rule = gl16();

    auto integral_at = [&](long panels, long* nodes_out) {
        double acc = 0.0;
        double h = T_ / static_cast<double>(panels);
        long nodes = 0;
        for (long p = 0; p < panels; ++p) {
            double mid = (static_cast<double>(p) + 0.5) * h;
            double part = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                double t = mid + 0.5 * h * rule.nodes[i];
                Complex s(sigma_, t);
                part += rule.weights[i] * (zeta_at(t) * g_factor(s, log_r)).real();
                ++nodes;
            }
            acc += 0.5 * h * part;
        }
        if (nodes_out) *nodes_out = nodes;
        return acc;
    };

    long panels = panels_;
    long nodes = 0;
    double prev = integral_at(panels, &nodes);
    double cur = prev, quad_err = 0.0;
    for (int level = 0; level < 6; ++level) {
        panels *= 2;
        long n2 = 0;
        cur = integral_at(panels, &n2);
        nodes += n2;
        quad_err = std::abs(cur - prev);
        if (quad_err < 1e-9 * (1.0 + std::abs(cur))) break;
        prev = cur;
    }

    ErrorTermResult res;
    res.sigma = sigma_;
    res.T = T_;
    res.n_nodes = nodes;
    const double prefactor = std::exp(prefactor_log_);
    res.epsilon = prefactor * cur;
    res.quad_error_est = prefactor * quad_err;

    // Hermitian-symmetry diagnostic: g at -t against the conjugate at +t,
    // both through independent zeta evaluations.
    for (double t : {T_ / 7.0, T_ / 3.0, 0.8 * T_}) {
        Complex up = dedekind_for(K_)(Complex(sigma_, t)) * g_factor(Complex(sigma_, t), log_r);
        Complex dn = dedekind_for(K_)(Complex(sigma_, -t)) * g_factor(Complex(sigma_, -t), log_r);
        double rel = std::abs(dn - std::conj(up)) / (1.0 + std::abs(up));
        res.im_residual = std::max(res.im_residual, rel);
    }

    // Heuristic tail: envelope integral from T with an empirical zeta_K
    // ceiling sampled on [T, 2T], extrapolated flatly.
    if (zeta_ceiling_ < 0.0) {
        zeta_ceiling_ = 0.0;
        for (int i = 0; i < 32; ++i) {
            double t = T_ * (1.0 + static_cast<double>(i) / 31.0);
            zeta_ceiling_ = std::max(zeta_ceiling_, std::abs(zeta_at(t)));
        }
    }
    double r_eff = std::exp(2.0 * sigma_ * log_r);
    double env_tail = integrand_envelope(r2_, r_eff, T_, cfg_) * (1.0 + T_) * 2.0 /
                      (static_cast<double>(r2_) - 1.0);
    res.tail_bound = prefactor * std::exp(sigma_ / 2.0 * log_disc_) * zeta_ceiling_ * env_tail;
    return res;
}

ErrorTermResult error_term(const CyclotomicField& K, double V, double sigma, double T) {
    ErrorTermEvaluator ev(K, sigma, T);
    return ev.evaluate(V);
}

double mean_count_prediction(const CyclotomicField& K, double V) {
    return 1.0 + V + error_term(K, V).epsilon;
}

}  // namespace ilz
