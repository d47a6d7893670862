#include "ilz/packing.hpp"

#include <cmath>

#include "ilz/arakelov.hpp"
#include "ilz/errors.hpp"

namespace ilz {

PackingCertificate certified_volume_bound(const CyclotomicField& K, double margin) {
    if (!field_allowlisted(K.n()))
        throw UnsupportedField("n = " + std::to_string(K.n()) +
                               " is outside the class-number-one allowlist");
    const double n = static_cast<double>(K.n());
    if (margin < 0.0) margin = 0.01 * n;

    ErrorTermEvaluator ev(K, 0.5, 60.0);
    auto certified = [&](double V) {
        auto r = ev.evaluate(V);
        return V + std::abs(r.epsilon) + r.quad_error_est + r.tail_bound <= n - margin;
    };

    double lo = 1e-4 * n;
    if (!certified(lo))
        throw NoPositiveBound("even a vanishing ball volume fails the mod-n gap for n = " +
                              std::to_string(K.n()));
    double hi = n;
    while (hi - lo > 1e-4 * n) {
        double mid = 0.5 * (lo + hi);
        (certified(mid) ? lo : hi) = mid;
    }

    auto r = ev.evaluate(lo);
    PackingCertificate cert;
    cert.v_star = lo;
    cert.epsilon = r.epsilon;
    cert.quad_error_est = r.quad_error_est;
    cert.tail_bound = r.tail_bound;
    cert.margin = margin;
    cert.sigma = r.sigma;
    cert.T = r.T;
    return cert;
}

std::vector<PrimorialRow> primorial_table(long k_max) {
    static const long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    if (k_max < 1) throw DimensionMismatch("primorial table needs k_max >= 1");
    if (k_max > 15)
        throw Overflow("primorial exceeds 64 bits beyond k = 15, got k_max = " +
                       std::to_string(k_max));
    std::vector<PrimorialRow> rows;
    unsigned long long n = 1, phi = 1;
    for (long k = 1; k <= k_max; ++k) {
        auto p = static_cast<unsigned long long>(kPrimes[k - 1]);
        n *= p;
        phi *= p - 1;
        PrimorialRow row;
        row.k = k;
        row.n = n;
        row.phi = phi;
        row.ratio = static_cast<double>(n) / static_cast<double>(phi);
        row.phi_loglog =
            phi > 1 ? static_cast<double>(phi) * std::log(std::log(static_cast<double>(phi)))
                    : 0.0;
        rows.push_back(row);
    }
    return rows;
}

double stark_floor(const CyclotomicField& K) {
    const double d = static_cast<double>(K.degree());
    return 0.001448 / (d * std::exp(std::log(K.abs_disc().get_d()) / d));
}

}  // namespace ilz
