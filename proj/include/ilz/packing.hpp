#pragma once

#include <vector>

#include "ilz/hecke.hpp"

namespace ilz {

/// Certificate record for the finite-n packing bound. Numerical certificate:
/// sound relative to the quadrature estimate and the heuristic tail bound,
/// all of which are reported.
struct PackingCertificate {
    double v_star = 0.0;
    double epsilon = 0.0;
    double quad_error_est = 0.0;
    double tail_bound = 0.0;
    double margin = 0.0;
    double sigma = 0.5;
    double T = 60.0;
};

/// Largest V (bisection, resolution 1e-4 n) with
///   V + |eps(V)| + quad_error_est + tail_bound <= n - margin.
/// Then the mean count 1 + V + eps stays below 1 + n, so some lattice meets
/// the ball only in 0 and c_d >= V. margin < 0 selects the default 0.01 n.
/// Throws InsufficientDecay, UnsupportedField, NoPositiveBound.
PackingCertificate certified_volume_bound(const CyclotomicField& K, double margin = -1.0);

struct PrimorialRow {
    long k = 0;
    unsigned long long n = 1;
    unsigned long long phi = 1;
    double ratio = 0.0;        // n / phi(n)
    double phi_loglog = 0.0;   // phi(n) log log phi(n), 0 while undefined
};

/// Primorial dimension table: n = product of the first k primes.
/// Exact 64-bit arithmetic; k_max > 15 throws Overflow.
std::vector<PrimorialRow> primorial_table(long k_max);

/// Stark's residue lower bound 0.001448 / (d |Delta|^{1/d}).
double stark_floor(const CyclotomicField& K);

}  // namespace ilz
