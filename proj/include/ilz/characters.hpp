#pragma once

#include <complex>
#include <vector>

#include "ilz/cyclo_field.hpp"

namespace ilz {

using Complex = std::complex<double>;

/// Dirichlet character mod `modulus`. Values are stored as exact rational
/// angles (chi(a) = e^{2 pi i angle[a] / angle_den}), so conductor detection
/// and the conductor product are free of rounding.
struct DirichletCharacter {
    long modulus = 1;
    long conductor = 1;
    long angle_den = 1;
    /// angle[a] for a = 0..modulus-1; -1 marks gcd(a, modulus) > 1.
    std::vector<long> angles;

    bool principal() const { return conductor == 1; }

    /// chi(a), zero when a shares a factor with the modulus.
    Complex value(long a) const;

    /// Value of the primitive character chi* inducing chi, defined mod
    /// the conductor; zero when gcd(a, conductor) > 1.
    Complex primitive_value(long a) const;
};

/// All phi(n) characters mod n, the principal one first.
std::vector<DirichletCharacter> characters_mod(long n);

/// Hurwitz zeta for a > 0, Euler-Maclaurin with a 12-term Bernoulli tail.
/// Accurate to ~1e-10 relative for |Im s| <= 200. Throws PoleAtOne at s = 1.
Complex hurwitz_zeta(Complex s, double a);

Complex riemann_zeta(Complex s);

/// Digamma for x > 0.
double digamma(double x);

/// L(s, chi*) through the primitive character inducing chi. For the
/// principal character this is zeta(s) times prod_{p | modulus} (1 - p^{-s}),
/// the local Euler factors removed at the ramified primes.
Complex l_function(const DirichletCharacter& chi, Complex s);

/// zeta_K(s) = prod over characters mod n of L(s, chi*), where the principal
/// factor is the full Riemann zeta. Throws PoleAtOne at s = 1.
Complex dedekind_zeta(const CyclotomicField& K, Complex s);

/// Residue of zeta_K at s = 1, as the product of L(1, chi*) over the
/// non-principal characters, each evaluated by the digamma formula.
double dedekind_residue(const CyclotomicField& K);

/// Exact check that the conductors of all characters mod n multiply to the
/// field discriminant (conductor-discriminant formula).
bool conductor_product_matches_disc(const CyclotomicField& K);

struct SubconvexityRow {
    double t = 0.0;
    double zeta_abs = 0.0;         // |zeta_K(1/2 + it)|
    double convexity_curve = 0.0;  // Delta^{1/4} (|t|+1)^{d/4}
    double py_curve = 0.0;         // Delta^{1/6} (|t|+1)^{d/6}
};

/// Critical-line profile of |zeta_K| against the convexity and
/// Petrov-Young shaped curves. Descriptive only: the true bounds carry
/// implicit constants, so no inequality between the columns is claimed.
/// Throws OutOfAccuracyEnvelope when some |t| exceeds 200.
std::vector<SubconvexityRow> subconvexity_profile(const CyclotomicField& K,
                                                  const std::vector<double>& t_grid);

}  // namespace ilz
