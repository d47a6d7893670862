#pragma once

#include <complex>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Dense>

namespace ilz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Q(zeta_n) as exact rational coordinates on the power basis
/// 1, zeta, ..., zeta^{d-1}. Arithmetic never rounds; floating point enters
/// only through the Minkowski embedding.
struct FieldElement {
    std::vector<Rational> coeffs;
};

/// Image of a field element under the r2 complex embeddings (one per
/// conjugate pair).
struct EmbeddedVector {
    std::vector<std::complex<double>> components;

    /// Trace-form square norm q(x) = Tr(x conj(x)) = 2 * sum |sigma_j(x)|^2.
    double q() const {
        double s = 0.0;
        for (const auto& z : components) s += std::norm(z);
        return 2.0 * s;
    }
};

/// Immutable descriptor of K = Q(zeta_n), totally imaginary (n >= 3,
/// n != 2 mod 4). Safe to share across threads after construction.
class CyclotomicField {
public:
    long n() const { return n_; }
    long degree() const { return degree_; }
    long r2() const { return r2_; }
    const Integer& abs_disc() const { return abs_disc_; }
    const std::vector<Integer>& phi_coeffs() const { return phi_coeffs_; }
    /// Embedding exponents a_j (ascending, a_j < n/2, one per conjugate pair).
    const std::vector<long>& embeddings() const { return embeddings_; }
    /// Order of the torsion unit group mu(K): 2n for odd n, n for even n.
    long torsion_order() const { return n_ % 2 ? 2 * n_ : n_; }

    /// e^{2 pi i k / n}, derived from one high-accuracy primitive root.
    std::complex<double> root_power(long k) const {
        k %= n_;
        if (k < 0) k += n_;
        return roots_[static_cast<std::size_t>(k)];
    }

    /// Tr(zeta^k) as an exact integer (Ramanujan sum c_n(k)).
    const Integer& zeta_trace(long k) const {
        k %= n_;
        if (k < 0) k += n_;
        return zeta_traces_[static_cast<std::size_t>(k)];
    }

    friend CyclotomicField create_field(long n);

private:
    long n_ = 0, degree_ = 0, r2_ = 0;
    std::vector<Integer> phi_coeffs_;
    std::vector<long> embeddings_;
    Integer abs_disc_;
    std::vector<std::complex<double>> roots_;
    std::vector<Integer> zeta_traces_;
};

/// Builds the field descriptor. Throws TooSmall for n < 3 and NotNormalized
/// for n = 2 mod 4 (use n/2, which generates the same field).
CyclotomicField create_field(long n);

/// Coefficients of the cyclotomic polynomial Phi_m, constant term first.
std::vector<Integer> cyclotomic_polynomial(long m);

long euler_phi(long m);
std::vector<long> prime_divisors(long m);

FieldElement fe_zero(const CyclotomicField& K);
FieldElement fe_one(const CyclotomicField& K);
/// zeta_n^k as a field element.
FieldElement fe_zeta_power(const CyclotomicField& K, long k);
FieldElement fe_from_integers(const CyclotomicField& K, const std::vector<long>& c);

FieldElement add(const FieldElement& x, const FieldElement& y, const CyclotomicField& K);
FieldElement sub(const FieldElement& x, const FieldElement& y, const CyclotomicField& K);
/// Exact product reduced mod Phi_n.
FieldElement mul(const FieldElement& x, const FieldElement& y, const CyclotomicField& K);
/// Complex conjugation zeta -> zeta^{-1}.
FieldElement conj_elem(const FieldElement& x, const CyclotomicField& K);

/// Field norm N(x) = prod_j |sigma_j(x)|^2, exact, via Res(Phi_n, f_x).
Rational norm(const FieldElement& x, const CyclotomicField& K);
/// Exact trace Tr(x).
Rational trace(const FieldElement& x, const CyclotomicField& K);
/// Exact trace pairing Tr(x * conj(y)).
Rational trace_pairing(const FieldElement& x, const FieldElement& y, const CyclotomicField& K);

EmbeddedVector embed(const FieldElement& x, const CyclotomicField& K);

/// Trace-form Gram matrix of a d-element basis, entry (i,j) = Tr(b_i conj(b_j))
/// evaluated through the embeddings. Throws DimensionMismatch.
Eigen::MatrixXd gram_matrix(const std::vector<FieldElement>& basis, const CyclotomicField& K);

}  // namespace ilz
