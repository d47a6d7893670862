#include "ilz/cyclo_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ilz/errors.hpp"

namespace ilz {

namespace {

// Exact division of integer polynomials, used to peel Phi_m out of x^m - 1.
// Both inputs are monic up to sign here, so the quotient stays integral.
std::vector<Integer> poly_divide_exact(std::vector<Integer> num,
                                       const std::vector<Integer>& den) {
    const auto dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Integer> quot(dn - dd + 1);
    for (std::size_t i = dn - dd + 1; i-- > 0;) {
        Integer c = num[i + dd] / den[dd];
        quot[i] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    return quot;
}

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the (monic) minimal polynomial.
std::vector<Rational> poly_mod(std::vector<Rational> p,
                               const std::vector<Integer>& phi) {
    const std::size_t d = phi.size() - 1;
    while (p.size() > d) {
        Rational c = p.back();
        p.pop_back();
        if (c == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            p[p.size() - d + j] -= c * Rational(phi[j]);
    }
    trim(p);
    return p;
}

}  // namespace

long euler_phi(long m) {
    long result = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> prime_divisors(long m) {
    std::vector<long> ps;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        ps.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

std::vector<Integer> cyclotomic_polynomial(long m) {
    if (m == 1) return {Integer(-1), Integer(1)};
    // x^m - 1 divided by the product of Phi_e over proper divisors e of m.
    std::vector<Integer> num(static_cast<std::size_t>(m) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (long e = 1; e < m; ++e)
        if (m % e == 0) num = poly_divide_exact(std::move(num), cyclotomic_polynomial(e));
    return num;
}

CyclotomicField create_field(long n) {
    if (n < 3) throw TooSmall("cyclotomic modulus must be at least 3, got " + std::to_string(n));
    if (n % 4 == 2)
        throw NotNormalized("modulus " + std::to_string(n) +
                            " is 2 mod 4; the normalized modulus for the same field is " +
                            std::to_string(n / 2));
    CyclotomicField K;
    K.n_ = n;
    K.degree_ = euler_phi(n);
    K.r2_ = K.degree_ / 2;
    K.phi_coeffs_ = cyclotomic_polynomial(n);

    // |disc| = n^d / prod_{p | n} p^{d/(p-1)}, exact.
    Integer disc;
    mpz_ui_pow_ui(disc.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(K.degree_));
    for (long p : prime_divisors(n)) {
        Integer q;
        mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(K.degree_ / (p - 1)));
        disc /= q;
    }
    K.abs_disc_ = disc;

    for (long a = 1; 2 * a < n; ++a)
        if (std::gcd(a, n) == 1) K.embeddings_.push_back(a);

    K.roots_.resize(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        K.roots_[static_cast<std::size_t>(k)] = {std::cos(ang), std::sin(ang)};
    }

    // Tr(zeta^k) = mu(n/g) * phi(n) / phi(n/g) with g = gcd(n, k).
    K.zeta_traces_.resize(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        long g = std::gcd(n, k == 0 ? n : k);
        long m = n / g;
        long mu = 1;
        long rest = m;
        for (long p : prime_divisors(m)) {
            if (rest % (p * p) == 0) { mu = 0; break; }
            mu = -mu;
        }
        K.zeta_traces_[static_cast<std::size_t>(k)] =
            Integer(mu) * (K.degree_ / euler_phi(m));
    }
    return K;
}

FieldElement fe_zero(const CyclotomicField& K) {
    return {std::vector<Rational>(static_cast<std::size_t>(K.degree()))};
}

FieldElement fe_one(const CyclotomicField& K) {
    FieldElement x = fe_zero(K);
    x.coeffs[0] = 1;
    return x;
}

FieldElement fe_zeta_power(const CyclotomicField& K, long k) {
    k %= K.n();
    if (k < 0) k += K.n();
    std::vector<Rational> p(static_cast<std::size_t>(k) + 1);
    p.back() = 1;
    auto r = poly_mod(std::move(p), K.phi_coeffs());
    r.resize(static_cast<std::size_t>(K.degree()));
    return {std::move(r)};
}

FieldElement fe_from_integers(const CyclotomicField& K, const std::vector<long>& c) {
    if (c.size() != static_cast<std::size_t>(K.degree()))
        throw DimensionMismatch("expected " + std::to_string(K.degree()) +
                                " coordinates, got " + std::to_string(c.size()));
    FieldElement x = fe_zero(K);
    for (std::size_t i = 0; i < c.size(); ++i) x.coeffs[i] = c[i];
    return x;
}

FieldElement add(const FieldElement& x, const FieldElement& y, const CyclotomicField& K) {
    FieldElement z = fe_zero(K);
    for (std::size_t i = 0; i < z.coeffs.size(); ++i) z.coeffs[i] = x.coeffs[i] + y.coeffs[i];
    return z;
}

FieldElement sub(const FieldElement& x, const FieldElement& y, const CyclotomicField& K) {
    FieldElement z = fe_zero(K);
    for (std::size_t i = 0; i < z.coeffs.size(); ++i) z.coeffs[i] = x.coeffs[i] - y.coeffs[i];
    return z;
}

FieldElement mul(const FieldElement& x, const FieldElement& y, const CyclotomicField& K) {
    const std::size_t d = static_cast<std::size_t>(K.degree());
    std::vector<Rational> p(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (y.coeffs[j] != 0) p[i + j] += x.coeffs[i] * y.coeffs[j];
    }
    auto r = poly_mod(std::move(p), K.phi_coeffs());
    r.resize(d);
    return {std::move(r)};
}

FieldElement conj_elem(const FieldElement& x, const CyclotomicField& K) {
    // zeta^k -> zeta^{n-k}; the resulting exponents stay below n, then reduce.
    std::vector<Rational> p(static_cast<std::size_t>(K.n()));
    p[0] = x.coeffs[0];
    for (long k = 1; k < K.degree(); ++k)
        p[static_cast<std::size_t>(K.n() - k)] = x.coeffs[static_cast<std::size_t>(k)];
    auto r = poly_mod(std::move(p), K.phi_coeffs());
    r.resize(static_cast<std::size_t>(K.degree()));
    return {std::move(r)};
}

Rational norm(const FieldElement& x, const CyclotomicField& K) {
    // Res(Phi_n, f) = prod over roots of Phi_n of f(root); Phi_n is monic.
    std::vector<Rational> A(K.phi_coeffs().size());
    for (std::size_t i = 0; i < A.size(); ++i) A[i] = Rational(K.phi_coeffs()[i]);
    std::vector<Rational> B = x.coeffs;
    trim(B);
    if (B.empty()) return 0;

    Rational res = 1;
    bool negate = false;
    while (true) {
        const auto da = A.size() - 1, db = B.size() - 1;
        if (db == 0) {
            Rational p = 1;
            for (std::size_t i = 0; i < da; ++i) p *= B[0];
            res *= p;
            break;
        }
        // A mod B with leading-coefficient powers folded into the result.
        std::vector<Rational> R = A;
        for (std::size_t i = da - db + 1; i-- > 0;) {
            Rational c = R[i + db] / B[db];
            R[i + db] = 0;
            if (c == 0) continue;
            for (std::size_t j = 0; j < db; ++j) R[i + j] -= c * B[j];
        }
        trim(R);
        if (R.empty()) return 0;
        if ((da % 2) && (db % 2)) negate = !negate;
        Rational lc = 1;
        for (std::size_t i = 0; i < da - (R.size() - 1); ++i) lc *= B[db];
        res *= lc;
        A = std::move(B);
        B = std::move(R);
    }
    if (negate) res = -res;
    res.canonicalize();
    return res;
}

Rational trace(const FieldElement& x, const CyclotomicField& K) {
    Rational t = 0;
    for (long k = 0; k < K.degree(); ++k)
        t += x.coeffs[static_cast<std::size_t>(k)] * Rational(K.zeta_trace(k));
    return t;
}

Rational trace_pairing(const FieldElement& x, const FieldElement& y, const CyclotomicField& K) {
    return trace(mul(x, conj_elem(y, K), K), K);
}

EmbeddedVector embed(const FieldElement& x, const CyclotomicField& K) {
    EmbeddedVector v;
    v.components.reserve(K.embeddings().size());
    for (long a : K.embeddings()) {
        std::complex<double> s = 0.0;
        for (long k = 0; k < K.degree(); ++k)
            s += x.coeffs[static_cast<std::size_t>(k)].get_d() * K.root_power(a * k);
        v.components.push_back(s);
    }
    return v;
}

Eigen::MatrixXd gram_matrix(const std::vector<FieldElement>& basis, const CyclotomicField& K) {
    const long d = K.degree();
    if (basis.size() != static_cast<std::size_t>(d))
        throw DimensionMismatch("trace-form Gram needs " + std::to_string(d) +
                                " basis elements, got " + std::to_string(basis.size()));
    std::vector<EmbeddedVector> emb(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) emb[i] = embed(basis[i], K);
    Eigen::MatrixXd G(d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j <= i; ++j) {
            double s = 0.0;
            for (long m = 0; m < K.r2(); ++m)
                s += (emb[static_cast<std::size_t>(i)].components[static_cast<std::size_t>(m)] *
                      std::conj(emb[static_cast<std::size_t>(j)].components[static_cast<std::size_t>(m)]))
                         .real();
            G(i, j) = G(j, i) = 2.0 * s;
        }
    return G;
}

}  // namespace ilz
