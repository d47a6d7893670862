#include "ilz/arakelov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "ilz/errors.hpp"
#include "ilz/gamma_mellin.hpp"
#include "ilz/rng.hpp"

namespace ilz {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr long kAllowlist[] = {3,  4,  5,  7,  8,  9,  11, 12, 13, 15, 16, 20, 21, 24,
                               25, 27, 28, 32, 33, 35, 36, 40, 44, 45, 48, 60, 84};

bool is_prime_power(long m) { return prime_divisors(m).size() == 1; }

// Weight-2 log vectors of the cyclotomic unit generators over all divisors
// m >= 3 of n: (1 - zeta_m^a)/(1 - zeta_m) for prime-power m, 1 - zeta_m^a
// otherwise, one representative per conjugate pair {a, m-a}.
std::vector<Eigen::VectorXd> generator_log_vectors(const CyclotomicField& K) {
    const long n = K.n();
    const auto& embs = K.embeddings();
    const long r2 = K.r2();
    std::vector<Eigen::VectorXd> vecs;
    std::set<std::pair<long, long>> seen;
    for (long m = 3; m <= n; ++m) {
        if (n % m) continue;
        for (long a = 2; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            long key = std::min(a, m - a);
            if (!seen.insert({m, key}).second) continue;
            Eigen::VectorXd row(r2);
            for (long j = 0; j < r2; ++j) {
                // sigma_e(zeta_m) = e^{2 pi i e (n/m) / n}
                auto zme = K.root_power(embs[static_cast<std::size_t>(j)] * (n / m));
                std::complex<double> zma = std::pow(zme, static_cast<double>(a));
                std::complex<double> u =
                    is_prime_power(m) ? (1.0 - zma) / (1.0 - zme) : (1.0 - zma);
                row(j) = 2.0 * std::log(std::abs(u));
            }
            if (row.squaredNorm() > 1e-20) vecs.push_back(std::move(row));
        }
    }
    return vecs;
}

// Textbook floating-point LLL with full Gram-Schmidt recomputation
// (generator counts are small, so the quadratic cost is irrelevant).
void lll_reduce(std::vector<Eigen::VectorXd>& B, double delta = 0.75) {
    const long n = static_cast<long>(B.size());
    if (n < 2) return;
    std::vector<Eigen::VectorXd> star(B.size());
    Eigen::MatrixXd mu = Eigen::MatrixXd::Zero(n, n);
    auto gram_schmidt = [&] {
        for (long i = 0; i < n; ++i) {
            star[static_cast<std::size_t>(i)] = B[static_cast<std::size_t>(i)];
            for (long j = 0; j < i; ++j) {
                mu(i, j) = B[static_cast<std::size_t>(i)].dot(star[static_cast<std::size_t>(j)]) /
                           star[static_cast<std::size_t>(j)].squaredNorm();
                star[static_cast<std::size_t>(i)] -= mu(i, j) * star[static_cast<std::size_t>(j)];
            }
        }
    };
    gram_schmidt();
    long k = 1;
    long guard = 0;
    while (k < n) {
        if (++guard > 100000)
            throw DivergentRegion("LLL failed to converge on the unit generators");
        for (long j = k - 1; j >= 0; --j) {
            double q = std::round(mu(k, j));
            if (q != 0.0) {
                B[static_cast<std::size_t>(k)] -= q * B[static_cast<std::size_t>(j)];
                gram_schmidt();
            }
        }
        if (star[static_cast<std::size_t>(k)].squaredNorm() >=
            (delta - mu(k, k - 1) * mu(k, k - 1)) *
                star[static_cast<std::size_t>(k - 1)].squaredNorm()) {
            ++k;
        } else {
            std::swap(B[static_cast<std::size_t>(k)], B[static_cast<std::size_t>(k - 1)]);
            gram_schmidt();
            k = std::max(k - 1, 1L);
        }
    }
}

}  // namespace

bool field_allowlisted(long n) {
    return std::find(std::begin(kAllowlist), std::end(kAllowlist), n) != std::end(kAllowlist);
}

LogUnitBasis log_unit_basis(const CyclotomicField& K) {
    if (!field_allowlisted(K.n()))
        throw UnsupportedField("n = " + std::to_string(K.n()) +
                               " is outside the class-number-one allowlist");
    LogUnitBasis out;
    out.rank = K.r2() - 1;
    if (out.rank == 0) return out;

    auto gens = generator_log_vectors(K);
    const long r2 = K.r2();
    const long g = static_cast<long>(gens.size());
    double scale = 0.0;
    for (const auto& v : gens) scale = std::max(scale, v.lpNorm<Eigen::Infinity>());
    const double delta = scale * 1e-7;

    // Embed each generator as [log part | delta e_i]; after LLL the rows
    // whose log part collapses are multiplicative relations, the rest span
    // the unit lattice.
    std::vector<Eigen::VectorXd> emb(static_cast<std::size_t>(g));
    for (long i = 0; i < g; ++i) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(r2 + g);
        v.head(r2) = gens[static_cast<std::size_t>(i)];
        v(r2 + i) = delta;
        emb[static_cast<std::size_t>(i)] = std::move(v);
    }
    lll_reduce(emb);
    const double tiny = scale * 1e-5;
    for (const auto& v : emb) {
        Eigen::VectorXd logpart = v.head(r2);
        if (logpart.squaredNorm() > tiny * tiny) out.vectors.push_back(std::move(logpart));
    }
    if (static_cast<long>(out.vectors.size()) != out.rank)
        throw DivergentRegion("unit generator reduction found rank " +
                              std::to_string(out.vectors.size()) + ", expected " +
                              std::to_string(out.rank));

    Eigen::MatrixXd M(out.rank, out.rank);
    for (long i = 0; i < out.rank; ++i)
        for (long j = 0; j < out.rank; ++j)
            M(i, j) = out.vectors[static_cast<std::size_t>(i)](j);
    out.regulator_like = std::abs(M.determinant());
    return out;
}

ArakelovPoint sample_point(const CyclotomicField& K, const LogUnitBasis& basis,
                           std::uint64_t seed, std::uint64_t stream) {
    CounterRng rng(seed, stream);
    const long r2 = K.r2();
    ArakelovPoint p;
    p.lambda = Eigen::VectorXd::Zero(r2);
    for (const auto& v : basis.vectors) p.lambda += rng.next_double() * v;
    p.theta = Eigen::VectorXd(r2);
    for (long j = 0; j < r2; ++j) p.theta(j) = 2.0 * kPi * rng.next_double();
    return p;
}

IdealLatticeReal lattice_of(const CyclotomicField& K, const ArakelovPoint& p) {
    const long d = K.degree();
    const long r2 = K.r2();
    const double scale = std::exp(-std::log(K.abs_disc().get_d()) / (2.0 * d));
    const double sqrt2 = std::numbers::sqrt2;

    std::vector<std::complex<double>> a(static_cast<std::size_t>(r2));
    for (long j = 0; j < r2; ++j)
        a[static_cast<std::size_t>(j)] =
            std::exp(p.lambda(j) / 2.0) *
            std::complex<double>(std::cos(p.theta(j)), std::sin(p.theta(j)));

    std::vector<Eigen::VectorXd> basis(static_cast<std::size_t>(d));
    for (long k = 0; k < d; ++k) {
        Eigen::VectorXd row(d);
        for (long j = 0; j < r2; ++j) {
            auto z = scale * a[static_cast<std::size_t>(j)] *
                     K.root_power(K.embeddings()[static_cast<std::size_t>(j)] * k);
            row(2 * j) = sqrt2 * z.real();
            row(2 * j + 1) = sqrt2 * z.imag();
        }
        basis[static_cast<std::size_t>(k)] = std::move(row);
    }
    Eigen::MatrixXd B(d, d);
    for (long k = 0; k < d; ++k) B.row(k) = basis[static_cast<std::size_t>(k)];
    return IdealLatticeReal{std::move(basis), LatticeGram(B * B.transpose())};
}

long count_points_in_ball(const IdealLatticeReal& L, double R) {
    if (R < 0.0) throw DivergentRegion("ball radius must be non-negative");
    return L.gram.count_points(R * R);
}

double radius_from_volume(long d, double V) {
    double lg = log_gamma(Complex(1.0 + d / 2.0, 0.0)).real();
    return std::exp((std::log(V) + lg - (d / 2.0) * std::log(kPi)) / d);
}

MeanCountResult mean_count_mc(const CyclotomicField& K, double V, long N,
                              std::uint64_t seed) {
    if (V <= 0.0) throw DivergentRegion("ball volume must be positive");
    auto basis = log_unit_basis(K);
    const double R = radius_from_volume(K.degree(), V);
    std::vector<double> vals(static_cast<std::size_t>(N));
    for (long i = 0; i < N; ++i) {
        auto lat = lattice_of(K, sample_point(K, basis, seed, static_cast<std::uint64_t>(i)));
        vals[static_cast<std::size_t>(i)] = static_cast<double>(count_points_in_ball(lat, R));
    }
    MeanCountResult r;
    r.samples = N;
    double sum = 0.0;
    for (double v : vals) sum += v;
    r.mean = sum / static_cast<double>(N);
    double ss = 0.0;
    for (double v : vals) ss += (v - r.mean) * (v - r.mean);
    r.stderr_ = std::sqrt(ss / std::max<long>(N - 1, 1) / static_cast<double>(N));
    return r;
}

}  // namespace ilz
