#include "ilz/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "ilz/errors.hpp"

namespace ilz {

namespace {

struct Generator {
    long g = 1;      // generator mod n
    long order = 1;  // its order; the group is the direct product of these
};

long pow_mod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = static_cast<long>(static_cast<__int128>(r) * b % m);
        b = static_cast<long>(static_cast<__int128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

long inverse_mod(long a, long m) {
    long t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + m : t;
}

long primitive_root(long pk, long p) {
    long phi = pk / p * (p - 1);
    auto qs = prime_divisors(phi);
    for (long g = 2; g < pk; ++g) {
        if (std::gcd(g, pk) != 1) continue;
        bool ok = true;
        for (long q : qs)
            if (pow_mod(g, phi / q, pk) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw UnsupportedField("no primitive root mod " + std::to_string(pk));
}

// Independent generators of (Z/n)^* with their orders: CRT-lifted primitive
// roots at odd prime powers, {-1, 5} at powers of two.
std::vector<Generator> group_structure(long n) {
    std::vector<Generator> gens;
    long rest = n;
    for (long p : prime_divisors(n)) {
        long pk = 1;
        while (rest % p == 0) { pk *= p; rest /= p; }
        std::vector<Generator> local;
        if (p == 2) {
            if (pk == 4) local.push_back({3, 2});
            else if (pk >= 8) {
                local.push_back({pk - 1, 2});
                local.push_back({5, pk / 4});
            }
        } else {
            local.push_back({primitive_root(pk, p), pk / p * (p - 1)});
        }
        long m2 = n / pk;
        for (auto [g, o] : local) {
            long lifted = m2 > 1
                ? (static_cast<long>((static_cast<__int128>(g) * m2 % n) * inverse_mod(m2 % pk, pk) % n) +
                   static_cast<long>((static_cast<__int128>(pk) * inverse_mod(pk % m2, m2)) % n)) % n
                : g % n;
            gens.push_back({lifted, o});
        }
    }
    return gens;
}

// Discrete logarithms of every unit mod n on the generator system,
// filled by breadth-first multiplication from 1.
std::vector<std::vector<long>> dlog_table(long n, const std::vector<Generator>& gens) {
    std::vector<std::vector<long>> rep(static_cast<std::size_t>(n));
    rep[1 % n] = std::vector<long>(gens.size(), 0);
    std::vector<long> frontier{1 % n};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long x : frontier)
            for (std::size_t i = 0; i < gens.size(); ++i) {
                long y = static_cast<long>(static_cast<__int128>(x) * gens[i].g % n);
                if (!rep[static_cast<std::size_t>(y)].empty() || y == 1 % n) continue;
                auto e = rep[static_cast<std::size_t>(x)];
                e[i] = (e[i] + 1) % gens[i].order;
                rep[static_cast<std::size_t>(y)] = std::move(e);
                next.push_back(y);
            }
        frontier = std::move(next);
    }
    return rep;
}

constexpr double kBernoulli[12] = {
    1.0 / 6,       -1.0 / 30,       1.0 / 42,       -1.0 / 30,
    5.0 / 66,      -691.0 / 2730,   7.0 / 6,        -3617.0 / 510,
    43867.0 / 798, -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730};

double l_at_one(const DirichletCharacter& chi, bool* imag_small = nullptr) {
    long q = chi.conductor;
    Complex s = 0.0;
    for (long a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        s += chi.primitive_value(a) * digamma(static_cast<double>(a) / q);
    }
    s /= -static_cast<double>(q);
    if (imag_small) *imag_small = std::abs(s.imag()) < 1e-8 * (1.0 + std::abs(s.real()));
    return s.real();
}

}  // namespace

Complex DirichletCharacter::value(long a) const {
    a %= modulus;
    if (a < 0) a += modulus;
    long num = angles[static_cast<std::size_t>(a)];
    if (num < 0) return 0.0;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(angle_den);
    return {std::cos(ang), std::sin(ang)};
}

Complex DirichletCharacter::primitive_value(long a) const {
    a %= conductor;
    if (a < 0) a += conductor;
    if (std::gcd(a, conductor) != 1) return 0.0;
    long b = a;
    while (std::gcd(b, modulus) != 1) b += conductor;
    return value(b);
}

std::vector<DirichletCharacter> characters_mod(long n) {
    auto gens = group_structure(n);
    auto rep = dlog_table(n, gens);
    long L = 1;
    for (const auto& g : gens) L = std::lcm(L, g.order);

    std::vector<long> divisors;
    for (long q = 1; q <= n; ++q)
        if (n % q == 0) divisors.push_back(q);

    std::vector<DirichletCharacter> chars;
    std::vector<long> es(gens.size(), 0);
    while (true) {
        DirichletCharacter chi;
        chi.modulus = n;
        chi.angle_den = L;
        chi.angles.assign(static_cast<std::size_t>(n), -1);
        for (long a = 0; a < n; ++a) {
            const auto& e = rep[static_cast<std::size_t>(a)];
            if (e.empty() && a != 1 % n) continue;
            long num = 0;
            for (std::size_t i = 0; i < gens.size(); ++i)
                num = (num + es[i] * (e.empty() ? 0 : e[i]) % L * (L / gens[i].order)) % L;
            chi.angles[static_cast<std::size_t>(a)] = num;
        }
        // Conductor: smallest q | n with chi trivial on units that are 1 mod q.
        for (long q : divisors) {
            bool trivial = true;
            for (long a = 1; a < n && trivial; ++a)
                if (chi.angles[static_cast<std::size_t>(a)] > 0 && a % q == 1 % q)
                    trivial = false;
            if (trivial) { chi.conductor = q; break; }
        }
        chars.push_back(std::move(chi));

        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++es[i] < gens[i].order) break;
            es[i] = 0;
        }
        if (i == gens.size()) break;
    }
    return chars;
}

double digamma(double x) {
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double inv2 = 1.0 / (x * x);
    double series = 0.0, p = inv2;
    for (int j = 0; j < 8; ++j) {
        series += kBernoulli[j] / (2.0 * (j + 1)) * p;
        p *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - series;
}

Complex hurwitz_zeta(Complex s, double a) {
    if (s == Complex(1.0, 0.0)) throw PoleAtOne("Hurwitz zeta has a simple pole at s = 1");
    if (a <= 0.0) throw DivergentRegion("Hurwitz zeta requires a > 0");
    long N = std::max<long>(15, static_cast<long>(std::ceil(2.0 * std::abs(s))));
    Complex sum = 0.0;
    for (long k = 0; k < N; ++k) sum += std::pow(Complex(a + k), -s);
    double x = a + static_cast<double>(N);
    sum += std::pow(Complex(x), 1.0 - s) / (s - 1.0);
    Complex xs = std::pow(Complex(x), -s);
    sum += 0.5 * xs;
    // Bernoulli tail: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}.
    Complex poch = s;
    double fact = 2.0;
    Complex xp = xs * x;
    double inv2 = 1.0 / (x * x);
    for (int j = 1; j <= 12; ++j) {
        xp *= inv2;
        sum += kBernoulli[j - 1] / fact * poch * xp;
        poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        fact *= (2.0 * j + 1) * (2.0 * j + 2);
    }
    return sum;
}

Complex riemann_zeta(Complex s) { return hurwitz_zeta(s, 1.0); }

Complex l_function(const DirichletCharacter& chi, Complex s) {
    if (chi.principal()) {
        Complex z = riemann_zeta(s);
        for (long p : prime_divisors(chi.modulus))
            z *= 1.0 - std::pow(Complex(static_cast<double>(p)), -s);
        return z;
    }
    if (s == Complex(1.0, 0.0)) return l_at_one(chi);
    long q = chi.conductor;
    Complex sum = 0.0;
    for (long a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        sum += chi.primitive_value(a) * hurwitz_zeta(s, static_cast<double>(a) / q);
    }
    return std::pow(Complex(static_cast<double>(q)), -s) * sum;
}

Complex dedekind_zeta(const CyclotomicField& K, Complex s) {
    if (s == Complex(1.0, 0.0)) throw PoleAtOne("Dedekind zeta has a simple pole at s = 1");
    Complex prod = 1.0;
    for (const auto& chi : characters_mod(K.n()))
        prod *= chi.principal() ? riemann_zeta(s) : l_function(chi, s);
    return prod;
}

double dedekind_residue(const CyclotomicField& K) {
    Complex prod = 1.0;
    for (const auto& chi : characters_mod(K.n())) {
        if (chi.principal()) continue;
        long q = chi.conductor;
        Complex s = 0.0;
        for (long a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            s += chi.primitive_value(a) * digamma(static_cast<double>(a) / q);
        }
        prod *= s / -static_cast<double>(q);
    }
    return prod.real();
}

bool conductor_product_matches_disc(const CyclotomicField& K) {
    Integer prod = 1;
    for (const auto& chi : characters_mod(K.n())) prod *= chi.conductor;
    return prod == K.abs_disc();
}

std::vector<SubconvexityRow> subconvexity_profile(const CyclotomicField& K,
                                                  const std::vector<double>& t_grid) {
    for (double t : t_grid)
        if (std::abs(t) > 200.0)
            throw OutOfAccuracyEnvelope("profile limited to |t| <= 200, got t = " +
                                        std::to_string(t));
    const double d = static_cast<double>(K.degree());
    const double log_disc = std::log(K.abs_disc().get_d());
    auto chars = characters_mod(K.n());
    std::vector<SubconvexityRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        Complex s(0.5, t);
        Complex z = 1.0;
        for (const auto& chi : chars)
            z *= chi.principal() ? riemann_zeta(s) : l_function(chi, s);
        SubconvexityRow row;
        row.t = t;
        row.zeta_abs = std::abs(z);
        row.convexity_curve = std::exp(log_disc / 4.0 + (d / 4.0) * std::log1p(std::abs(t)));
        row.py_curve = std::exp(log_disc / 6.0 + (d / 6.0) * std::log1p(std::abs(t)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ilz
