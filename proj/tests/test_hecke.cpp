#include "doctest.h"

#include <cmath>

#include "ilz/arakelov.hpp"
#include "ilz/epstein.hpp"
#include "ilz/errors.hpp"
#include "ilz/hecke.hpp"

using namespace ilz;

TEST_CASE("closed form pinned by the Gaussian integers") {
    auto K = create_field(4);
    // rotation invariance collapses the Arakelov average to a single lattice
    LatticeGram Zi{Eigen::MatrixXd::Identity(2, 2)};
    for (double s : {2.0, 2.5, 3.0}) {
        double rhs = hecke_rhs(K, s);
        double direct = epstein_continued(Zi, Complex(2.0 * s, 0.0)).real();
        CHECK(std::abs(rhs - direct) < 1e-9 * std::abs(direct));
    }
    CHECK(hecke_rhs(K, 2.0) == doctest::Approx(6.0268120396919401).epsilon(1e-10));
    CHECK_THROWS_AS(hecke_rhs(K, 1.0), PoleAtOne);
    CHECK_THROWS_AS(hecke_rhs(K, 0.7), DivergentRegion);
}

TEST_CASE("Monte Carlo side is degenerate for Q(i)") {
    auto K = create_field(4);
    auto mc = hecke_lhs_mc(K, 2.0, 10, 5);
    CHECK(mc.stderr_ < 1e-12);
    CHECK(mc.mean == doctest::Approx(hecke_rhs(K, 2.0)).epsilon(1e-9));
}

TEST_CASE("Monte Carlo matches the closed form") {
    for (long n : {5L, 8L}) {
        auto K = create_field(n);
        for (double s : {2.0, 3.0}) {
            auto mc = hecke_lhs_mc(K, s, 400, 11);
            double rhs = hecke_rhs(K, s);
            CHECK(std::abs(mc.mean - rhs) < 3.0 * mc.stderr_);
        }
    }
}

TEST_CASE("error term preconditions") {
    CHECK_THROWS_AS(error_term(create_field(4), 4.0), InsufficientDecay);
    CHECK_THROWS_AS(error_term(create_field(5), 4.0), InsufficientDecay);
    auto K16 = create_field(16);
    CHECK_THROWS_AS(error_term(K16, 16.0, 0.4), BadSigma);
    CHECK_THROWS_AS(error_term(K16, 16.0, 1.0), BadSigma);
    CHECK_THROWS_AS(error_term(K16, -1.0), DivergentRegion);
}

TEST_CASE("error term for Q(zeta_16)") {
    auto K = create_field(16);
    ErrorTermEvaluator ev(K, 0.5, 30.0);
    auto r = ev.evaluate(16.0);
    CHECK(std::isfinite(r.epsilon));
    CHECK(r.im_residual < 1e-8);
    CHECK(r.quad_error_est < 1e-6 * (1.0 + std::abs(r.epsilon)));
    CHECK(r.n_nodes > 0);
    CHECK(r.tail_bound >= 0.0);
    // |eps| must stay below the ball volume for the packing chain to work
    CHECK(std::abs(r.epsilon) < 16.0);

    // cache makes the second volume nearly free and deterministic
    auto r2 = ev.evaluate(16.0);
    CHECK(r2.epsilon == r.epsilon);

    // doubling T only moves the answer within the stated uncertainties,
    // and the composed prediction equals 1 + V + eps at the default contour
    auto r3 = error_term(K, 16.0, 0.5, 60.0);
    double slack = r.quad_error_est + r.tail_bound + r3.quad_error_est + r3.tail_bound;
    CHECK(std::abs(r3.epsilon - r.epsilon) <= slack + 1e-12);
    double p = mean_count_prediction(K, 16.0);
    CHECK(p == doctest::Approx(17.0 + r3.epsilon).epsilon(1e-12));
}
