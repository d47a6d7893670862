#include "doctest.h"

#include <cmath>

#include "ilz/characters.hpp"
#include "ilz/cyclo_field.hpp"
#include "ilz/errors.hpp"
#include "ilz/packing.hpp"

using namespace ilz;

TEST_CASE("primorial table rows") {
    auto rows = primorial_table(5);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].n == 2);
    CHECK(rows[0].phi == 1);
    CHECK(rows[0].phi_loglog == 0.0);
    CHECK(rows[2].n == 30);
    CHECK(rows[2].phi == 8);
    CHECK(rows[2].ratio == doctest::Approx(3.75));
    CHECK(rows[4].n == 2310);
    CHECK(rows[4].phi == 480);
    CHECK(rows[4].phi_loglog ==
          doctest::Approx(480.0 * std::log(std::log(480.0))).epsilon(1e-14));
}

TEST_CASE("primorial ratio grows and phi matches the sieve") {
    auto rows = primorial_table(9);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].ratio > rows[i - 1].ratio);
    // independent totient via trial-division factoring
    for (const auto& row : rows)
        CHECK(row.phi == static_cast<unsigned long long>(
                             euler_phi(static_cast<long>(row.n))));
}

TEST_CASE("primorial table bounds") {
    CHECK_THROWS_AS(primorial_table(0), DimensionMismatch);
    CHECK_THROWS_AS(primorial_table(16), Overflow);
    auto rows = primorial_table(15);
    CHECK(rows.back().n == 614889782588491410ULL);
}

TEST_CASE("stark floor sits below the residue") {
    auto K4 = create_field(4);
    // d = 2, |Delta| = 4: 0.001448 / (2 * 2)
    CHECK(stark_floor(K4) == doctest::Approx(0.000362).epsilon(1e-12));
    CHECK(dedekind_residue(K4) == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-12));
    for (long n : {3L, 4L, 5L, 7L, 8L, 9L, 11L, 12L, 13L, 15L, 16L, 20L, 21L, 24L,
                   25L, 27L, 28L, 32L, 33L, 35L, 36L, 40L, 44L, 45L, 48L, 60L, 84L}) {
        auto K = create_field(n);
        double floor = stark_floor(K);
        CHECK(floor > 0.0);
        CHECK(dedekind_residue(K) >= floor);
    }
}

TEST_CASE("certified bound preconditions") {
    CHECK_THROWS_AS(certified_volume_bound(create_field(4)), InsufficientDecay);
    CHECK_THROWS_AS(certified_volume_bound(create_field(17)), UnsupportedField);
}
