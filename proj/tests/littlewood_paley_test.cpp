#include <cmath>

#include "doctest.h"

#include "kplane/littlewood_paley.hpp"

using namespace kplane;

TEST_CASE("ramp shape") {
    CHECK(DyadicPartition::ramp(0.0) == 1.0);
    CHECK(DyadicPartition::ramp(1.0) == 1.0);
    CHECK(DyadicPartition::ramp(2.0) == 0.0);
    CHECK(DyadicPartition::ramp(3.0) == 0.0);
    CHECK(DyadicPartition::ramp(1.5) == doctest::Approx(0.5));
    for (double r = 1.0; r < 2.0; r += 0.1)
        CHECK(DyadicPartition::ramp(r) >= DyadicPartition::ramp(r + 0.1));
}

TEST_CASE("bands tile frequency space up to the resolved scale") {
    DyadicPartition P = build_partition(4.0 * M_PI);
    CHECK(P.j_max == 2);
    for (double r = 0.0; r <= 4.0; r += 0.013) {
        double sum = 0.0;
        for (int j = 0; j <= P.j_max; ++j) sum += P.band(j, r);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    // supports: band j vanishes outside [2^{j-1}, 2^{j+1}]
    CHECK(P.band(1, 0.9) == 0.0);
    CHECK(P.band(1, 4.1) == 0.0);
    CHECK(P.band(2, 1.9) == 0.0);
    CHECK_THROWS(build_partition(2.0));
}

TEST_CASE("projection multiplies by the band and flags unresolved bands") {
    GridSpec spec(1, 64, 8.0);
    SpectralFunction F;
    F.spec = spec;
    F.values.assign(spec.size(), Complex(1.0, 0.0));
    DyadicPartition P = build_partition(spec.nyquist_radius());
    bool clipped = true;
    SpectralFunction F1 = project(F, P, 1, &clipped);
    CHECK_FALSE(clipped);
    for (int u = 0; u < spec.n; ++u)
        CHECK(std::abs(F1.values[u] - P.band(1, std::abs(spec.dual_coord(u)))) < 1e-15);
    project(F, P, P.j_max + 1, &clipped);
    CHECK(clipped);
}

TEST_CASE("sandwich constants, frozen from the pre-build pilot") {
    DyadicPartition P = build_partition(4.0 * M_PI);
    std::vector<double> radii;
    for (int i = 1; i <= 1000; ++i) radii.push_back(2.0 * i / 1000.0);
    SandwichConstants s0 = sandwich_constants(0.0, P, radii);
    CHECK(s0.lower == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(s0.upper == doctest::Approx(1.0).epsilon(1e-9));
    SandwichConstants s1 = sandwich_constants(1.0, P, radii);
    CHECK(s1.lower == doctest::Approx(0.2819).epsilon(1e-3));
    CHECK(s1.upper == doctest::Approx(1.0).epsilon(1e-3));
    SandwichConstants sm = sandwich_constants(-1.0, P, radii);
    CHECK(sm.lower == doctest::Approx(0.7412).epsilon(1e-3));
    CHECK(sm.upper == doctest::Approx(2.3326).epsilon(1e-3));

    CHECK_THROWS(sandwich_constants(0.0, P, {8.0}));  // beyond 2^{j_max}
}
