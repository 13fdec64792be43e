#include <cmath>

#include "doctest.h"

#include "kplane/fields.hpp"
#include "kplane/grassmannian.hpp"
#include "kplane/grid.hpp"
#include "kplane/transform.hpp"

using namespace kplane;

TEST_CASE("spectral slice agrees with the closed-form transform") {
    GridSpec ambient(2, 64, 8.0);
    GridSpec fiber(1, 64, 8.0);
    QuadraturePtr quad = circle_quadrature(12);
    AnalyticField f = catalog_field("gauss:aniso", 2, ambient.half_width);
    FiberField via_slice = transform_slice(sample(f.eval, ambient), quad, fiber);
    FiberField exact = exact_transform(f, quad, fiber);
    CHECK(max_difference(via_slice, exact) < 1e-8);
}

TEST_CASE("direct plane quadrature agrees with the closed form") {
    GridSpec fiber(1, 16, 8.0);
    QuadraturePtr quad = circle_quadrature(6);
    AnalyticField f = catalog_field("gauss:iso", 2, 8.0);
    FiberField direct = transform_direct(f.eval, quad, fiber, 12.0, 257);
    FiberField exact = exact_transform(f, quad, fiber);
    CHECK(max_difference(direct, exact) < 1e-9);
}

TEST_CASE("fiberwise transform round trip") {
    GridSpec ambient(2, 32, 8.0);
    GridSpec fiber(1, 32, 8.0);
    QuadraturePtr quad = circle_quadrature(8);
    AnalyticField f = catalog_field("gauss:iso", 2, ambient.half_width);
    FiberField u = exact_transform(f, quad, fiber);
    FiberField back = fiber_ift(fiber_ft(u));
    CHECK(max_difference(u, back) < 1e-12);
}

TEST_CASE("fourier slice identity at the fiber dual nodes") {
    GridSpec fiber(1, 64, 8.0);
    QuadraturePtr quad = circle_quadrature(8);
    AnalyticField f = catalog_field("gauss:iso", 2, 8.0);
    FiberSpectrum U = fiber_ft(exact_transform(f, quad, fiber));
    double err = 0.0;
    for (std::size_t q = 0; q < quad->count(); ++q)
        for (int u = 0; u < fiber.n; ++u) {
            Eigen::VectorXd eta = quad->frames[q].B * fiber.dual_coord(u);
            Complex ref = std::sqrt(2.0 * M_PI) * f.spectrum(eta);
            err = std::max(err, std::abs(U.frames[q][u] - ref));
        }
    CHECK(err < 1e-12);
}

TEST_CASE("slice refuses fibers beyond the ambient Nyquist ball") {
    GridSpec ambient(2, 32, 8.0);
    GridFunction fg = sample(catalog_field("gauss:iso", 2, 8.0).eval, ambient);
    QuadraturePtr quad = circle_quadrature(4);
    CHECK_THROWS(slice_spectrum(fg, quad, GridSpec(1, 128, 8.0)));
    CHECK_NOTHROW(slice_spectrum(fg, quad, GridSpec(1, 32, 8.0)));
}

TEST_CASE("unit multiplier is the identity") {
    GridSpec fiber(1, 32, 8.0);
    QuadraturePtr quad = circle_quadrature(4);
    AnalyticField f = catalog_field("gauss:iso", 2, 8.0);
    FiberSpectrum U = fiber_ft(exact_transform(f, quad, fiber));
    FiberSpectrum V = apply_fiber_multiplier(U, [](double) { return 1.0; });
    double err = 0.0;
    for (std::size_t q = 0; q < U.frames.size(); ++q)
        for (std::size_t i = 0; i < U.frames[q].size(); ++i)
            err = std::max(err, std::abs(U.frames[q][i] - V.frames[q][i]));
    CHECK(err == 0.0);
}

TEST_CASE("fiber dimension is validated") {
    QuadraturePtr quad = circle_quadrature(4);
    AnalyticField f = catalog_field("gauss:iso", 2, 8.0);
    CHECK_THROWS(exact_transform(f, quad, GridSpec(2, 16, 8.0)));
}
