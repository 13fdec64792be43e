#include <cmath>

#include "doctest.h"

#include "kplane/fields.hpp"
#include "kplane/grassmannian.hpp"

using namespace kplane;

TEST_CASE("total measures") {
    CHECK(total_measure(0, 3) == doctest::Approx(1.0));
    CHECK(total_measure(1, 2) == doctest::Approx(M_PI));
    CHECK(total_measure(1, 3) == doctest::Approx(2.0 * M_PI));
    // |G_{2,3}| = |S^2||S^1| / (2|S^1|) = |S^2|/2
    CHECK(total_measure(2, 3) == doctest::Approx(2.0 * M_PI));
    CHECK_THROWS(total_measure(3, 2));
}

TEST_CASE("measure duality under orthogonal complement") {
    for (int d = 2; d <= 6; ++d)
        for (int k = 0; k <= d; ++k)
            CHECK(total_measure(k, d) ==
                  doctest::Approx(total_measure(d - k, d)).epsilon(1e-12));
}

TEST_CASE("circle rule") {
    QuadraturePtr quad = circle_quadrature(16);
    CHECK(quad->count() == 16);
    double mass = 0.0;
    for (double w : quad->weights) mass += w;
    CHECK(mass == doctest::Approx(M_PI));
    for (const Frame& f : quad->frames) CHECK(f.orthonormality_defect() < 1e-15);
}

TEST_CASE("haar frames are orthonormal and reproducible") {
    QuadraturePtr a = haar_sample(2, 4, 64, 42);
    QuadraturePtr b = haar_sample(2, 4, 64, 42);
    QuadraturePtr c = haar_sample(2, 4, 64, 43);
    double max_gap_same = 0.0, max_gap_diff = 0.0;
    for (std::size_t i = 0; i < a->count(); ++i) {
        CHECK(a->frames[i].orthonormality_defect() < 1e-12);
        max_gap_same = std::max(max_gap_same,
                                (a->frames[i].A - b->frames[i].A).cwiseAbs().maxCoeff());
        max_gap_diff = std::max(max_gap_diff,
                                (a->frames[i].A - c->frames[i].A).cwiseAbs().maxCoeff());
    }
    CHECK(max_gap_same == 0.0);
    CHECK(max_gap_diff > 1e-3);
}

TEST_CASE("haar direction statistics are isotropic") {
    const int N = 10000;
    QuadraturePtr quad = haar_sample(1, 3, N, 0);
    double mean_sq = 0.0;
    for (const Frame& f : quad->frames) mean_sq += f.A(0, 0) * f.A(0, 0);
    mean_sq /= N;
    CHECK(mean_sq == doctest::Approx(1.0 / 3.0).epsilon(0.06));
}

TEST_CASE("polar identity, analytic Gaussian on the circle rule") {
    AnalyticField f = catalog_field("gauss:iso", 2, 8.0);
    QuadraturePtr quad = circle_quadrature(64);
    PolarCheck chk = polar_identity_residual(f, *quad, 1024, 8.0);
    CHECK(chk.rhs == doctest::Approx(total_measure(1, 1) * 2.0 * M_PI));
    CHECK(chk.relative_residual < 1e-4);
}

TEST_CASE("polar identity, grid samples agree with the analytic field") {
    AnalyticField f = catalog_field("gauss:iso", 2, 8.0);
    GridFunction fg = sample(f.eval, GridSpec(2, 64, 8.0));
    QuadraturePtr quad = circle_quadrature(16);
    PolarCheck an = polar_identity_residual(f, *quad, 256, 8.0);
    PolarCheck gr = polar_identity_residual(fg, *quad, 256, 8.0);
    CHECK(gr.lhs == doctest::Approx(an.lhs).epsilon(1e-8));
    CHECK(gr.relative_residual < 1e-3);  // coarse rule: M = 16, n_f = 256
}

TEST_CASE("quadrature descriptor is JSON with kind and count") {
    QuadraturePtr quad = haar_sample(1, 3, 8, 5);
    std::string desc = quadrature_descriptor(*quad);
    CHECK(desc.find("mc:8:5") != std::string::npos);
    CHECK(desc.find("\"count\":8") != std::string::npos);
}
