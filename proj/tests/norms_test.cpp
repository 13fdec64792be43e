#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"

#include "kplane/fields.hpp"
#include "kplane/grassmannian.hpp"
#include "kplane/norms.hpp"
#include "kplane/transform.hpp"

using namespace kplane;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

GridFunction random_function(const GridSpec& spec, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    GridFunction f;
    f.spec = spec;
    f.values.resize(spec.size());
    for (auto& v : f.values) v = Complex(dist(rng), dist(rng));
    return f;
}

}  // namespace

TEST_CASE("Lebesgue norms on the grid") {
    GridSpec line(1, 64, 4.0);
    GridFunction ones;
    ones.spec = line;
    ones.values.assign(line.size(), Complex(1.0, 0.0));
    CHECK(lp_norm(ones, 1.0) == doctest::Approx(8.0));  // 2L for a constant 1
    CHECK(lp_norm(ones, kInf) == doctest::Approx(1.0));

    GridSpec plane(2, 64, 8.0);
    AnalyticField g = catalog_field("gauss:iso", 2, plane.half_width);
    GridFunction gg = sample(g.eval, plane);
    CHECK(lp_norm(gg, 2.0) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-8));

    GridFunction twice = gg;
    for (auto& v : twice.values) v *= 2.0;
    CHECK(lp_norm(twice, 3.0) == doctest::Approx(2.0 * lp_norm(gg, 3.0)).epsilon(1e-12));
}

TEST_CASE("triangle inequality on random pairs") {
    GridSpec spec(2, 32, 4.0);
    GridFunction f = random_function(spec, 1);
    GridFunction g = random_function(spec, 2);
    GridFunction sum = f;
    for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += g.values[i];
    for (double p : {1.0, 2.0, 3.5, kInf})
        CHECK(lp_norm(sum, p) <= lp_norm(f, p) + lp_norm(g, p) + 1e-10);
    SpectralFunction F = forward_ft(f), G = forward_ft(g), S = forward_ft(sum);
    for (double s : {-1.0, 0.0, 1.5})
        CHECK(sobolev(S, s) <= sobolev(F, s) + sobolev(G, s) + 1e-10);
}

TEST_CASE("Sobolev scale") {
    GridSpec spec(2, 64, 8.0);
    AnalyticField g = catalog_field("gauss:iso", 2, spec.half_width);
    GridFunction gg = sample(g.eval, spec);
    SpectralFunction F = forward_ft(gg);

    CHECK(sobolev(F, 0.0) == doctest::Approx(lp_norm(gg, 2.0)).epsilon(1e-10));
    CHECK(sobolev(F, 1.0) == doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-8));
    CHECK(sobolev(F, -1.0) <= sobolev(F, 0.0));
    CHECK(sobolev(F, 0.0) <= sobolev(F, 2.0));
}

TEST_CASE("weighted norms reduce to the classical cases") {
    GridSpec spec(2, 32, 4.0);
    SpectralFunction F = forward_ft(random_function(spec, 3));
    for (double s : {-0.5, 0.0, 1.0})
        CHECK(weighted_sobolev(F, s, 2.0, 0.0) ==
              doctest::Approx(sobolev(F, s)).epsilon(1e-12));

    // t_w = s is the homogeneous norm: direct dual sum cross-check
    double s = 1.0, direct = 0.0;
    std::vector<int> idx(2, 0);
    std::size_t p = 0;
    do {
        double rho = spec.dual_node(idx).norm();
        direct += std::pow(rho, 2.0 * s) * std::norm(F.values[p++]);
    } while (next_index(idx, spec.n));
    direct = std::sqrt(direct * std::pow(spec.dual_spacing(), 2));
    CHECK(weighted_sobolev(F, s, 2.0, s) == doctest::Approx(direct).epsilon(1e-12));

    CHECK_THROWS(weighted_sobolev(F, 0.0, 2.0, -1.0));  // t_w <= -d/p

    SpectralFunction Z = F;
    for (auto& v : Z.values) v = 0.0;
    CHECK(weighted_sobolev(Z, 1.0, 2.0, 0.5) == 0.0);
}

TEST_CASE("mixed norm on the transform of a Gaussian, frozen radial value") {
    AnalyticField f = catalog_field("gauss:iso", 2, 8.0);
    QuadraturePtr quad = circle_quadrature(64);
    FiberField u = exact_transform(f, quad, GridSpec(1, 1024, 8.0));
    // (pi (2 pi)^2 sqrt(pi/2))^{1/4}, from the pre-build radial quadrature
    CHECK(mixed_norm(u, 4.0, 4.0) ==
          doctest::Approx(3.5309566603551623).epsilon(1e-8));

    // t = q matches the plain Grassmannian Lebesgue norm assembled by hand
    double direct = 0.0;
    const double cell = u.fiber.spacing();
    for (std::size_t q = 0; q < u.frames.size(); ++q) {
        double inner = 0.0;
        for (const Complex& v : u.frames[q]) inner += cell * std::pow(std::abs(v), 4.0);
        direct += u.quad->weights[q] * inner;
    }
    CHECK(mixed_norm(u, 4.0, 4.0) ==
          doctest::Approx(std::pow(direct, 0.25)).epsilon(1e-13));
}

TEST_CASE("mixed norm of a constant") {
    QuadraturePtr quad = circle_quadrature(16);
    FiberField u;
    u.quad = quad;
    u.fiber = GridSpec(1, 64, 4.0);
    u.frames.assign(quad->count(), std::vector<Complex>(64, Complex(3.0, 0.0)));
    double expect = 3.0 * std::pow(8.0, 1.0 / 2.0) * std::pow(M_PI, 1.0 / 4.0);
    CHECK(mixed_norm(u, 4.0, 2.0) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("Grassmannian Sobolev norms and the exact lower bound") {
    AnalyticField f = catalog_field("gauss:iso", 2, 8.0);
    GridSpec ambient(2, 64, 8.0);
    QuadraturePtr quad = circle_quadrature(32);
    GridFunction fg = sample(f.eval, ambient);
    FiberField u = transform_slice(fg, quad, GridSpec(1, 64, 8.0));
    const double c = std::sqrt(2.0 * M_PI * total_measure(1, 1));
    for (double s : {-1.0, 0.0, 1.0})
        CHECK(c * sobolev(fg, s) <= sobolev_g(u, s + 0.5) * (1.0 + 1e-3));

    // p = 2, t_w = 0 weighted version carries the normalizing prefactor
    double plain = sobolev_g(u, 0.5);
    double weighted = weighted_sobolev_g(u, 0.5, 2.0, 0.0);
    double pref = std::sqrt(std::pow(2.0 * M_PI, -1.0) / total_measure(1, 1));
    CHECK(weighted == doctest::Approx(plain * pref).epsilon(1e-10));
    CHECK_THROWS(weighted_sobolev_g(u, 0.0, 2.0, -1.0));
}

TEST_CASE("Besov and Triebel-Lizorkin assemblies") {
    GridSpec spec(2, 64, 8.0);
    AnalyticField g = catalog_field("gauss:iso", 2, spec.half_width);
    SpectralFunction F = forward_ft(sample(g.eval, spec));
    DyadicPartition P = build_partition(spec.nyquist_radius());

    // p = r collapses both scales to the same double sum
    for (double s : {0.0, 1.0})
        CHECK(besov(F, s, 2.0, 2.0, P).value ==
              doctest::Approx(tl(F, s, 2.0, 2.0, P).value).epsilon(1e-12));

    // r = inf equals the explicit max over bands
    double max_band = 0.0;
    for (int j = 0; j <= P.j_max; ++j) {
        GridFunction piece = inverse_ft(project(F, P, j));
        max_band = std::max(max_band, std::pow(2.0, j * 1.0) * lp_norm(piece, 3.0));
    }
    CHECK(besov(F, 1.0, 3.0, kInf, P).value ==
          doctest::Approx(max_band).epsilon(1e-12));

    // B^0_{2,2} vs H^0 stays within the dyadic sandwich
    std::vector<double> radii;
    for (int i = 1; i <= 2000; ++i)
        radii.push_back(std::ldexp(1.0, P.j_max) * i / 2000.0);
    SandwichConstants sc = sandwich_constants(0.0, P, radii);
    double ratio = besov(F, 0.0, 2.0, 2.0, P).value / sobolev(F, 0.0);
    CHECK(ratio >= std::sqrt(sc.lower) - 1e-9);
    CHECK(ratio <= std::sqrt(sc.upper) + 1e-9);
}

TEST_CASE("Grassmannian Besov/TL coincide on matching exponents") {
    AnalyticField f = catalog_field("gauss:iso", 2, 8.0);
    QuadraturePtr quad = circle_quadrature(16);
    GridSpec fiber(1, 64, 8.0);
    FiberField u = exact_transform(f, quad, fiber);
    DyadicPartition P = build_partition(fiber.nyquist_radius());
    CHECK(besov_g(u, 1.0, 2.0, 2.0, 2.0, P).value ==
          doctest::Approx(tl_g(u, 1.0, 2.0, 2.0, 2.0, P).value).epsilon(1e-12));

    double max_band = 0.0;
    FiberSpectrum U = fiber_ft(u);
    for (int j = 0; j <= P.j_max; ++j) {
        FiberField piece = fiber_ift(project_fiber(U, P, j));
        max_band = std::max(max_band, mixed_norm(piece, 2.0, 2.0));
    }
    CHECK(besov_g(u, 0.0, 2.0, 2.0, kInf, P).value ==
          doctest::Approx(max_band).epsilon(1e-12));
}
