#include "kplane/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>

namespace kplane {

namespace {
double glue(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
}

double DyadicPartition::ramp(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    double a = glue(2.0 - r), b = glue(r - 1.0);
    return a / (a + b);
}

double DyadicPartition::band(int j, double r) const {
    if (j < 0) throw std::invalid_argument("band index must be nonnegative");
    if (j == 0) return ramp(r);
    return ramp(std::ldexp(r, -j)) - ramp(std::ldexp(r, -j + 1));
}

DyadicPartition build_partition(double nyquist_radius) {
    if (nyquist_radius < 4.0)
        throw std::invalid_argument("Nyquist radius too small for a dyadic partition");
    DyadicPartition P;
    P.j_max = static_cast<int>(std::floor(std::log2(nyquist_radius))) - 1;
    return P;
}

SpectralFunction project(const SpectralFunction& F, const DyadicPartition& P,
                         int j, bool* clipped) {
    if (clipped)
        *clipped = std::ldexp(1.0, j + 1) > F.spec.nyquist_radius() * (1.0 + 1e-12);
    SpectralFunction out;
    out.spec = F.spec;
    out.values.resize(F.values.size());
    std::vector<int> idx(F.spec.dim, 0);
    std::size_t p = 0;
    do {
        out.values[p] = P.band(j, F.spec.dual_node(idx).norm()) * F.values[p];
        ++p;
    } while (next_index(idx, F.spec.n));
    return out;
}

FiberSpectrum project_fiber(const FiberSpectrum& U, const DyadicPartition& P,
                            int j, bool* clipped) {
    if (clipped)
        *clipped = std::ldexp(1.0, j + 1) > U.fiber.nyquist_radius() * (1.0 + 1e-12);
    return apply_fiber_multiplier(U, [&P, j](double r) { return P.band(j, r); });
}

SandwichConstants sandwich_constants(double s, const DyadicPartition& P,
                                     const std::vector<double>& radii) {
    if (radii.empty()) throw std::invalid_argument("need at least one radius");
    SandwichConstants c{HUGE_VAL, 0.0};
    double r_max = std::ldexp(1.0, P.j_max);
    for (double r : radii) {
        if (r < 0.0 || r > r_max * (1.0 + 1e-12))
            throw std::invalid_argument("radius outside the resolved dyadic range");
        double sum = 0.0;
        for (int j = 0; j <= P.j_max; ++j) {
            double b = P.band(j, r);
            sum += std::pow(4.0, j * s) * b * b;
        }
        double ratio = sum / std::pow(1.0 + r * r, s);
        c.lower = std::min(c.lower, ratio);
        c.upper = std::max(c.upper, ratio);
    }
    return c;
}

}  // namespace kplane
