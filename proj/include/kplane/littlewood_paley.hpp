#pragma once

#include <vector>

#include "kplane/grid.hpp"
#include "kplane/transform.hpp"

namespace kplane {

/// Smooth dyadic partition of unity in frequency. The ramp is
/// psi(r) = g(2-r) / (g(2-r) + g(r-1)) with g(t) = exp(-1/t) for t > 0,
/// so psi = 1 on [0,1] and 0 on [2,inf). Band 0 is psi(|xi|); band j >= 1
/// is psi(2^{-j}|xi|) - psi(2^{-j+1}|xi|), supported on 2^{j-1} <= |xi| <= 2^{j+1}.
struct DyadicPartition {
    int j_max = 0;

    static double ramp(double r);
    double band(int j, double r) const;
};

/// Partition matched to a grid: j_max = floor(log2(K)) - 1 where K is the
/// Nyquist radius, so every retained band is fully resolved.
DyadicPartition build_partition(double nyquist_radius);

/// Multiplies the spectrum by band j. Sets *clipped when the band's support
/// reaches beyond the Nyquist ball (possible only for j > j_max).
SpectralFunction project(const SpectralFunction& F, const DyadicPartition& P,
                         int j, bool* clipped = nullptr);

/// Same band multiplier applied frame by frame on fiber spectra.
FiberSpectrum project_fiber(const FiberSpectrum& U, const DyadicPartition& P,
                            int j, bool* clipped = nullptr);

struct SandwichConstants {
    double lower = 0.0;
    double upper = 0.0;
};

/// Extremes over the given radii of
///   sum_{j<=j_max} 2^{2js} band_j(r)^2 / (1+r^2)^s.
/// Radii must satisfy r <= 2^{j_max}, where the truncated sum coincides
/// with the full dyadic sum.
SandwichConstants sandwich_constants(double s, const DyadicPartition& P,
                                     const std::vector<double>& radii);

}  // namespace kplane
