#pragma once

#include <functional>
#include <vector>

#include "kplane/fields.hpp"
#include "kplane/grassmannian.hpp"
#include "kplane/grid.hpp"

namespace kplane {

/// Discretized function on the affine Grassmannian: one fiber grid of
/// dimension d-k per quadrature frame, all frames sharing the same rule.
/// Values are linearized exactly like GridFunction on the fiber grid.
struct FiberField {
    QuadraturePtr quad;
    GridSpec fiber;  // fiber.dim == d - k
    std::vector<std::vector<Complex>> frames;
};

/// Per-frame fiber spectra, ascending-frequency storage on the dual fiber grid.
struct FiberSpectrum {
    QuadraturePtr quad;
    GridSpec fiber;
    std::vector<std::vector<Complex>> frames;
};

/// Spectral-slice evaluation: for each frame, samples the ambient discrete
/// spectrum at eta = B xi and scales by (2*pi)^{k/2}, which is the fiber
/// spectrum of the plane transform. Throws if the fiber dual grid reaches
/// beyond the ambient Nyquist ball.
FiberSpectrum slice_spectrum(const GridFunction& f, QuadraturePtr quad,
                             const GridSpec& fiber);

/// Plane transform via the spectral slice followed by fiber inversion.
FiberField transform_slice(const GridFunction& f, QuadraturePtr quad,
                           const GridSpec& fiber);

/// Plane transform by direct quadrature of int f(A u + B y) du over the
/// in-plane cube [-R_p, R_p]^k with an n_p-point trapezoid rule per axis.
FiberField transform_direct(const std::function<Complex(const Eigen::VectorXd&)>& f,
                            QuadraturePtr quad, const GridSpec& fiber,
                            double R_p, int n_p);

/// Samples a closed-form plane transform at the fiber nodes.
FiberField exact_transform(const AnalyticField& f, QuadraturePtr quad,
                           const GridSpec& fiber);

FiberSpectrum fiber_ft(const FiberField& u);
FiberField fiber_ift(const FiberSpectrum& U);

/// Multiplies every frame's spectrum by m(|eta|); the fiber coordinates of
/// eta = B xi have the same norm as xi, so radial multipliers act frame by
/// frame on the fiber dual grid.
FiberSpectrum apply_fiber_multiplier(const FiberSpectrum& U,
                                     const std::function<double(double)>& m);

/// Max over frames and nodes of |a - b|; grids and quadratures must match.
double max_difference(const FiberField& a, const FiberField& b);

}  // namespace kplane
