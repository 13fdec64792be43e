#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace kplane {

using Complex = std::complex<double>;

/// Uniform node-centered grid on [-L, L)^d. Primal nodes x_m = -L + h*m,
/// dual nodes xi_m = (pi/L)*m with m in {-n/2, ..., n/2-1}^d. Values are
/// linearized row-major over axes in ascending index (last axis fastest);
/// dual nodes are stored in ascending frequency order, i.e. storage index
/// u = m + n/2 per axis.
struct GridSpec {
    int dim = 1;
    int n = 8;
    double half_width = 1.0;

    GridSpec() = default;
    GridSpec(int d, int n_, double L);

    double spacing() const { return 2.0 * half_width / n; }
    double dual_spacing() const { return M_PI / half_width; }
    double nyquist_radius() const { return M_PI * n / (2.0 * half_width); }
    std::size_t size() const;

    double primal_coord(int m) const { return -half_width + spacing() * m; }
    double dual_coord(int u) const { return dual_spacing() * (u - n / 2); }

    Eigen::VectorXd primal_node(std::span<const int> idx) const;
    Eigen::VectorXd dual_node(std::span<const int> idx) const;

    bool operator==(const GridSpec&) const = default;
};

/// Advances a multi-index in the fixed linearization order; returns false
/// after the last index.
bool next_index(std::vector<int>& idx, int n);

struct GridFunction {
    GridSpec spec;
    std::vector<Complex> values;
};

struct SpectralFunction {
    GridSpec spec;
    std::vector<Complex> values;
};

/// Pointwise sampling of a complex field at the primal nodes. Throws
/// std::runtime_error naming the offending node if the field evaluates to
/// a non-finite value.
GridFunction sample(const std::function<Complex(const Eigen::VectorXd&)>& field,
                    const GridSpec& spec);

/// Unitary discrete Fourier transform on the shifted grid:
/// fhat(xi_m) = (2*pi)^{-d/2} h^d sum_n f(x_n) exp(-i x_n . xi_m),
/// exact as a trigonometric sum.
SpectralFunction forward_ft(const GridFunction& f);

/// Exact inverse of forward_ft (finite trigonometric sum).
GridFunction inverse_ft(const SpectralFunction& F);

/// Nonuniform spectral evaluation at arbitrary frequency points.
struct SpectrumSamples {
    std::vector<Complex> values;
    std::vector<char> beyond_nyquist;  // per-point warning flag
    bool any_beyond = false;
};

/// Direct NUDFT (2*pi)^{-d/2} h^d sum_n f(x_n) exp(-i x_n . xi); agrees
/// with forward_ft at dual nodes up to reduction-order rounding. Points
/// beyond the Nyquist ball are evaluated but flagged.
SpectrumSamples evaluate_spectrum_at(const GridFunction& f,
                                     const std::vector<Eigen::VectorXd>& points);

/// Trigonometric interpolation of the spectral representation at arbitrary
/// spatial points: f(x) = (2*pi)^{-d/2} dxi^d sum_m F(xi_m) exp(i x . xi_m).
std::vector<Complex> evaluate_field_at(const SpectralFunction& F,
                                       const std::vector<Eigen::VectorXd>& points);

namespace detail {
/// Shared unitary DFT core on a shifted grid of given dimension; used by the
/// ambient grid and by per-frame fiber transforms. `forward` maps primal
/// samples to the ascending-frequency spectrum; otherwise the exact inverse.
void unitary_dft(int dim, int n, double half_width, bool forward,
                 const Complex* in, Complex* out);

/// NUDFT core: tensor contraction of grid values against per-axis phase
/// vectors for one frequency point.
Complex nudft_point(int dim, int n, double half_width, const Complex* values,
                    const double* xi, bool forward_sign);
}  // namespace detail

}  // namespace kplane
