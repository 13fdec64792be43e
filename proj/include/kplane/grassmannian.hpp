#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kplane/fields.hpp"
#include "kplane/grid.hpp"

namespace kplane {

/// A point of G_{k,d} as an orthonormal basis pair: columns of A span the
/// subspace, columns of B span its orthogonal complement.
struct Frame {
    Eigen::MatrixXd A;  // d x k
    Eigen::MatrixXd B;  // d x (d-k)

    int ambient_dim() const { return static_cast<int>(A.rows()); }
    int plane_dim() const { return static_cast<int>(A.cols()); }

    /// Max deviation from orthonormality/complementarity, for invariant checks.
    double orthonormality_defect() const;
};

/// Affine plane (alpha, y), with y given in the coordinates of B's columns.
struct AffinePlane {
    Frame frame;
    Eigen::VectorXd y_coords;  // dimension d-k

    Eigen::VectorXd ambient_offset() const { return frame.B * y_coords; }
};

/// Weighted frame set approximating integration against the invariant
/// measure on G_{k,d} with total mass |G_{k,d}|.
struct GrassmannQuadrature {
    std::vector<Frame> frames;
    std::vector<double> weights;
    std::string kind;  // "circle:M" or "mc:count:seed"

    int ambient_dim() const { return frames.at(0).ambient_dim(); }
    int plane_dim() const { return frames.at(0).plane_dim(); }
    std::size_t count() const { return frames.size(); }
};

using QuadraturePtr = std::shared_ptr<const GrassmannQuadrature>;

/// Total invariant measure |G_{k,d}|:
///   |G_{0,d}| = 1, |G_{1,d}| = |S^{d-1}|/2,
///   |G_{k,d}| = |S^{d-1}|...|S^{d-k}| / (2 |S^{k-1}|...|S^1|) for k >= 2.
double total_measure(int k, int d);

/// Seeded Monte Carlo sampling of the invariant measure: orthonormalize
/// standard-Gaussian d x d matrices with a positive-diagonal QR convention.
/// Deterministic per (seed, sample index), independent of worker count.
QuadraturePtr haar_sample(int k, int d, int count, std::uint64_t seed);

/// Deterministic rule on G_{1,2}: frames at theta_i = i*pi/M, weights pi/M.
QuadraturePtr circle_quadrature(int M);

struct PolarCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double relative_residual = 0.0;
};

/// Generalized polar identity
///   int_G int_{alpha^perp} f(y)|y|^k dy dalpha = |G_{k,d-1}| int f
/// with the fiber integral realized on a uniform grid of n_f points per axis
/// over [-L_f, L_f)^{d-k}. The analytic overload uses the field's closed-form
/// total mass; the grid overload uses trigonometric interpolation off-grid
/// and the plain grid sum on the right-hand side.
PolarCheck polar_identity_residual(const AnalyticField& f,
                                   const GrassmannQuadrature& quad,
                                   int n_f, double L_f);
PolarCheck polar_identity_residual(const GridFunction& f,
                                   const GrassmannQuadrature& quad,
                                   int n_f, double L_f);

/// JSON-able descriptor of the rule actually used (kind, count).
std::string quadrature_descriptor(const GrassmannQuadrature& quad);

}  // namespace kplane
