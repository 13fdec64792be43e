#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "kplane/grid.hpp"

namespace kplane {

struct Frame;  // grassmannian.hpp

/// Analytic test field with optional closed-form spectrum and closed-form
/// k-plane transform, used as oracles by the verification suites.
struct AnalyticField {
    std::function<Complex(const Eigen::VectorXd&)> eval;
    std::function<Complex(const Eigen::VectorXd&)> spectrum;       // may be null
    std::function<Complex(const Frame&, const Eigen::VectorXd&)> plane_integral;  // may be null
    std::optional<double> support_radius;
    std::optional<double> total_mass;  // closed-form integral over R^d
    std::string description;

    bool has_spectrum() const { return static_cast<bool>(spectrum); }
    bool has_plane_integral() const { return static_cast<bool>(plane_integral); }
};

/// Centered or shifted Gaussian exp(-(x-c)^T Q (x-c)/2) with closed-form
/// spectrum; for c = 0 the k-plane transform is also in closed form.
/// Rejects non-SPD Q, citing the offending eigenvalue.
AnalyticField gaussian(const Eigen::MatrixXd& Q, const Eigen::VectorXd& center);

/// Smooth compactly supported bump exp(-1/(1-|x/R|^2)) on |x| < R.
AnalyticField bump(int dim, double R, double grid_half_width);

/// Radial profile (1+|x|)^{-a} (log(3+|x|))^{-delta}; no spectrum, no
/// closed-form plane integral.
AnalyticField divergence_profile(int dim, double a, double delta);

/// Catalog addressable by string key: "gauss:iso", "gauss:aniso", "bump:2",
/// "divergence". Anisotropy defaults per dimension are fixed for
/// reproducibility.
AnalyticField catalog_field(const std::string& key, int dim, double grid_half_width);

/// Truncated radial plane-integral oracle for the divergence demo:
/// I(R) = |S^{k-1}| * int_0^R r^{k-1} (1+r)^{-a} log(3+r)^{-delta} dr,
/// computed by composite Simpson quadrature.
double truncated_radial_integral(int k, double a, double delta, double R);

/// Surface area of the unit sphere S^n in R^{n+1}.
double sphere_area(int n);

}  // namespace kplane
