#include "kplane/fields.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kplane/grassmannian.hpp"

namespace kplane {

double sphere_area(int n) {
    if (n < 0) throw std::invalid_argument("sphere_area: n must be >= 0");
    // |S^n| = 2 pi^{(n+1)/2} / Gamma((n+1)/2)
    return 2.0 * std::pow(M_PI, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

AnalyticField gaussian(const Eigen::MatrixXd& Q, const Eigen::VectorXd& center) {
    const int d = static_cast<int>(Q.rows());
    if (Q.cols() != d || center.size() != d)
        throw std::invalid_argument("gaussian: dimension mismatch");
    if (!Q.isApprox(Q.transpose(), 1e-12))
        throw std::invalid_argument("gaussian: Q must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
    const Eigen::VectorXd ev = es.eigenvalues();
    for (int i = 0; i < d; ++i)
        if (!(ev[i] > 0.0)) {
            std::ostringstream os;
            os << "gaussian: Q not positive definite, eigenvalue " << ev[i];
            throw std::invalid_argument(os.str());
        }

    const Eigen::MatrixXd Qinv = Q.inverse();
    const double detQ = Q.determinant();
    const bool centered = center.isZero(0.0);

    AnalyticField f;
    f.description = "gaussian";
    f.eval = [Q, center](const Eigen::VectorXd& x) -> Complex {
        const Eigen::VectorXd z = x - center;
        return Complex(std::exp(-0.5 * z.dot(Q * z)), 0.0);
    };
    // Unitary convention: fhat(xi) = det(Q)^{-1/2} e^{-xi^T Q^{-1} xi / 2} e^{-i c.xi}.
    f.spectrum = [Qinv, detQ, center](const Eigen::VectorXd& xi) -> Complex {
        const double mag =
            std::exp(-0.5 * xi.dot(Qinv * xi)) / std::sqrt(detQ);
        return std::polar(mag, -center.dot(xi));
    };
    f.total_mass = std::pow(2.0 * M_PI, 0.5 * d) / std::sqrt(detQ);
    if (centered) {
        f.plane_integral = [Q](const Frame& fr, const Eigen::VectorXd& y_coords) -> Complex {
            const int k = static_cast<int>(fr.A.cols());
            const Eigen::VectorXd y = fr.B * y_coords;
            const Eigen::MatrixXd AQA = fr.A.transpose() * Q * fr.A;
            const Eigen::VectorXd b = fr.A.transpose() * (Q * y);
            const double quad = y.dot(Q * y) - b.dot(AQA.ldlt().solve(b));
            const double val = std::pow(2.0 * M_PI, 0.5 * k) /
                               std::sqrt(AQA.determinant()) * std::exp(-0.5 * quad);
            return Complex(val, 0.0);
        };
    }
    return f;
}

AnalyticField bump(int dim, double R, double grid_half_width) {
    if (!(R > 0.0)) throw std::invalid_argument("bump: R must be > 0");
    if (R >= grid_half_width)
        throw std::invalid_argument("bump: R must be < grid half_width");
    AnalyticField f;
    f.description = "bump";
    f.support_radius = R;
    f.eval = [R](const Eigen::VectorXd& x) -> Complex {
        const double r2 = x.squaredNorm() / (R * R);
        if (r2 >= 1.0) return Complex(0.0, 0.0);
        return Complex(std::exp(-1.0 / (1.0 - r2)), 0.0);
    };
    (void)dim;
    return f;
}

AnalyticField divergence_profile(int dim, double a, double delta) {
    if (!(a > 0.0)) throw std::invalid_argument("divergence_profile: a must be > 0");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("divergence_profile: delta must be in (0,1)");
    AnalyticField f;
    f.description = "divergence";
    f.eval = [a, delta](const Eigen::VectorXd& x) -> Complex {
        const double r = x.norm();
        return Complex(std::pow(1.0 + r, -a) * std::pow(std::log(3.0 + r), -delta), 0.0);
    };
    (void)dim;
    return f;
}

AnalyticField catalog_field(const std::string& key, int dim, double grid_half_width) {
    if (key == "gauss:iso")
        return gaussian(Eigen::MatrixXd::Identity(dim, dim), Eigen::VectorXd::Zero(dim));
    if (key == "gauss:aniso") {
        Eigen::VectorXd diag(dim);
        if (dim == 1) diag << 2.0;
        else if (dim == 2) diag << 1.0, 4.0;
        else if (dim == 3) diag << 1.0, 2.0, 2.0;
        else {
            diag.setConstant(2.0);
            diag[0] = 1.0;
        }
        return gaussian(diag.asDiagonal().toDenseMatrix(), Eigen::VectorXd::Zero(dim));
    }
    if (key.rfind("bump:", 0) == 0) {
        const double R = std::stod(key.substr(5));
        return bump(dim, R, grid_half_width);
    }
    if (key == "divergence") return divergence_profile(dim, 1.0, 0.9);
    throw std::invalid_argument("catalog_field: unknown key '" + key + "'");
}

double truncated_radial_integral(int k, double a, double delta, double R) {
    if (k < 1) throw std::invalid_argument("truncated_radial_integral: k must be >= 1");
    const auto integrand = [&](double r) {
        return std::pow(r, k - 1) * std::pow(1.0 + r, -a) *
               std::pow(std::log(3.0 + r), -delta);
    };
    // Composite Simpson; the integrand is smooth on [0, R].
    const int cells = 20000;
    const double h = R / cells;
    double acc = integrand(0.0) + integrand(R);
    for (int i = 1; i < cells; ++i)
        acc += (i % 2 ? 4.0 : 2.0) * integrand(i * h);
    return sphere_area(k - 1) * acc * h / 3.0;
}

}  // namespace kplane
