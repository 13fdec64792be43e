#include "kplane/grassmannian.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "json.hpp"

namespace kplane {

double Frame::orthonormality_defect() const {
    const int d = ambient_dim();
    const int k = plane_dim();
    double defect = 0.0;
    Eigen::MatrixXd gA = A.transpose() * A - Eigen::MatrixXd::Identity(k, k);
    Eigen::MatrixXd gB = B.transpose() * B - Eigen::MatrixXd::Identity(d - k, d - k);
    Eigen::MatrixXd cross = A.transpose() * B;
    defect = std::max(defect, gA.cwiseAbs().maxCoeff());
    if (d > k) {
        defect = std::max(defect, gB.cwiseAbs().maxCoeff());
        defect = std::max(defect, cross.cwiseAbs().maxCoeff());
    }
    return defect;
}

double total_measure(int k, int d) {
    if (k < 0 || d < 1 || k > d)
        throw std::invalid_argument("total_measure: need 0 <= k <= d, d >= 1");
    if (k == 0 || k == d) return 1.0;
    if (k == 1) return sphere_area(d - 1) / 2.0;
    double num = 1.0, den = 2.0;
    for (int j = 1; j <= k; ++j) num *= sphere_area(d - j);
    for (int j = 1; j <= k - 1; ++j) den *= sphere_area(j);
    return num / den;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based Gaussian stream: each (seed, sample index) pair owns an
// independent generator, so results do not depend on evaluation order.
struct GaussStream {
    std::uint64_t state;
    bool have_spare = false;
    double spare = 0.0;

    explicit GaussStream(std::uint64_t seed, std::uint64_t counter) {
        std::uint64_t s = seed;
        splitmix64(s);
        state = s + 0x6a09e667f3bcc909ULL * (counter + 1);
    }

    double uniform() {  // in (0, 1]
        return static_cast<double>((splitmix64(state) >> 11) + 1) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        double u1 = uniform(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare = r * std::sin(a);
        have_spare = true;
        return r * std::cos(a);
    }
};

Frame frame_from_gaussian(int k, int d, GaussStream& g) {
    Eigen::MatrixXd M(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) M(i, j) = g.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
    Eigen::MatrixXd R = qr.matrixQR();
    for (int j = 0; j < d; ++j)
        if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
    Frame f;
    f.A = Q.leftCols(k);
    f.B = Q.rightCols(d - k);
    return f;
}

}  // namespace

QuadraturePtr haar_sample(int k, int d, int count, std::uint64_t seed) {
    if (k < 1 || k >= d) throw std::invalid_argument("haar_sample: need 1 <= k < d");
    if (count < 1) throw std::invalid_argument("haar_sample: count must be positive");
    auto quad = std::make_shared<GrassmannQuadrature>();
    quad->kind = "mc:" + std::to_string(count) + ":" + std::to_string(seed);
    quad->frames.reserve(count);
    const double w = total_measure(k, d) / count;
    for (int i = 0; i < count; ++i) {
        GaussStream g(seed, static_cast<std::uint64_t>(i));
        quad->frames.push_back(frame_from_gaussian(k, d, g));
        quad->weights.push_back(w);
    }
    return quad;
}

QuadraturePtr circle_quadrature(int M) {
    if (M < 1) throw std::invalid_argument("circle_quadrature: M must be positive");
    auto quad = std::make_shared<GrassmannQuadrature>();
    quad->kind = "circle:" + std::to_string(M);
    for (int i = 0; i < M; ++i) {
        double th = M_PI * i / M;
        Frame f;
        f.A = Eigen::MatrixXd(2, 1);
        f.B = Eigen::MatrixXd(2, 1);
        f.A << std::cos(th), std::sin(th);
        f.B << -std::sin(th), std::cos(th);
        quad->frames.push_back(std::move(f));
        quad->weights.push_back(M_PI / M);
    }
    return quad;
}

namespace {

// Left side of the polar identity: weighted fiber-grid sums of f(B y)|y|^k.
Complex polar_lhs(const std::function<void(const std::vector<Eigen::VectorXd>&,
                                           std::vector<Complex>&)>& batch_eval,
                  const GrassmannQuadrature& quad, int n_f, double L_f) {
    const int d = quad.ambient_dim();
    const int k = quad.plane_dim();
    const int df = d - k;
    const double h_f = 2.0 * L_f / n_f;
    std::size_t fiber_size = 1;
    for (int a = 0; a < df; ++a) fiber_size *= static_cast<std::size_t>(n_f);

    std::vector<Eigen::VectorXd> ycoords(fiber_size);
    std::vector<double> radial(fiber_size);
    {
        std::vector<int> idx(df, 0);
        std::size_t p = 0;
        do {
            Eigen::VectorXd y(df);
            for (int a = 0; a < df; ++a) y[a] = -L_f + h_f * idx[a];
            radial[p] = std::pow(y.norm(), k);
            ycoords[p++] = std::move(y);
        } while (next_index(idx, n_f));
    }

    Complex lhs = 0.0;
    std::vector<Eigen::VectorXd> pts(fiber_size);
    std::vector<Complex> vals;
    for (std::size_t q = 0; q < quad.count(); ++q) {
        const Frame& fr = quad.frames[q];
        for (std::size_t p = 0; p < fiber_size; ++p) pts[p] = fr.B * ycoords[p];
        batch_eval(pts, vals);
        Complex s = 0.0;
        for (std::size_t p = 0; p < fiber_size; ++p) s += vals[p] * radial[p];
        lhs += quad.weights[q] * std::pow(h_f, df) * s;
    }
    return lhs;
}

PolarCheck finish(Complex lhs, Complex rhs) {
    PolarCheck c;
    c.lhs = lhs.real();
    c.rhs = rhs.real();
    double denom = std::max(std::abs(rhs), 1e-300);
    c.relative_residual = std::abs(lhs - rhs) / denom;
    return c;
}

}  // namespace

PolarCheck polar_identity_residual(const AnalyticField& f,
                                   const GrassmannQuadrature& quad,
                                   int n_f, double L_f) {
    if (!f.total_mass)
        throw std::invalid_argument("polar identity needs a closed-form total mass");
    auto batch = [&f](const std::vector<Eigen::VectorXd>& pts,
                      std::vector<Complex>& out) {
        out.resize(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) out[i] = f.eval(pts[i]);
    };
    Complex lhs = polar_lhs(batch, quad, n_f, L_f);
    Complex rhs = total_measure(quad.plane_dim(), quad.ambient_dim() - 1) *
                  (*f.total_mass);
    return finish(lhs, rhs);
}

PolarCheck polar_identity_residual(const GridFunction& f,
                                   const GrassmannQuadrature& quad,
                                   int n_f, double L_f) {
    SpectralFunction F = forward_ft(f);
    auto batch = [&F](const std::vector<Eigen::VectorXd>& pts,
                      std::vector<Complex>& out) {
        out = evaluate_field_at(F, pts);
    };
    Complex lhs = polar_lhs(batch, quad, n_f, L_f);
    Complex total = 0.0;
    for (Complex v : f.values) total += v;
    total *= std::pow(f.spec.spacing(), f.spec.dim);
    Complex rhs = total_measure(quad.plane_dim(), quad.ambient_dim() - 1) * total;
    return finish(lhs, rhs);
}

std::string quadrature_descriptor(const GrassmannQuadrature& quad) {
    nlohmann::ordered_json j;
    j["kind"] = quad.kind;
    j["count"] = quad.count();
    j["k"] = quad.plane_dim();
    j["d"] = quad.ambient_dim();
    return j.dump();
}

}  // namespace kplane
