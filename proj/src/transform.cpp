#include "kplane/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace kplane {

namespace {

void check_fiber(const GrassmannQuadrature& quad, const GridSpec& fiber) {
    int df = quad.ambient_dim() - quad.plane_dim();
    if (fiber.dim != df)
        throw std::invalid_argument("fiber grid dimension must be d - k");
}

std::vector<Eigen::VectorXd> fiber_dual_nodes(const GridSpec& fiber) {
    std::vector<Eigen::VectorXd> nodes;
    nodes.reserve(fiber.size());
    std::vector<int> idx(fiber.dim, 0);
    do {
        nodes.push_back(fiber.dual_node(idx));
    } while (next_index(idx, fiber.n));
    return nodes;
}

std::vector<Eigen::VectorXd> fiber_primal_nodes(const GridSpec& fiber) {
    std::vector<Eigen::VectorXd> nodes;
    nodes.reserve(fiber.size());
    std::vector<int> idx(fiber.dim, 0);
    do {
        nodes.push_back(fiber.primal_node(idx));
    } while (next_index(idx, fiber.n));
    return nodes;
}

}  // namespace

FiberSpectrum slice_spectrum(const GridFunction& f, QuadraturePtr quad,
                             const GridSpec& fiber) {
    check_fiber(*quad, fiber);
    if (fiber.nyquist_radius() > f.spec.nyquist_radius() * (1.0 + 1e-12))
        throw std::invalid_argument(
            "fiber dual grid reaches beyond the ambient Nyquist ball");
    const int k = quad->plane_dim();
    const double scale = std::pow(2.0 * M_PI, 0.5 * k);
    auto coords = fiber_dual_nodes(fiber);

    FiberSpectrum out;
    out.quad = quad;
    out.fiber = fiber;
    out.frames.resize(quad->count());
    std::vector<Eigen::VectorXd> pts(coords.size());
    for (std::size_t q = 0; q < quad->count(); ++q) {
        const Frame& fr = quad->frames[q];
        for (std::size_t p = 0; p < coords.size(); ++p) pts[p] = fr.B * coords[p];
        SpectrumSamples s = evaluate_spectrum_at(f, pts);
        out.frames[q].resize(coords.size());
        for (std::size_t p = 0; p < coords.size(); ++p)
            out.frames[q][p] = scale * s.values[p];
    }
    return out;
}

FiberField transform_slice(const GridFunction& f, QuadraturePtr quad,
                           const GridSpec& fiber) {
    return fiber_ift(slice_spectrum(f, quad, fiber));
}

FiberField transform_direct(const std::function<Complex(const Eigen::VectorXd&)>& f,
                            QuadraturePtr quad, const GridSpec& fiber,
                            double R_p, int n_p) {
    check_fiber(*quad, fiber);
    if (n_p < 2) throw std::invalid_argument("transform_direct: n_p must be >= 2");
    const int k = quad->plane_dim();
    const double hp = 2.0 * R_p / (n_p - 1);
    auto ynodes = fiber_primal_nodes(fiber);

    // trapezoid nodes and weights on [-R_p, R_p]
    std::vector<double> tnode(n_p), tw(n_p, hp);
    for (int i = 0; i < n_p; ++i) tnode[i] = -R_p + hp * i;
    tw.front() = tw.back() = 0.5 * hp;

    std::size_t plane_size = 1;
    for (int a = 0; a < k; ++a) plane_size *= static_cast<std::size_t>(n_p);

    FiberField out;
    out.quad = quad;
    out.fiber = fiber;
    out.frames.assign(quad->count(), std::vector<Complex>(ynodes.size()));
    for (std::size_t q = 0; q < quad->count(); ++q) {
        const Frame& fr = quad->frames[q];
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(ynodes.size()); ++p) {
            Eigen::VectorXd base = fr.B * ynodes[p];
            Complex acc = 0.0;
            std::vector<int> idx(k, 0);
            for (std::size_t lin = 0; lin < plane_size; ++lin) {
                double w = 1.0;
                Eigen::VectorXd x = base;
                for (int a = 0; a < k; ++a) {
                    w *= tw[idx[a]];
                    x += tnode[idx[a]] * fr.A.col(a);
                }
                acc += w * f(x);
                next_index(idx, n_p);
            }
            out.frames[q][p] = acc;
        }
    }
    return out;
}

FiberField exact_transform(const AnalyticField& f, QuadraturePtr quad,
                           const GridSpec& fiber) {
    check_fiber(*quad, fiber);
    if (!f.has_plane_integral())
        throw std::invalid_argument("field has no closed-form plane transform");
    auto ynodes = fiber_primal_nodes(fiber);
    FiberField out;
    out.quad = quad;
    out.fiber = fiber;
    out.frames.assign(quad->count(), std::vector<Complex>(ynodes.size()));
    for (std::size_t q = 0; q < quad->count(); ++q)
        for (std::size_t p = 0; p < ynodes.size(); ++p)
            out.frames[q][p] = f.plane_integral(quad->frames[q], ynodes[p]);
    return out;
}

FiberSpectrum fiber_ft(const FiberField& u) {
    FiberSpectrum out;
    out.quad = u.quad;
    out.fiber = u.fiber;
    out.frames.resize(u.frames.size());
    for (std::size_t q = 0; q < u.frames.size(); ++q) {
        out.frames[q].resize(u.frames[q].size());
        detail::unitary_dft(u.fiber.dim, u.fiber.n, u.fiber.half_width, true,
                            u.frames[q].data(), out.frames[q].data());
    }
    return out;
}

FiberField fiber_ift(const FiberSpectrum& U) {
    FiberField out;
    out.quad = U.quad;
    out.fiber = U.fiber;
    out.frames.resize(U.frames.size());
    for (std::size_t q = 0; q < U.frames.size(); ++q) {
        out.frames[q].resize(U.frames[q].size());
        detail::unitary_dft(U.fiber.dim, U.fiber.n, U.fiber.half_width, false,
                            U.frames[q].data(), out.frames[q].data());
    }
    return out;
}

FiberSpectrum apply_fiber_multiplier(const FiberSpectrum& U,
                                     const std::function<double(double)>& m) {
    FiberSpectrum out;
    out.quad = U.quad;
    out.fiber = U.fiber;
    out.frames.resize(U.frames.size());

    std::vector<double> weight;
    weight.reserve(U.fiber.size());
    std::vector<int> idx(U.fiber.dim, 0);
    do {
        weight.push_back(m(U.fiber.dual_node(idx).norm()));
    } while (next_index(idx, U.fiber.n));

    for (std::size_t q = 0; q < U.frames.size(); ++q) {
        out.frames[q].resize(U.frames[q].size());
        for (std::size_t p = 0; p < U.frames[q].size(); ++p)
            out.frames[q][p] = weight[p] * U.frames[q][p];
    }
    return out;
}

double max_difference(const FiberField& a, const FiberField& b) {
    if (!(a.fiber == b.fiber) || a.frames.size() != b.frames.size())
        throw std::invalid_argument("max_difference: mismatched fiber fields");
    double m = 0.0;
    for (std::size_t q = 0; q < a.frames.size(); ++q)
        for (std::size_t p = 0; p < a.frames[q].size(); ++p)
            m = std::max(m, std::abs(a.frames[q][p] - b.frames[q][p]));
    return m;
}

}  // namespace kplane
