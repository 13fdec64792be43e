#include "kplane/norms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kplane {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_exponent(double p, const char* name) {
    if (!(p >= 1.0)) throw std::invalid_argument(std::string(name) + " must be >= 1");
}

// p-mean of magnitudes against a cell measure; supremum for p = inf.
double lp_reduce(const std::vector<double>& mags, double cell, double p) {
    if (p == kInf) {
        double m = 0.0;
        for (double v : mags) m = std::max(m, v);
        return m;
    }
    double s = 0.0;
    for (double v : mags) s += std::pow(v, p);
    return std::pow(cell * s, 1.0 / p);
}

double ell_r(const std::vector<double>& terms, double r) {
    if (r == kInf) {
        double m = 0.0;
        for (double v : terms) m = std::max(m, v);
        return m;
    }
    double s = 0.0;
    for (double v : terms) s += std::pow(v, r);
    return std::pow(s, 1.0 / r);
}

double spectral_weight(double rho, double s, double t_w) {
    if (rho == 0.0) return t_w == 0.0 ? 1.0 : 0.0;
    return std::pow(rho, t_w) * std::pow(1.0 + rho * rho, 0.5 * (s - t_w));
}

std::vector<double> dual_radii(const GridSpec& spec) {
    std::vector<double> r;
    r.reserve(spec.size());
    std::vector<int> idx(spec.dim, 0);
    do {
        r.push_back(spec.dual_node(idx).norm());
    } while (next_index(idx, spec.n));
    return r;
}

}  // namespace

double lp_norm(const GridFunction& f, double p) {
    check_exponent(p, "p");
    std::vector<double> mags(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) mags[i] = std::abs(f.values[i]);
    return lp_reduce(mags, std::pow(f.spec.spacing(), f.spec.dim), p);
}

double mixed_norm(const FiberField& u, double q, double t) {
    check_exponent(q, "q");
    check_exponent(t, "t");
    const double cell = std::pow(u.fiber.spacing(), u.fiber.dim);
    if (q == kInf) {
        double m = 0.0;
        for (const auto& fr : u.frames) {
            std::vector<double> mags(fr.size());
            for (std::size_t i = 0; i < fr.size(); ++i) mags[i] = std::abs(fr[i]);
            m = std::max(m, lp_reduce(mags, cell, t));
        }
        return m;
    }
    double s = 0.0;
    for (std::size_t fidx = 0; fidx < u.frames.size(); ++fidx) {
        const auto& fr = u.frames[fidx];
        std::vector<double> mags(fr.size());
        for (std::size_t i = 0; i < fr.size(); ++i) mags[i] = std::abs(fr[i]);
        s += u.quad->weights[fidx] * std::pow(lp_reduce(mags, cell, t), q);
    }
    return std::pow(s, 1.0 / q);
}

double sobolev(const SpectralFunction& F, double s) {
    return weighted_sobolev(F, s, 2.0, 0.0);
}

double sobolev(const GridFunction& f, double s) {
    return sobolev(forward_ft(f), s);
}

double sobolev_g(const FiberField& u, double s) {
    FiberSpectrum U = fiber_ft(u);
    auto radii = dual_radii(U.fiber);
    const double cell = std::pow(U.fiber.dual_spacing(), U.fiber.dim);
    double acc = 0.0;
    for (std::size_t q = 0; q < U.frames.size(); ++q) {
        double inner = 0.0;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            double w = std::pow(1.0 + radii[i] * radii[i], s);
            inner += w * std::norm(U.frames[q][i]);
        }
        acc += U.quad->weights[q] * cell * inner;
    }
    return std::sqrt(acc);
}

double weighted_sobolev(const SpectralFunction& F, double s, double p, double t_w) {
    check_exponent(p, "p");
    if (p != kInf && !(t_w > -F.spec.dim / p))
        throw std::invalid_argument("weighted norm requires t_w > -d/p");
    auto radii = dual_radii(F.spec);
    std::vector<double> mags(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i)
        mags[i] = spectral_weight(radii[i], s, t_w) * std::abs(F.values[i]);
    return lp_reduce(mags, std::pow(F.spec.dual_spacing(), F.spec.dim), p);
}

double weighted_sobolev_g(const FiberField& u, double s, double p, double t_w) {
    check_exponent(p, "p");
    const int df = u.fiber.dim;
    if (p != kInf && !(t_w > -df / p))
        throw std::invalid_argument("weighted norm requires t_w > -(d-k)/p on fibers");
    FiberSpectrum U = fiber_ft(u);
    auto radii = dual_radii(U.fiber);
    const double cell = std::pow(U.fiber.dual_spacing(), df);
    const int k = u.quad->plane_dim();
    const int d = u.quad->ambient_dim();
    const double pref =
        std::pow(2.0 * M_PI, -0.5 * p * k) / total_measure(k, d - 1);
    double acc = 0.0;
    for (std::size_t q = 0; q < U.frames.size(); ++q) {
        double inner = 0.0;
        for (std::size_t i = 0; i < radii.size(); ++i)
            inner += std::pow(spectral_weight(radii[i], s, t_w) *
                                  std::abs(U.frames[q][i]),
                              p);
        acc += U.quad->weights[q] * cell * inner;
    }
    return std::pow(pref * acc, 1.0 / p);
}

BandNormResult besov(const SpectralFunction& F, double s, double p, double r,
                     const DyadicPartition& P) {
    check_exponent(p, "p");
    check_exponent(r, "r");
    BandNormResult res;
    std::vector<double> terms;
    for (int j = 0; j <= P.j_max; ++j) {
        bool clipped = false;
        GridFunction piece = inverse_ft(project(F, P, j, &clipped));
        res.clipped = res.clipped || clipped;
        terms.push_back(std::pow(2.0, j * s) * lp_norm(piece, p));
    }
    res.value = ell_r(terms, r);
    return res;
}

BandNormResult tl(const SpectralFunction& F, double s, double p, double r,
                  const DyadicPartition& P) {
    check_exponent(p, "p");
    check_exponent(r, "r");
    BandNormResult res;
    std::vector<std::vector<Complex>> pieces;
    for (int j = 0; j <= P.j_max; ++j) {
        bool clipped = false;
        pieces.push_back(inverse_ft(project(F, P, j, &clipped)).values);
        res.clipped = res.clipped || clipped;
    }
    std::vector<double> point(F.values.size());
    std::vector<double> terms(P.j_max + 1);
    for (std::size_t x = 0; x < point.size(); ++x) {
        for (int j = 0; j <= P.j_max; ++j)
            terms[j] = std::pow(2.0, j * s) * std::abs(pieces[j][x]);
        point[x] = ell_r(terms, r);
    }
    GridFunction g;
    g.spec = F.spec;
    g.values.assign(point.begin(), point.end());
    res.value = lp_norm(g, p);
    return res;
}

BandNormResult besov_g(const FiberField& u, double s, double q, double t, double r,
                       const DyadicPartition& P) {
    check_exponent(q, "q");
    check_exponent(t, "t");
    check_exponent(r, "r");
    FiberSpectrum U = fiber_ft(u);
    BandNormResult res;
    std::vector<double> terms;
    for (int j = 0; j <= P.j_max; ++j) {
        bool clipped = false;
        FiberField piece = fiber_ift(project_fiber(U, P, j, &clipped));
        res.clipped = res.clipped || clipped;
        terms.push_back(std::pow(2.0, j * s) * mixed_norm(piece, q, t));
    }
    res.value = ell_r(terms, r);
    return res;
}

BandNormResult tl_g(const FiberField& u, double s, double q, double t, double r,
                    const DyadicPartition& P) {
    check_exponent(q, "q");
    check_exponent(t, "t");
    check_exponent(r, "r");
    FiberSpectrum U = fiber_ft(u);
    BandNormResult res;
    std::vector<FiberField> pieces;
    for (int j = 0; j <= P.j_max; ++j) {
        bool clipped = false;
        pieces.push_back(fiber_ift(project_fiber(U, P, j, &clipped)));
        res.clipped = res.clipped || clipped;
    }
    FiberField g;
    g.quad = u.quad;
    g.fiber = u.fiber;
    g.frames.assign(u.frames.size(), std::vector<Complex>(u.frames[0].size()));
    std::vector<double> terms(P.j_max + 1);
    for (std::size_t fr = 0; fr < u.frames.size(); ++fr)
        for (std::size_t x = 0; x < u.frames[fr].size(); ++x) {
            for (int j = 0; j <= P.j_max; ++j)
                terms[j] = std::pow(2.0, j * s) * std::abs(pieces[j].frames[fr][x]);
            g.frames[fr][x] = ell_r(terms, r);
        }
    res.value = mixed_norm(g, q, t);
    return res;
}

}  // namespace kplane
