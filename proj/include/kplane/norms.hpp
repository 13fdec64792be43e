#pragma once

#include "kplane/grid.hpp"
#include "kplane/littlewood_paley.hpp"
#include "kplane/transform.hpp"

namespace kplane {

/// Value plus a flag for dyadic bands that were cut by the Nyquist ball.
struct BandNormResult {
    double value = 0.0;
    bool clipped = false;
};

/// (h^d sum |f|^p)^{1/p}; supremum over nodes for p = inf.
double lp_norm(const GridFunction& f, double p);

/// Mixed norm on the Grassmannian carrier: inner exponent t over each fiber,
/// outer exponent q over the frame quadrature.
double mixed_norm(const FiberField& u, double q, double t);

/// H^s norm: dual-grid sum of (1+|xi|^2)^s |fhat|^2, square root.
double sobolev(const SpectralFunction& F, double s);
double sobolev(const GridFunction& f, double s);

/// Fiberwise H^s norm on the Grassmannian carrier (no prefactor).
double sobolev_g(const FiberField& u, double s);

/// Weighted norm with Fourier-side weight |xi|^{t_w} (1+|xi|^2)^{(s-t_w)/2}
/// in L^p of the spectrum. Requires t_w > -d/p for integrability near 0;
/// the zero-frequency bin carries weight 0 when t_w < 0 and weight 1 when
/// t_w = 0.
double weighted_sobolev(const SpectralFunction& F, double s, double p, double t_w);

/// Grassmannian version with prefactor (2*pi)^{-pk/2} / |G_{k,d-1}| inside
/// the 1/p root.
double weighted_sobolev_g(const FiberField& u, double s, double p, double t_w);

/// Besov: ell^r over bands j of 2^{js} ||M_j f||_{L^p}.
BandNormResult besov(const SpectralFunction& F, double s, double p, double r,
                     const DyadicPartition& P);

/// Triebel-Lizorkin: pointwise ell^r over bands, then L^p.
BandNormResult tl(const SpectralFunction& F, double s, double p, double r,
                  const DyadicPartition& P);

/// Grassmannian Besov: ell^r over bands of 2^{js} mixed_norm(u_j, q, t).
BandNormResult besov_g(const FiberField& u, double s, double q, double t, double r,
                       const DyadicPartition& P);

/// Grassmannian Triebel-Lizorkin: pointwise ell^r over bands, then the
/// inner-t / outer-q mixed norm.
BandNormResult tl_g(const FiberField& u, double s, double q, double t, double r,
                    const DyadicPartition& P);

}  // namespace kplane
