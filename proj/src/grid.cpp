#include "kplane/grid.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <fftw3.h>

namespace kplane {

GridSpec::GridSpec(int d, int n_, double L) : dim(d), n(n_), half_width(L) {
    if (d < 1) throw std::invalid_argument("GridSpec: dimension must be >= 1");
    if (n_ < 8 || n_ % 2 != 0)
        throw std::invalid_argument("GridSpec: n must be an even integer >= 8");
    if (!(L > 0.0)) throw std::invalid_argument("GridSpec: half_width must be > 0");
}

std::size_t GridSpec::size() const {
    std::size_t s = 1;
    for (int a = 0; a < dim; ++a) s *= static_cast<std::size_t>(n);
    return s;
}

Eigen::VectorXd GridSpec::primal_node(std::span<const int> idx) const {
    Eigen::VectorXd x(dim);
    for (int a = 0; a < dim; ++a) x[a] = primal_coord(idx[a]);
    return x;
}

Eigen::VectorXd GridSpec::dual_node(std::span<const int> idx) const {
    Eigen::VectorXd xi(dim);
    for (int a = 0; a < dim; ++a) xi[a] = dual_coord(idx[a]);
    return xi;
}

bool next_index(std::vector<int>& idx, int n) {
    for (int a = static_cast<int>(idx.size()) - 1; a >= 0; --a) {
        if (++idx[a] < n) return true;
        idx[a] = 0;
    }
    return false;
}

GridFunction sample(const std::function<Complex(const Eigen::VectorXd&)>& field,
                    const GridSpec& spec) {
    GridFunction f{spec, std::vector<Complex>(spec.size())};
    std::vector<int> idx(spec.dim, 0);
    std::size_t flat = 0;
    do {
        const Complex v = field(spec.primal_node(idx));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::ostringstream os;
            os << "sample: non-finite field value at node (";
            for (int a = 0; a < spec.dim; ++a)
                os << (a ? ", " : "") << spec.primal_coord(idx[a]);
            os << ")";
            throw std::runtime_error(os.str());
        }
        f.values[flat++] = v;
    } while (next_index(idx, spec.n));
    return f;
}

namespace detail {

namespace {
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

int index_parity(const std::vector<int>& idx, int half) {
    int s = 0;
    for (int u : idx) s += u - half;
    return ((s % 2) + 2) % 2;
}
}  // namespace

void unitary_dft(int dim, int n, double half_width, bool forward,
                 const Complex* in, Complex* out) {
    const double h = 2.0 * half_width / n;
    const double dxi = M_PI / half_width;
    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(n);

    std::vector<Complex> buf(total);
    const int half = n / 2;

    // Strides of the shared linearization (last axis fastest).
    std::vector<int> dims(dim, n);

    if (forward) {
        std::copy(in, in + total, buf.data());
    } else {
        // Scatter ascending-frequency data into DFT order with the
        // alternating phase from the shifted grid origin.
        std::vector<int> idx(dim, 0);
        std::size_t flat = 0;
        do {
            std::size_t dft_flat = 0;
            for (int a = 0; a < dim; ++a)
                dft_flat = dft_flat * n + ((idx[a] - half) % n + n) % n;
            const double sgn = index_parity(idx, half) ? -1.0 : 1.0;
            buf[dft_flat] = sgn * in[flat++];
        } while (next_index(idx, n));
    }

    std::vector<Complex> dft(total);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_plan plan = fftw_plan_dft(
            dim, dims.data(), reinterpret_cast<fftw_complex*>(buf.data()),
            reinterpret_cast<fftw_complex*>(dft.data()),
            forward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }

    double scale = std::pow(2.0 * M_PI, -0.5 * dim);
    scale *= forward ? std::pow(h, dim) : std::pow(dxi, dim);

    if (forward) {
        std::vector<int> idx(dim, 0);
        std::size_t flat = 0;
        do {
            std::size_t dft_flat = 0;
            for (int a = 0; a < dim; ++a)
                dft_flat = dft_flat * n + ((idx[a] - half) % n + n) % n;
            const double sgn = index_parity(idx, half) ? -1.0 : 1.0;
            out[flat++] = scale * sgn * dft[dft_flat];
        } while (next_index(idx, n));
    } else {
        for (std::size_t i = 0; i < total; ++i) out[i] = scale * dft[i];
    }
}

Complex nudft_point(int dim, int n, double half_width, const Complex* values,
                    const double* xi, bool forward_sign) {
    const double h = 2.0 * half_width / n;
    const double sign = forward_sign ? -1.0 : 1.0;

    // Per-axis phase vectors, then an axis-by-axis tensor contraction.
    std::vector<std::vector<Complex>> phase(dim, std::vector<Complex>(n));
    for (int a = 0; a < dim; ++a)
        for (int m = 0; m < n; ++m) {
            const double x = -half_width + h * m;
            phase[a][m] = std::polar(1.0, sign * x * xi[a]);
        }

    std::size_t block = 1;
    for (int a = 0; a < dim; ++a) block *= static_cast<std::size_t>(n);

    std::vector<Complex> work(values, values + block);
    std::vector<Complex> reduced;
    for (int a = dim - 1; a >= 0; --a) {
        block /= n;
        reduced.assign(block, Complex(0.0, 0.0));
        const Complex* p = phase[a].data();
        for (std::size_t b = 0; b < block; ++b) {
            Complex acc(0.0, 0.0);
            const Complex* row = work.data() + b * n;
            for (int m = 0; m < n; ++m) acc += row[m] * p[m];
            reduced[b] = acc;
        }
        work.swap(reduced);
    }
    return work[0];
}

}  // namespace detail

SpectralFunction forward_ft(const GridFunction& f) {
    SpectralFunction F{f.spec, std::vector<Complex>(f.spec.size())};
    detail::unitary_dft(f.spec.dim, f.spec.n, f.spec.half_width, true,
                        f.values.data(), F.values.data());
    return F;
}

GridFunction inverse_ft(const SpectralFunction& F) {
    GridFunction f{F.spec, std::vector<Complex>(F.spec.size())};
    detail::unitary_dft(F.spec.dim, F.spec.n, F.spec.half_width, false,
                        F.values.data(), f.values.data());
    return f;
}

SpectrumSamples evaluate_spectrum_at(const GridFunction& f,
                                     const std::vector<Eigen::VectorXd>& points) {
    const GridSpec& spec = f.spec;
    const double scale = std::pow(2.0 * M_PI, -0.5 * spec.dim) *
                         std::pow(spec.spacing(), spec.dim);
    const double K = spec.nyquist_radius();

    SpectrumSamples out;
    out.values.resize(points.size());
    out.beyond_nyquist.assign(points.size(), 0);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i) {
        const Eigen::VectorXd& xi = points[i];
        out.values[i] = scale * detail::nudft_point(spec.dim, spec.n,
                                                   spec.half_width,
                                                   f.values.data(), xi.data(), true);
        if (xi.norm() > K * (1.0 + 1e-12)) out.beyond_nyquist[i] = 1;
    }
    for (char c : out.beyond_nyquist)
        if (c) { out.any_beyond = true; break; }
    return out;
}

std::vector<Complex> evaluate_field_at(const SpectralFunction& F,
                                       const std::vector<Eigen::VectorXd>& points) {
    const GridSpec& spec = F.spec;
    // The dual grid is itself a shifted uniform grid with origin -K and
    // spacing dxi, so the same contraction applies with swapped roles.
    const double scale = std::pow(2.0 * M_PI, -0.5 * spec.dim) *
                         std::pow(spec.dual_spacing(), spec.dim);
    std::vector<Complex> out(points.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i) {
        out[i] = scale * detail::nudft_point(spec.dim, spec.n,
                                            spec.nyquist_radius(),
                                            F.values.data(), points[i].data(), false);
    }
    return out;
}

}  // namespace kplane
