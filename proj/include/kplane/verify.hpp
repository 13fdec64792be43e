#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kplane {

/// Grid profiles pinned for the verification suites: d=2 runs n=64, L=8 and
/// d=3 runs n=32, L=6 at scale 1; the "fine" profile doubles n.
struct VerifyProfile {
    std::string name = "default";
    int scale = 1;
    std::uint64_t seed = 0;

    static VerifyProfile named(const std::string& name, std::uint64_t seed);
};

struct SuiteReport {
    std::string suite_id;
    std::string params_json;  // serialized parameter block
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
    double runtime_ms = 0.0;  // informational only, never serialized
};

/// One JSON line per report; excludes runtime so reruns are byte-identical.
std::string report_line(const SuiteReport& r);

/// Fourier-slice identity residuals for the catalog Gaussians.
std::vector<SuiteReport> suite_fst(const VerifyProfile& profile);

/// Weighted-Sobolev isometry ratio checks (deterministic rule at d=2,
/// Monte Carlo with propagated sigma at d=3).
std::vector<SuiteReport> suite_isometry(const VerifyProfile& profile);

/// Two-sided Sobolev estimate: exact-constant lower bound plus upper-ratio
/// stability under grid doubling.
std::vector<SuiteReport> suite_sobolev_bounds(const VerifyProfile& profile);

/// Besov / Triebel-Lizorkin boundedness ratios and their refinement drift.
std::vector<SuiteReport> suite_besov_tl(const VerifyProfile& profile);

/// Bundled property checks: multiplier intertwining, the pointwise
/// vector-valued inequality, the polar integration identity, and the
/// F = B = H norm equivalence on the Grassmannian carrier.
std::vector<SuiteReport> suite_props(const VerifyProfile& profile);

/// Truncated plane integrals of the slowly decaying radial profile; passes
/// as "divergent" on growth beyond the factor, as "convergent" when the
/// last refinement step moves less than 5%.
SuiteReport demo_divergence(int k, double a, double delta,
                            const std::vector<double>& radii,
                            double growth_factor);

/// All suites plus the two demo regimes, sorted by suite_id.
std::vector<SuiteReport> run_all(const VerifyProfile& profile);

}  // namespace kplane
