#pragma once

// Squeezing spectral functions of the OPO output below threshold, and the
// physicality checks on the (N, M) parameter pair consumed by the cavity
// master equation. All frequencies are in the same (arbitrary) units; the
// cavity simulation itself works with the broadband line-center values.

#include "matrix.hpp"

#include <optional>
#include <utility>

namespace sqcav::reservoir {

enum class OpoKind { degenerate, nondegenerate };

struct OpoParams {
    OpoKind kind = OpoKind::degenerate;
    double kappa_c = 1.0;  // OPO cavity damping rate
    double epsilon = 0.0;  // amplification parameter, below threshold: < kappa_c/2
    double alpha = 0.0;    // signal/idler displacement from the pump (nondegenerate)
};

// Mean photon number N and two-photon correlation M of the reservoir seen
// by the cavities. M is stored complex; every scenario in this project uses
// real M >= 0, with |M| = sqrt(N(N+1)) for a maximally squeezed input.
struct SqueezingParams {
    double N = 0.0;
    cplx M = 0.0;
    // optional per-cavity photon numbers (N at the two cavity frequencies);
    // when unset both cavities see the same N.
    std::optional<std::pair<double, double>> per_cavity_N;

    double n_for(int cavity) const {
        if (per_cavity_N) return cavity == 0 ? per_cavity_N->first : per_cavity_N->second;
        return N;
    }
};

struct SpectrumPoint {
    double N = 0.0;
    double M = 0.0;
};

// lambda = kappa_c/2 + epsilon, mu = kappa_c/2 - epsilon
inline std::pair<double, double> lambda_mu(const OpoParams& p) {
    if (p.kappa_c <= 0.0)
        throw std::invalid_argument("lambda_mu: kappa_c must be positive");
    if (p.epsilon < 0.0 || p.epsilon >= 0.5 * p.kappa_c)
        throw std::domain_error("lambda_mu: pump at or above threshold (epsilon >= kappa_c/2)");
    return {0.5 * p.kappa_c + p.epsilon, 0.5 * p.kappa_c - p.epsilon};
}

// OPO parameters with the line widths locked to lambda = sqrt(2) mu, the
// operating point at which the line-center output is N = 1/8, M = 3/8
// (50% squeezing). epsilon/kappa_c = (3 - 2 sqrt(2))/2 ~ 0.17/2.
inline OpoParams half_squeezed_opo(double kappa_c = 1.0,
                                   OpoKind kind = OpoKind::degenerate,
                                   double alpha = 0.0) {
    OpoParams p;
    p.kind = kind;
    p.kappa_c = kappa_c;
    p.epsilon = 0.5 * (3.0 - 2.0 * std::sqrt(2.0)) * kappa_c;
    p.alpha = alpha;
    return p;
}

// Output of a degenerate OPO: a single Lorentzian pair centered on the pump,
//   N = (lambda^2-mu^2)/4 [ 1/(w^2+mu^2) - 1/(w^2+lambda^2) ],
//   M = (lambda^2-mu^2)/4 [ 1/(w^2+mu^2) + 1/(w^2+lambda^2) ],
// with w the detuning from the pump. Satisfies M^2 = N(N+1) at every w.
inline SpectrumPoint degenerate_spectrum(double omega_bar, double lambda, double mu) {
    if (!(lambda >= mu) || mu <= 0.0)
        throw std::domain_error("degenerate_spectrum: requires lambda >= mu > 0");
    const double k = 0.25 * (lambda * lambda - mu * mu);
    const double lm = 1.0 / (omega_bar * omega_bar + mu * mu);
    const double ll = 1.0 / (omega_bar * omega_bar + lambda * lambda);
    return {k * (lm - ll), k * (lm + ll)};
}

enum class Branch { signal, idler };

// One signal-idler pairing of a nondegenerate OPO: the degenerate line shape
// displaced to +alpha (signal) or -alpha (idler). A mode of the signal branch
// at detuning w is correlated with the idler-branch mode at -w, and each such
// pairing is maximally squeezed: M_s(w)^2 = N_s(w) [N_i(-w) + 1] exactly.
inline SpectrumPoint nondegenerate_branch(double omega_bar, double lambda, double mu,
                                          double alpha, Branch branch) {
    const double shift = branch == Branch::signal ? alpha : -alpha;
    return degenerate_spectrum(omega_bar - shift, lambda, mu);
}

// Combined output spectrum of a nondegenerate OPO: both displaced pairings
// summed. Where the branches overlap, the summed functions double-count the
// pairings and M^2 exceeds N(N+1); the sum is meaningful in the
// well-separated regime alpha >> lambda, which is the broadband use case.
inline SpectrumPoint nondegenerate_spectrum(double omega_bar, double lambda, double mu,
                                            double alpha) {
    if (alpha < 0.0)
        throw std::domain_error("nondegenerate_spectrum: alpha must be non-negative");
    const SpectrumPoint s = nondegenerate_branch(omega_bar, lambda, mu, alpha, Branch::signal);
    const SpectrumPoint i = nondegenerate_branch(omega_bar, lambda, mu, alpha, Branch::idler);
    return {s.N + i.N, s.M + i.M};
}

inline SpectrumPoint spectrum(const OpoParams& p, double omega_bar) {
    const auto [lambda, mu] = lambda_mu(p);
    return p.kind == OpoKind::degenerate
               ? degenerate_spectrum(omega_bar, lambda, mu)
               : nondegenerate_spectrum(omega_bar, lambda, mu, p.alpha);
}

// Largest two-photon correlation compatible with mean photon number N.
inline double max_correlation(double n) {
    if (n < 0.0) throw std::domain_error("max_correlation: N must be non-negative");
    return std::sqrt(n * (n + 1.0));
}

struct PhysicalityReport {
    bool ok = true;
    double excess = 0.0;  // |M| - sqrt(N(N+1)) when positive
};

// |M| <= sqrt(N(N+1)) within tolerance. Per-cavity N values, when present,
// are checked against the weaker of the two bounds.
inline PhysicalityReport validate_physical(const SqueezingParams& sq, double tol = 1e-12) {
    double n_min = sq.N;
    if (sq.per_cavity_N)
        n_min = std::min(sq.per_cavity_N->first, sq.per_cavity_N->second);
    if (n_min < 0.0) return {false, std::abs(sq.M)};
    const double bound = max_correlation(n_min);
    const double excess = std::abs(sq.M) - bound;
    if (excess > tol) return {false, excess};
    return {true, 0.0};
}

// Broadband-reservoir sanity check: the squeezing bandwidth should dominate
// the cavity linewidths. The factor 10 is an engineering threshold, not a
// sharp physical boundary.
inline bool broadband_ok(double lambda, double mu, double kappa1, double kappa2) {
    return std::min(lambda, mu) >= 10.0 * std::max(kappa1, kappa2);
}

} // namespace sqcav::reservoir
