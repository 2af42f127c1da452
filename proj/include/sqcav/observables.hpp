#pragma once

// Derived quantities: coherence functions, logarithmic negativity via the
// partial transpose, superposition-basis populations, the closed-form
// entanglement degree of the steady state, and onset-time extraction.

#include "dynamics.hpp"

#include <optional>

namespace sqcav::observables {

// <a_A^dag a_A> and <a_B^dag a_B>
inline std::pair<double, double> mean_photon_numbers(const dynamics::DensityMatrix& rho) {
    double na = 0.0, nb = 0.0;
    for (int i = 0; i < rho.basis.dimension(); ++i) {
        const hilbert::BasisState& s = rho.basis.states[i];
        na += s.n_a * rho.entries(i, i).real();
        nb += s.n_b * rho.entries(i, i).real();
    }
    return {na, nb};
}

struct CoherenceSet {
    double gamma12 = 0.0;  // first-order coherence |<a_A^dag a_B>| normalized
    double eta11 = 0.0;    // single-mode anomalous coherence |<a_A a_A>| normalized
    double eta22 = 0.0;
    double eta12 = 0.0;    // cross anomalous coherence |<a_A a_B>| normalized
};

// Degrees of coherence from operator expectation values; any 0/0 is defined
// as 0 (no excitation implies no coherence). On the six-state basis this
// evaluates to the usual element expressions, e.g.
// |eta12| = |rho41| / sqrt((rho22 + 2 rho55 + rho44)(rho33 + 2 rho66 + rho44)).
inline CoherenceSet coherences(const dynamics::DensityMatrix& rho) {
    const CMat a1 = hilbert::annihilation_operator(hilbert::Mode::A, rho.basis).matrix;
    const CMat a2 = hilbert::annihilation_operator(hilbert::Mode::B, rho.basis).matrix;
    const auto expval = [&](const CMat& op) { return (rho.entries * op).trace(); };
    const auto [na, nb] = mean_photon_numbers(rho);

    const auto ratio = [](double num, double den) {
        return den > 0.0 ? num / den : 0.0;
    };
    CoherenceSet c;
    c.gamma12 = ratio(std::abs(expval(a1.adjoint() * a2)), std::sqrt(na * nb));
    c.eta11 = ratio(std::abs(expval(a1 * a1)), na);
    c.eta22 = ratio(std::abs(expval(a2 * a2)), nb);
    c.eta12 = ratio(std::abs(expval(a1 * a2)), std::sqrt(na * nb));
    return c;
}

enum class TransposeSide { A, B };

// Partial transpose over the rectangular occupation grid.
inline CMat partial_transpose(const dynamics::DensityMatrix& rho,
                              TransposeSide side = TransposeSide::B) {
    const CMat grid = hilbert::to_tensor_grid(rho.entries, rho.basis);
    const int n = rho.basis.max_total + 1;
    CMat pt(grid.rows(), grid.cols());
    for (int na = 0; na < n; ++na)
        for (int nb = 0; nb < n; ++nb)
            for (int ma = 0; ma < n; ++ma)
                for (int mb = 0; mb < n; ++mb) {
                    const cplx v = side == TransposeSide::B
                                       ? grid(na * n + mb, ma * n + nb)
                                       : grid(ma * n + nb, na * n + mb);
                    pt(na * n + nb, ma * n + mb) = v;
                }
    return pt;
}

// log2(1 + 2 |sum of negative partial-transpose eigenvalues|); zero for
// separable states. Eigenvalues within 1e-10 of zero are treated as zero so
// that integrator noise cannot masquerade as entanglement.
inline double logarithmic_negativity(const dynamics::DensityMatrix& rho,
                                     TransposeSide side = TransposeSide::B) {
    const CMat pt = partial_transpose(rho, side);
    const std::vector<double> ev = jacobi_eigenvalues(pt);
    double neg_sum = 0.0;
    for (double e : ev)
        if (e < -1e-10) neg_sum += e;
    return std::log2(1.0 + 2.0 * std::abs(neg_sum));
}

struct SuperpositionPopulations {
    double rho_alpha_alpha = 0.0;
    double rho_beta_beta = 0.0;
    double rho_ss = 0.0;
    double rho_uu = 0.0;
    double rho_m = 0.0;
};

// Populations of the orthogonal superpositions of the zero- and two-photon
// states |1> and |4>,
//   |alpha> = c1 |1> + c4 |4>,  |beta> = c4 |1> - c1 |4>,
//   c1 = sqrt((N+1)/(2N+1)), c4 = sqrt(N/(2N+1)),
// together with the incoherent one- and two-photon mixtures.
inline SuperpositionPopulations superposition_populations(const dynamics::DensityMatrix& rho,
                                                          double n_reservoir) {
    if (n_reservoir < 0.0)
        throw std::invalid_argument("superposition_populations: N must be non-negative");
    const double c1 = std::sqrt((n_reservoir + 1.0) / (2.0 * n_reservoir + 1.0));
    const double c4 = std::sqrt(n_reservoir / (2.0 * n_reservoir + 1.0));
    const double r11 = rho.population(1);
    const double r44 = rho.population(4);
    SuperpositionPopulations s;
    s.rho_m = 0.5 * (rho.element(1, 4) + rho.element(4, 1)).real();
    s.rho_alpha_alpha = c1 * c1 * r11 + c4 * c4 * r44 + 2.0 * c1 * c4 * s.rho_m;
    s.rho_beta_beta = c4 * c4 * r11 + c1 * c1 * r44 - 2.0 * c1 * c4 * s.rho_m;
    s.rho_ss = 0.5 * (rho.population(2) + rho.population(3));
    s.rho_uu = 0.5 * (rho.population(5) + rho.population(6));
    return s;
}

// Degree of entanglement of the pure steady state: 2 sqrt(N(N+1)) / (2N+1).
inline double entanglement_degree(double n_reservoir) {
    if (n_reservoir < 0.0)
        throw std::invalid_argument("entanglement_degree: N must be non-negative");
    return 2.0 * std::sqrt(n_reservoir * (n_reservoir + 1.0)) / (2.0 * n_reservoir + 1.0);
}

// First time a sampled series reaches the threshold, refined by linear
// interpolation between the bracketing samples; nullopt when never reached.
inline std::optional<double> onset_time(std::span<const double> times,
                                        std::span<const double> values, double threshold) {
    if (times.empty() || times.size() != values.size())
        throw std::invalid_argument("onset_time: empty or mismatched series");
    if (threshold <= 0.0)
        throw std::invalid_argument("onset_time: threshold must be positive");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= threshold) {
            if (i == 0) return times[0];
            const double t0 = times[i - 1], t1 = times[i];
            const double v0 = values[i - 1], v1 = values[i];
            if (v1 == v0) return t1;
            return t0 + (threshold - v0) * (t1 - t0) / (v1 - v0);
        }
    }
    return std::nullopt;
}

} // namespace sqcav::observables
