#pragma once

// Deterministic time propagation, steady-state solution, Hermitian
// eigenvalues and state-validity diagnostics.

#include "liouvillian.hpp"

#include <span>

namespace sqcav::dynamics {

struct DensityMatrix {
    CMat entries;
    hilbert::BasisSpec basis;

    double population(int label) const {
        return entries(hilbert::labelled_state_index(basis, label),
                       hilbert::labelled_state_index(basis, label))
            .real();
    }
    cplx element(int label_row, int label_col) const {
        return entries(hilbert::labelled_state_index(basis, label_row),
                       hilbert::labelled_state_index(basis, label_col));
    }
};

inline DensityMatrix basis_state(const hilbert::BasisSpec& basis, int label) {
    const int d = basis.dimension();
    DensityMatrix rho{CMat(d, d), basis};
    const int i = hilbert::labelled_state_index(basis, label);
    rho.entries(i, i) = 1.0;
    return rho;
}

// Diagonal mixture of the six labelled states; weights must sum to one.
inline DensityMatrix from_diagonal_weights(const hilbert::BasisSpec& basis,
                                           std::span<const double> weights) {
    if (weights.size() != 6)
        throw std::invalid_argument("from_diagonal_weights: expected six weights");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("from_diagonal_weights: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("from_diagonal_weights: weights must sum to 1");
    const int d = basis.dimension();
    DensityMatrix rho{CMat(d, d), basis};
    for (int label = 1; label <= 6; ++label) {
        const int i = hilbert::labelled_state_index(basis, label);
        rho.entries(i, i) = weights[label - 1];
    }
    return rho;
}

inline DensityMatrix pure_state(const hilbert::BasisSpec& basis,
                                std::span<const cplx> amplitudes) {
    const int d = basis.dimension();
    if (amplitudes.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("pure_state: amplitude count does not match basis");
    DensityMatrix rho{CMat(d, d), basis};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            rho.entries(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    return rho;
}

// All eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi
// rotations. Rejects inputs whose anti-Hermitian part exceeds herm_tol.
inline std::vector<double> hermitian_eigenvalues(const CMat& h, double herm_tol = 1e-10) {
    if (h.rows() != h.cols())
        throw std::domain_error("hermitian_eigenvalues: matrix not square");
    double dev = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            dev = std::max(dev, std::abs(h(i, j) - std::conj(h(j, i))));
    if (dev > herm_tol)
        throw std::domain_error("hermitian_eigenvalues: input is not Hermitian");
    return jacobi_eigenvalues(h, 1e-12, 100);
}

struct Tolerances {
    double trace = 1e-9;
    double hermiticity = 1e-10;
    double positivity = 1e-9;      // min eigenvalue >= -positivity
    double shell_warning = 1e-3;   // boundary-shell population report threshold
};

struct StateDiagnostics {
    double trace_deviation = 0.0;       // |tr(rho) - 1|
    double hermiticity_deviation = 0.0; // max |rho_ij - conj(rho_ji)|
    double min_eigenvalue = 0.0;
    double shell_population = 0.0;      // population with n_a + n_b == K
    double trace = 1.0;                 // raw trace, meaningful in no-jump modes

    bool valid(const Tolerances& tol, bool check_trace) const {
        if (check_trace && trace_deviation > tol.trace) return false;
        if (hermiticity_deviation > tol.hermiticity) return false;
        if (min_eigenvalue < -tol.positivity) return false;
        return true;
    }
};

inline StateDiagnostics check_density_matrix(const DensityMatrix& rho,
                                             const Tolerances& tol = {}) {
    (void)tol;
    StateDiagnostics d;
    d.trace = rho.entries.trace().real();
    d.trace_deviation = std::abs(rho.entries.trace() - cplx(1.0));
    for (std::size_t i = 0; i < rho.entries.rows(); ++i)
        for (std::size_t j = 0; j < rho.entries.cols(); ++j)
            d.hermiticity_deviation = std::max(
                d.hermiticity_deviation,
                std::abs(rho.entries(i, j) - std::conj(rho.entries(j, i))));
    const CMat sym = 0.5 * (rho.entries + rho.entries.adjoint());
    const std::vector<double> ev = jacobi_eigenvalues(sym);
    d.min_eigenvalue = ev.empty() ? 0.0 : ev.front();
    for (int i = 0; i < rho.basis.dimension(); ++i)
        if (rho.basis.states[i].total() == rho.basis.max_total)
            d.shell_population += rho.entries(i, i).real();
    return d;
}

// One classical fourth-order Runge-Kutta step of d(rho)/dt = G(rho).
inline DensityMatrix rk4_step(const liouvillian::Generator& g, const DensityMatrix& rho,
                              double dt) {
    if (!(rho.basis == g.basis))
        throw std::invalid_argument("rk4_step: state does not match generator basis");
    if (dt <= 0.0) throw std::invalid_argument("rk4_step: dt must be positive");
    const std::vector<cplx>& v = rho.entries.flat();
    const std::size_t n = v.size();
    std::vector<cplx> k1, k2, k3, k4, tmp(n);

    matvec(g.matrix, v, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = v[i] + 0.5 * dt * k1[i];
    matvec(g.matrix, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = v[i] + 0.5 * dt * k2[i];
    matvec(g.matrix, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = v[i] + dt * k3[i];
    matvec(g.matrix, tmp, k4);

    DensityMatrix out{CMat(rho.entries.rows(), rho.entries.cols()), rho.basis};
    std::vector<cplx>& o = out.entries.flat();
    const double w = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i)
        o[i] = v[i] + w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::vector<StateDiagnostics> diagnostics;
    std::vector<bool> flagged;  // per-sample validity flag
    int flagged_count = 0;
    double max_shell_population = 0.0;
};

// Fixed-step propagation sampled every sample_interval (which must be a
// multiple of dt). Validity violations flag the sample; the run continues.
// The trace check is skipped for non-trace-preserving generator kinds.
inline TrajectoryRecord propagate(const liouvillian::Generator& g, const DensityMatrix& rho0,
                                  double t_max, double dt, double sample_interval,
                                  const Tolerances& tol = {}) {
    if (t_max <= 0.0) throw std::invalid_argument("propagate: t_max must be positive");
    if (dt <= 0.0) throw std::invalid_argument("propagate: dt must be positive");
    const long per = std::lround(sample_interval / dt);
    if (per < 1 || std::abs(per * dt - sample_interval) > 1e-9 * sample_interval)
        throw std::invalid_argument("propagate: sample_interval must be a multiple of dt");
    const long steps = std::lround(t_max / dt);
    const bool check_trace = g.kind == liouvillian::GeneratorKind::full;

    TrajectoryRecord rec;
    auto record = [&](double t, const DensityMatrix& rho) {
        StateDiagnostics d = check_density_matrix(rho, tol);
        const bool ok = d.valid(tol, check_trace);
        rec.times.push_back(t);
        rec.states.push_back(rho);
        rec.diagnostics.push_back(d);
        rec.flagged.push_back(!ok);
        if (!ok) ++rec.flagged_count;
        rec.max_shell_population = std::max(rec.max_shell_population, d.shell_population);
    };

    DensityMatrix rho = rho0;
    record(0.0, rho);
    for (long s = 1; s <= steps; ++s) {
        rho = rk4_step(g, rho, dt);
        if (s % per == 0) record(s * dt, rho);
    }
    return rec;
}

// Steady state of a trace-preserving generator: solve G(rho) = 0 with the
// first diagonal-element row replaced by the trace constraint tr(rho) = 1.
// That row is redundant in G (trace preservation), so the replacement keeps
// full rank whenever the null space is one-dimensional.
inline DensityMatrix steady_state(const liouvillian::Generator& g) {
    if (g.kind != liouvillian::GeneratorKind::full)
        throw std::invalid_argument("steady_state: requires the full (trace-preserving) generator");
    const std::size_t d = g.basis.dimension();
    CMat a = g.matrix;
    std::vector<cplx> b(d * d, 0.0);
    for (std::size_t j = 0; j < d * d; ++j) a(0, j) = 0.0;
    for (std::size_t i = 0; i < d; ++i) a(0, i * d + i) = 1.0;
    b[0] = 1.0;
    std::vector<cplx> x;
    try {
        x = lu_solve(std::move(a), std::move(b));
    } catch (const std::runtime_error&) {
        throw std::runtime_error("steady_state: degenerate steady-state (null space not unique)");
    }
    DensityMatrix rho{CMat(d, d), g.basis};
    rho.entries.flat() = std::move(x);
    // residual check against the original generator
    const CMat res = liouvillian::apply_generator(g, rho.entries);
    if (res.max_abs() > 1e-10)
        throw std::runtime_error("steady_state: solution residual exceeds 1e-10");
    return rho;
}

inline double purity(const DensityMatrix& rho) {
    double s = 0.0;
    for (const cplx& z : rho.entries.flat()) s += std::norm(z);
    return s;
}

} // namespace sqcav::dynamics
