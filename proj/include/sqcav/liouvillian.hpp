#pragma once

// Master-equation generator for two independently decaying cavities driven
// by a broadband squeezed reservoir, its split into an effective
// (non-Hermitian) Hamiltonian part and a quantum-jump part, the reduced
// no-jump system in the symmetric-decay regime, and a hand-coded
// seven-element right-hand side that serves as an independent oracle for
// the superoperator.

#include "hilbert.hpp"
#include "reservoir.hpp"

#include <functional>

namespace sqcav::liouvillian {

struct SystemParams {
    double kappa1 = 1.0;   // decay rate of cavity A
    double kappa2 = 1.0;   // decay rate of cavity B
    double kappa12 = 1.0;  // cross-damping amplitude, enters only the M terms
    double eta = 1.0;      // coupling efficiency of the squeezed field
    reservoir::SqueezingParams squeezing;

    void validate() const {
        if (kappa1 <= 0.0 || kappa2 <= 0.0)
            throw std::invalid_argument("SystemParams: cavity decay rates must be positive");
        if (kappa12 < 0.0)
            throw std::invalid_argument("SystemParams: kappa12 must be non-negative");
        if (eta < 0.0 || eta > 1.0)
            throw std::invalid_argument("SystemParams: eta must lie in [0, 1]");
        const auto rep = reservoir::validate_physical(squeezing);
        if (!rep.ok)
            throw std::invalid_argument("SystemParams: unphysical squeezing, |M| exceeds sqrt(N(N+1))");
    }

    bool symmetric_rates() const {
        return kappa1 == kappa2 && kappa2 == kappa12;
    }
};

inline double geometric_cross_damping(double kappa1, double kappa2) {
    return std::sqrt(kappa1 * kappa2);
}

enum class GeneratorKind { full, jump, no_jump_strict };

// Linear map acting on row-major vectorized density matrices:
// vec(rho)[i*D + j] = rho_ij, d/dt vec(rho) = matrix * vec(rho).
struct Generator {
    CMat matrix;
    hilbert::BasisSpec basis;
    GeneratorKind kind = GeneratorKind::full;
};

namespace detail {

inline CMat left_mul(const CMat& x) { return kron(x, CMat::identity(x.rows())); }
inline CMat right_mul(const CMat& x) { return kron(CMat::identity(x.rows()), x.transpose()); }
// rho -> x rho y
inline CMat sandwich(const CMat& x, const CMat& y) { return kron(x, y.transpose()); }

struct ModePair {
    CMat a1, a2;    // annihilation operators of cavities A and B
    CMat ad1, ad2;  // their adjoints
};

inline ModePair mode_operators(const hilbert::BasisSpec& basis) {
    ModePair m;
    m.a1 = hilbert::annihilation_operator(hilbert::Mode::A, basis).matrix;
    m.a2 = hilbert::annihilation_operator(hilbert::Mode::B, basis).matrix;
    m.ad1 = m.a1.adjoint();
    m.ad2 = m.a2.adjoint();
    return m;
}

} // namespace detail

// Full generator: per-cavity thermal damping/pumping at rates
// kappa_j (eta N_j + 1) and kappa_j eta N_j, plus the two-photon cross terms
// with amplitude kappa12 eta M. M multiplies the pair-creation combination
// (its conjugate the pair-annihilation one), matching the effective
// Hamiltonian / jump split below; for real M, the generator acting on the
// six-state basis reproduces the tabulated element equations of motion.
inline Generator build_full_generator(const SystemParams& p, const hilbert::BasisSpec& basis) {
    p.validate();
    using namespace detail;
    const ModePair m = mode_operators(basis);
    const std::size_t d2 = static_cast<std::size_t>(basis.dimension()) * basis.dimension();
    CMat g(d2, d2);
    const double n1 = p.eta * p.squeezing.n_for(0);
    const double n2 = p.eta * p.squeezing.n_for(1);
    const cplx mm = p.eta * p.squeezing.M;

    const struct { const CMat *a, *ad; double kappa, n; } locals[2] = {
        {&m.a1, &m.ad1, p.kappa1, n1}, {&m.a2, &m.ad2, p.kappa2, n2}};
    for (const auto& l : locals) {
        const CMat ada = *l.ad * *l.a;
        const CMat aad = *l.a * *l.ad;
        g += l.kappa * (l.n + 1.0) *
             (sandwich(*l.a, *l.ad) - 0.5 * left_mul(ada) - 0.5 * right_mul(ada));
        g += l.kappa * l.n *
             (sandwich(*l.ad, *l.a) - 0.5 * left_mul(aad) - 0.5 * right_mul(aad));
    }
    const struct { const CMat *ai, *aj, *adi, *adj; } pairs[2] = {
        {&m.a1, &m.a2, &m.ad1, &m.ad2}, {&m.a2, &m.a1, &m.ad2, &m.ad1}};
    for (const auto& c : pairs) {
        const CMat adad = *c.adi * *c.adj;
        const CMat aa = *c.ai * *c.aj;
        g += p.kappa12 * (0.5 * mm * (left_mul(adad) + right_mul(adad)) +
                          0.5 * std::conj(mm) * (left_mul(aa) + right_mul(aa)) -
                          mm * sandwich(*c.adi, *c.adj) -
                          std::conj(mm) * sandwich(*c.ai, *c.aj));
    }
    return {std::move(g), basis, GeneratorKind::full};
}

// Quantum-jump (sandwich) part:
//   sum_j kappa_j [ (eta N_j + 1) a_j rho a_j^dag + eta N_j a_j^dag rho a_j ]
//   - sum_{i != j} kappa12 eta [ M a_i^dag rho a_j^dag + M* a_i rho a_j ].
inline Generator build_jump_superoperator(const SystemParams& p, const hilbert::BasisSpec& basis) {
    p.validate();
    using namespace detail;
    const ModePair m = mode_operators(basis);
    const std::size_t d2 = static_cast<std::size_t>(basis.dimension()) * basis.dimension();
    CMat g(d2, d2);
    const double n1 = p.eta * p.squeezing.n_for(0);
    const double n2 = p.eta * p.squeezing.n_for(1);
    const cplx mm = p.eta * p.squeezing.M;

    g += p.kappa1 * (n1 + 1.0) * sandwich(m.a1, m.ad1);
    g += p.kappa1 * n1 * sandwich(m.ad1, m.a1);
    g += p.kappa2 * (n2 + 1.0) * sandwich(m.a2, m.ad2);
    g += p.kappa2 * n2 * sandwich(m.ad2, m.a2);
    g -= p.kappa12 * (mm * sandwich(m.ad1, m.ad2) + std::conj(mm) * sandwich(m.a1, m.a2));
    g -= p.kappa12 * (mm * sandwich(m.ad2, m.ad1) + std::conj(mm) * sandwich(m.a2, m.a1));
    return {std::move(g), basis, GeneratorKind::jump};
}

// Coherent nonunitary part rho -> (H_eff rho - rho H_eff^dag)/i with
//   H_eff = -(i/2) sum_j kappa_j [ (eta N_j + 1) a_j^dag a_j + eta N_j a_j a_j^dag ]
//           +(i/2) sum_{i != j} kappa12 eta [ M a_i^dag a_j^dag + M* a_i a_j ],
// free-evolution terms omitted (interaction picture, resonant pump).
inline Generator build_effective_hamiltonian_part(const SystemParams& p,
                                                  const hilbert::BasisSpec& basis) {
    p.validate();
    using namespace detail;
    const ModePair m = mode_operators(basis);
    const std::size_t d = basis.dimension();
    const double n1 = p.eta * p.squeezing.n_for(0);
    const double n2 = p.eta * p.squeezing.n_for(1);
    const cplx mm = p.eta * p.squeezing.M;

    // K = anticommutator weight, C = coherent two-photon coupling
    CMat k_op(d, d), c_op(d, d);
    k_op += p.kappa1 * (n1 + 1.0) * (m.ad1 * m.a1) + p.kappa1 * n1 * (m.a1 * m.ad1);
    k_op += p.kappa2 * (n2 + 1.0) * (m.ad2 * m.a2) + p.kappa2 * n2 * (m.a2 * m.ad2);
    c_op += p.kappa12 * (mm * (m.ad1 * m.ad2) + std::conj(mm) * (m.a1 * m.a2));
    c_op += p.kappa12 * (mm * (m.ad2 * m.ad1) + std::conj(mm) * (m.a2 * m.a1));

    CMat g = (-0.5) * (left_mul(k_op) + right_mul(k_op)) +
             0.5 * (left_mul(c_op) + right_mul(c_op));
    return {std::move(g), basis, GeneratorKind::no_jump_strict};
}

// d(rho)/dt for a density matrix given as a D x D matrix over the
// generator's basis.
inline CMat apply_generator(const Generator& g, const CMat& rho) {
    const std::size_t d = g.basis.dimension();
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("apply_generator: state does not match generator basis");
    std::vector<cplx> y;
    matvec(g.matrix, rho.flat(), y);
    CMat out(d, d);
    out.flat() = std::move(y);
    return out;
}

// Reduced state (rho_11, rho_ss, rho_44, rho_uu, rho_m) with
// rho_ss = (rho_22 + rho_33)/2, rho_uu = (rho_55 + rho_66)/2 and
// rho_m = (rho_14 + rho_41)/2.
struct ReducedState {
    double rho11 = 0.0;
    double rho_ss = 0.0;
    double rho44 = 0.0;
    double rho_uu = 0.0;
    double rho_m = 0.0;

    double trace() const { return rho11 + 2.0 * rho_ss + rho44 + 2.0 * rho_uu; }
};

// Equations of motion of the reduced state with quantum jumps dropped from
// the (rho11, rho44, rho_m) sector, in the symmetric regime
// kappa1 = kappa2 = kappa12 = kappa, eta = 1, M real:
//   d rho11 = -2 N k rho11 + 2 M k rho_m
//   d rho44 = -2 (N+1) k rho44 + 2 M k rho_m
//   d rho_ss = -(4N+1) k rho_ss + (N+1) k (rho44 + 2 rho_uu) + N k rho11 - 2 M k rho_m
//   d rho_uu = -2 (N+1) k rho_uu + 2 N k rho_ss
//   d rho_m  = -(2N+1) k rho_m + M k (rho11 + rho44)
// Note this is not the same as subtracting the full jump superoperator,
// which would also strip the feeding terms from the rho_ss and rho_uu rows;
// that stricter variant is available through
// build_effective_hamiltonian_part.
inline std::function<ReducedState(const ReducedState&)>
build_reduced_no_jump_rhs(const SystemParams& p) {
    p.validate();
    if (!p.symmetric_rates())
        throw std::invalid_argument(
            "build_reduced_no_jump_rhs: requires kappa1 = kappa2 = kappa12");
    if (std::abs(p.squeezing.M.imag()) > 1e-14)
        throw std::invalid_argument("build_reduced_no_jump_rhs: requires real M");
    if (p.squeezing.per_cavity_N)
        throw std::invalid_argument("build_reduced_no_jump_rhs: requires a single N");
    const double k = p.kappa1;
    const double n = p.eta * p.squeezing.N;
    const double m = p.eta * p.squeezing.M.real();
    return [k, n, m](const ReducedState& r) {
        ReducedState d;
        d.rho11 = -2.0 * n * k * r.rho11 + 2.0 * m * k * r.rho_m;
        d.rho44 = -2.0 * (n + 1.0) * k * r.rho44 + 2.0 * m * k * r.rho_m;
        d.rho_ss = -(4.0 * n + 1.0) * k * r.rho_ss +
                   (n + 1.0) * k * (r.rho44 + 2.0 * r.rho_uu) + n * k * r.rho11 -
                   2.0 * m * k * r.rho_m;
        d.rho_uu = -2.0 * (n + 1.0) * k * r.rho_uu + 2.0 * n * k * r.rho_ss;
        d.rho_m = -(2.0 * n + 1.0) * k * r.rho_m + m * k * (r.rho11 + r.rho44);
        return d;
    };
}

// The seven coupled matrix elements that close on themselves for diagonal
// initial states of the six-state basis.
struct SixStateElements {
    double rho11 = 0.0, rho22 = 0.0, rho33 = 0.0;
    double rho44 = 0.0, rho55 = 0.0, rho66 = 0.0;
    cplx rho14 = 0.0;
};

// Hand-coded right-hand side of the population/coherence equations of
// motion over the six-state basis. Written out term by term, independent of
// the superoperator assembly, to serve as an oracle against it.
inline SixStateElements reduced_rhs_element_equations(const SystemParams& p,
                                                      const SixStateElements& r) {
    p.validate();
    const double k1 = p.kappa1, k2 = p.kappa2, k12 = p.kappa12;
    const double n1 = p.eta * p.squeezing.n_for(0);
    const double n2 = p.eta * p.squeezing.n_for(1);
    const cplx m = p.eta * p.squeezing.M;
    const cplx rho41 = std::conj(r.rho14);
    const double cross = (m * r.rho14 + std::conj(m) * rho41).real();

    SixStateElements d;
    d.rho11 = -(n1 * k1 + n2 * k2) * r.rho11 + (n1 + 1.0) * k1 * r.rho22 +
              (n2 + 1.0) * k2 * r.rho33 + k12 * cross;
    d.rho22 = -((3.0 * n1 + 1.0) * k1 + n2 * k2) * r.rho22 + (n2 + 1.0) * k2 * r.rho44 +
              n1 * k1 * r.rho11 + 2.0 * (n1 + 1.0) * k1 * r.rho55 - k12 * cross;
    d.rho33 = -((3.0 * n2 + 1.0) * k2 + n1 * k1) * r.rho33 + (n1 + 1.0) * k1 * r.rho44 +
              n2 * k2 * r.rho11 + 2.0 * (n2 + 1.0) * k2 * r.rho66 - k12 * cross;
    d.rho44 = -((n1 + 1.0) * k1 + (n2 + 1.0) * k2) * r.rho44 + n2 * k2 * r.rho22 +
              n1 * k1 * r.rho33 + k12 * cross;
    d.rho55 = -2.0 * (n1 + 1.0) * k1 * r.rho55 + 2.0 * n1 * k1 * r.rho22;
    d.rho66 = -2.0 * (n2 + 1.0) * k2 * r.rho66 + 2.0 * n2 * k2 * r.rho33;
    d.rho14 = -0.5 * ((2.0 * n1 + 1.0) * k1 + (2.0 * n2 + 1.0) * k2) * r.rho14 +
              k12 * std::conj(m) * (r.rho11 + r.rho44 - r.rho22 - r.rho33);
    return d;
}

} // namespace sqcav::liouvillian
