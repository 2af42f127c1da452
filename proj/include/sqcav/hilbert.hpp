#pragma once

// Truncated two-mode Fock basis and the bosonic operator algebra on it.

#include "matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sqcav::hilbert {

struct BasisState {
    int n_a = 0;
    int n_b = 0;
    int total() const { return n_a + n_b; }
    friend bool operator==(const BasisState& x, const BasisState& y) {
        return x.n_a == y.n_a && x.n_b == y.n_b;
    }
};

// Basis truncated by total photon number n_a + n_b <= max_total.
// For max_total = 2 the ordering is frozen to the six-state convention
// (0,0),(1,0),(0,1),(1,1),(2,0),(0,2), so that density-matrix indices map
// one-to-one onto the element labels rho_11..rho_66 used elsewhere.
// For any other truncation, states are ordered by shell (total photon
// number ascending), then by n_a descending within a shell.
struct BasisSpec {
    int max_total = 0;
    std::vector<BasisState> states;

    int dimension() const { return static_cast<int>(states.size()); }

    // index of (n_a, n_b), or -1 when outside the truncation
    int index_of(int n_a, int n_b) const {
        if (n_a < 0 || n_b < 0 || n_a + n_b > max_total) return -1;
        for (int i = 0; i < dimension(); ++i)
            if (states[i].n_a == n_a && states[i].n_b == n_b) return i;
        return -1;
    }

    friend bool operator==(const BasisSpec& x, const BasisSpec& y) {
        return x.max_total == y.max_total && x.states == y.states;
    }
};

inline BasisSpec enumerate_basis(int max_total) {
    if (max_total < 1)
        throw std::invalid_argument("enumerate_basis: truncation must be at least 1");
    BasisSpec b;
    b.max_total = max_total;
    if (max_total == 2) {
        b.states = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
    } else {
        for (int shell = 0; shell <= max_total; ++shell)
            for (int n_a = shell; n_a >= 0; --n_a)
                b.states.push_back({n_a, shell - n_a});
    }
    return b;
}

enum class Mode { A, B };

struct ModeOperator {
    CMat matrix;
    BasisSpec basis;
    std::string label;
};

// Matrix of the annihilation operator of one cavity mode, truncated to the
// basis: <(n_a-1, n_b)| a_A |(n_a, n_b)> = sqrt(n_a), all else zero.
inline ModeOperator annihilation_operator(Mode mode, const BasisSpec& basis) {
    const int d = basis.dimension();
    ModeOperator op{CMat(d, d), basis, mode == Mode::A ? "a_A" : "a_B"};
    for (int col = 0; col < d; ++col) {
        const BasisState& s = basis.states[col];
        const int n = (mode == Mode::A) ? s.n_a : s.n_b;
        if (n == 0) continue;
        const int row = (mode == Mode::A) ? basis.index_of(s.n_a - 1, s.n_b)
                                          : basis.index_of(s.n_a, s.n_b - 1);
        op.matrix(row, col) = std::sqrt(static_cast<double>(n));
    }
    return op;
}

inline ModeOperator operator_adjoint(const ModeOperator& op) {
    return {op.matrix.adjoint(), op.basis, op.label + "^dag"};
}

inline ModeOperator operator_product(const ModeOperator& x, const ModeOperator& y) {
    if (!(x.basis == y.basis))
        throw std::invalid_argument("operator_product: operators on different bases");
    return {x.matrix * y.matrix, x.basis, x.label + " " + y.label};
}

// Embed a density matrix over the truncated basis into the rectangular
// occupation grid 0..K x 0..K, rows/cols indexed as n_a*(K+1)+n_b. Entries
// outside the truncation are zero; the trace is unchanged. This is the
// representation on which the partial transpose acts.
inline CMat to_tensor_grid(const CMat& rho, const BasisSpec& basis) {
    const int d = basis.dimension();
    if (rho.rows() != static_cast<std::size_t>(d) || rho.cols() != static_cast<std::size_t>(d))
        throw std::invalid_argument("to_tensor_grid: density matrix does not match basis");
    const int n = basis.max_total + 1;
    CMat grid(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n);
    for (int i = 0; i < d; ++i) {
        const BasisState& si = basis.states[i];
        for (int j = 0; j < d; ++j) {
            const BasisState& sj = basis.states[j];
            grid(si.n_a * n + si.n_b, sj.n_a * n + sj.n_b) = rho(i, j);
        }
    }
    return grid;
}

// The six states (0,0),(1,0),(0,1),(1,1),(2,0),(0,2) carry fixed labels
// 1..6 in configuration files and output columns, independent of the
// truncation in use. Returns the basis index of a labelled state.
inline int labelled_state_index(const BasisSpec& basis, int label) {
    static constexpr BasisState kLabelled[6] = {{0, 0}, {1, 0}, {0, 1},
                                                {1, 1}, {2, 0}, {0, 2}};
    if (label < 1 || label > 6)
        throw std::invalid_argument("labelled_state_index: label must be 1..6");
    const BasisState& s = kLabelled[label - 1];
    const int idx = basis.index_of(s.n_a, s.n_b);
    if (idx < 0)
        throw std::invalid_argument("labelled_state_index: state outside truncation");
    return idx;
}

} // namespace sqcav::hilbert
