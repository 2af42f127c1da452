#include "test_support.hpp"

#include "sqcav/observables.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sqcav;
using namespace sqcav::observables;
using Catch::Approx;

namespace {

liouvillian::SystemParams standard_params(double n = 0.125) {
    liouvillian::SystemParams p;
    p.kappa1 = p.kappa2 = p.kappa12 = 1.0;
    p.squeezing.N = n;
    p.squeezing.M = reservoir::max_correlation(n);
    return p;
}

dynamics::DensityMatrix driven_steady_state() {
    const auto basis = hilbert::enumerate_basis(2);
    return dynamics::steady_state(liouvillian::build_full_generator(standard_params(), basis));
}

} // namespace

TEST_CASE("mean photon numbers") {
    const auto basis = hilbert::enumerate_basis(2);
    {
        const auto [na, nb] = mean_photon_numbers(dynamics::basis_state(basis, 5));
        REQUIRE(na == 2.0);
        REQUIRE(nb == 0.0);
    }
    {
        const auto [na, nb] = mean_photon_numbers(driven_steady_state());
        REQUIRE(na == Approx(0.1).margin(1e-10));
        REQUIRE(nb == Approx(0.1).margin(1e-10));
    }
    {
        const auto [na, nb] = mean_photon_numbers(dynamics::basis_state(basis, 1));
        REQUIRE(na == 0.0);
        REQUIRE(nb == 0.0);
    }
}

TEST_CASE("coherence functions") {
    const auto basis = hilbert::enumerate_basis(2);

    SECTION("steady state: anomalous cross coherence M/N, nothing else") {
        const CoherenceSet c = coherences(driven_steady_state());
        REQUIRE(c.eta12 == Approx(3.0).margin(1e-9));
        REQUIRE(c.gamma12 == Approx(0.0).margin(1e-10));
        REQUIRE(c.eta11 == Approx(0.0).margin(1e-10));
        REQUIRE(c.eta22 == Approx(0.0).margin(1e-10));
    }

    SECTION("vacuum: all zero by the 0/0 convention") {
        const CoherenceSet c = coherences(dynamics::basis_state(basis, 1));
        REQUIRE(c.gamma12 == 0.0);
        REQUIRE(c.eta11 == 0.0);
        REQUIRE(c.eta22 == 0.0);
        REQUIRE(c.eta12 == 0.0);
    }

    SECTION("diagonal state |4><4| carries no coherence") {
        const CoherenceSet c = coherences(dynamics::basis_state(basis, 4));
        REQUIRE(c.gamma12 == 0.0);
        REQUIRE(c.eta12 == 0.0);
    }

    SECTION("operator expectations reduce to the six-state element formulas") {
        for (int draw = 0; draw < 25; ++draw) {
            const auto rho = test_support::random_state(basis);
            const CoherenceSet c = coherences(rho);
            const auto& r = rho.entries;
            const double den1 = (r(1, 1) + 2.0 * r(4, 4) + r(3, 3)).real();
            const double den2 = (r(2, 2) + 2.0 * r(5, 5) + r(3, 3)).real();
            const double s2 = std::sqrt(2.0);
            REQUIRE(c.gamma12 ==
                    Approx(std::abs(r(1, 2) + s2 * r(4, 3) + s2 * r(3, 5)) /
                           std::sqrt(den1 * den2)).margin(1e-12));
            REQUIRE(c.eta11 == Approx(s2 * std::abs(r(4, 0)) / den1).margin(1e-12));
            REQUIRE(c.eta22 == Approx(s2 * std::abs(r(5, 0)) / den2).margin(1e-12));
            REQUIRE(c.eta12 ==
                    Approx(std::abs(r(3, 0)) / std::sqrt(den1 * den2)).margin(1e-12));
        }
    }

    SECTION("first-order and single-mode coherences never build up from basis states") {
        const auto g = liouvillian::build_full_generator(standard_params(), basis);
        for (int label : {2, 5}) {
            const auto rec =
                dynamics::propagate(g, dynamics::basis_state(basis, label), 3.0, 1e-3, 0.25);
            for (const auto& state : rec.states) {
                const CoherenceSet c = coherences(state);
                REQUIRE(c.gamma12 < 1e-9);
                REQUIRE(c.eta11 < 1e-9);
                REQUIRE(c.eta22 < 1e-9);
            }
        }
    }
}

TEST_CASE("logarithmic negativity") {
    const auto basis = hilbert::enumerate_basis(2);

    SECTION("maximally entangled superposition of |1> and |4>") {
        std::vector<cplx> amps(6, 0.0);
        amps[0] = amps[3] = 1.0 / std::sqrt(2.0);
        const auto rho = dynamics::pure_state(basis, amps);
        REQUIRE(logarithmic_negativity(rho) == Approx(1.0).margin(1e-12));
    }

    SECTION("vacuum is separable") {
        REQUIRE(logarithmic_negativity(dynamics::basis_state(basis, 1)) == 0.0);
    }

    SECTION("driven steady state reaches log2(1.6)") {
        REQUIRE(logarithmic_negativity(driven_steady_state()) ==
                Approx(std::log2(1.6)).margin(1e-9));
    }

    SECTION("closed form for superpositions of the zero- and two-photon states") {
        for (int draw = 0; draw < 20; ++draw) {
            const double theta = test_support::uniform(0.0, 1.5707963);
            std::vector<cplx> amps(6, 0.0);
            amps[0] = std::cos(theta);
            amps[3] = std::sin(theta);
            const auto rho = dynamics::pure_state(basis, amps);
            const double expected = std::log2(1.0 + 2.0 * std::abs(std::cos(theta) * std::sin(theta)));
            REQUIRE(logarithmic_negativity(rho) == Approx(expected).margin(1e-12));
            // transposing either mode gives the same answer
            REQUIRE(logarithmic_negativity(rho, TransposeSide::A) ==
                    Approx(expected).margin(1e-12));
        }
    }

    SECTION("random diagonal product mixtures are separable") {
        for (int draw = 0; draw < 20; ++draw) {
            const double wa = test_support::uniform(0.0, 1.0);
            const double wb = test_support::uniform(0.0, 1.0);
            std::array<double, 6> w{};
            w[0] = (1 - wa) * (1 - wb);
            w[1] = wa * (1 - wb);
            w[2] = (1 - wa) * wb;
            w[3] = wa * wb;
            double sum = 0.0;
            for (double x : w) sum += x;
            for (double& x : w) x /= sum;
            const auto rho = dynamics::from_diagonal_weights(basis, w);
            REQUIRE(logarithmic_negativity(rho) == 0.0);
        }
    }

    SECTION("invariant under local phase rotations") {
        const auto rho = driven_steady_state();
        const double base = logarithmic_negativity(rho);
        for (int draw = 0; draw < 5; ++draw) {
            const double pa = test_support::uniform(0.0, 6.28), pb = test_support::uniform(0.0, 6.28);
            CMat u(6, 6);
            for (int i = 0; i < 6; ++i) {
                const auto& s = basis.states[i];
                u(i, i) = std::polar(1.0, pa * s.n_a + pb * s.n_b);
            }
            const dynamics::DensityMatrix rotated{u * rho.entries * u.adjoint(), basis};
            REQUIRE(logarithmic_negativity(rotated) == Approx(base).margin(1e-12));
        }
    }
}

TEST_CASE("superposition populations") {
    const auto basis = hilbert::enumerate_basis(2);

    SECTION("steady state is the pure superposition") {
        const auto s = superposition_populations(driven_steady_state(), 0.125);
        REQUIRE(s.rho_alpha_alpha == Approx(1.0).margin(1e-9));
        REQUIRE(s.rho_beta_beta == Approx(0.0).margin(1e-9));
        REQUIRE(s.rho_ss == Approx(0.0).margin(1e-10));
        REQUIRE(s.rho_uu == Approx(0.0).margin(1e-10));
    }

    SECTION("vacuum splits 0.9 / 0.1 at N = 0.125") {
        const auto s = superposition_populations(dynamics::basis_state(basis, 1), 0.125);
        REQUIRE(s.rho_alpha_alpha == Approx(0.9).margin(1e-14));
        REQUIRE(s.rho_beta_beta == Approx(0.1).margin(1e-14));
    }

    SECTION("at N = 0 the superposition collapses onto the ground state") {
        for (int draw = 0; draw < 5; ++draw) {
            const auto rho = test_support::random_state(basis);
            const auto s = superposition_populations(rho, 0.0);
            REQUIRE(s.rho_alpha_alpha == Approx(rho.entries(0, 0).real()).margin(1e-14));
        }
    }

    SECTION("the basis change preserves the two-photon subspace population") {
        for (int draw = 0; draw < 20; ++draw) {
            const auto rho = test_support::random_state(basis);
            const double n = test_support::uniform(0.0, 2.0);
            const auto s = superposition_populations(rho, n);
            REQUIRE(s.rho_alpha_alpha + s.rho_beta_beta ==
                    Approx((rho.entries(0, 0) + rho.entries(3, 3)).real()).margin(1e-12));
        }
    }
}

TEST_CASE("entanglement degree of the steady state") {
    REQUIRE(entanglement_degree(0.125) == Approx(0.6).margin(1e-14));
    REQUIRE(entanglement_degree(0.0) == 0.0);
    REQUIRE(entanglement_degree(1e8) == Approx(1.0).margin(1e-8));
    REQUIRE_THROWS_AS(entanglement_degree(-0.1), std::invalid_argument);
}

TEST_CASE("steady anomalous coherence equals M over N") {
    for (double n : {0.05, 0.125, 0.3}) {
        const auto basis = hilbert::enumerate_basis(2);
        const auto ss =
            dynamics::steady_state(liouvillian::build_full_generator(standard_params(n), basis));
        const double m = reservoir::max_correlation(n);
        REQUIRE(coherences(ss).eta12 == Approx(m / n).margin(1e-6));
    }
}

TEST_CASE("onset-time extraction") {
    const std::vector<double> ts = {0.0, 1.0, 2.0, 3.0, 4.0};

    SECTION("linear interpolation between bracketing samples") {
        const std::vector<double> vs = {0.0, 0.0, 0.1, 0.3, 0.5};
        const auto t = onset_time(ts, vs, 0.05);
        REQUIRE(t.has_value());
        REQUIRE(*t == Approx(1.5).margin(1e-12));
    }

    SECTION("threshold met at the first sample") {
        const std::vector<double> vs = {0.5, 0.6, 0.7, 0.8, 0.9};
        REQUIRE(onset_time(ts, vs, 0.1).value() == 0.0);
    }

    SECTION("never reached") {
        const std::vector<double> vs(5, 0.0);
        REQUIRE_FALSE(onset_time(ts, vs, 0.02).has_value());
    }

    SECTION("monotone in the threshold") {
        std::vector<double> vs;
        std::vector<double> times;
        for (int i = 0; i <= 100; ++i) {
            times.push_back(0.1 * i);
            vs.push_back(0.7 / (1.0 + std::exp(-(0.1 * i - 5.0))));
        }
        double prev = -1.0;
        for (double theta : {0.01, 0.02, 0.05, 0.2, 0.5}) {
            const auto t = onset_time(times, vs, theta);
            REQUIRE(t.has_value());
            REQUIRE(*t >= prev);
            prev = *t;
        }
    }

    SECTION("bad inputs") {
        REQUIRE_THROWS_AS(onset_time(std::vector<double>{}, std::vector<double>{}, 0.02),
                          std::invalid_argument);
        const std::vector<double> vs(5, 0.0);
        REQUIRE_THROWS_AS(onset_time(ts, vs, 0.0), std::invalid_argument);
    }
}
