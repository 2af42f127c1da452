#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sqcav;
using namespace sqcav::reservoir;
using Catch::Approx;

TEST_CASE("lambda and mu from the OPO parameters") {
    const auto [l, m] = lambda_mu({OpoKind::degenerate, 1.0, 0.5 * 0.17, 0.0});
    REQUIRE(l == Approx(0.585).margin(1e-15));
    REQUIRE(m == Approx(0.415).margin(1e-15));

    const auto [l0, m0] = lambda_mu({OpoKind::degenerate, 1.0, 0.0, 0.0});
    REQUIRE(l0 == 0.5);
    REQUIRE(m0 == 0.5);

    // ratio lambda = sqrt(2) mu: lambda = sqrt(2)/(sqrt(2)+1) kappa_c
    const auto [lh, mh] = lambda_mu(half_squeezed_opo(1.0));
    const double s2 = std::sqrt(2.0);
    REQUIRE(lh == Approx(s2 / (s2 + 1.0)).margin(1e-15));
    REQUIRE(mh == Approx(1.0 / (s2 + 1.0)).margin(1e-15));
    REQUIRE(lh == Approx(s2 * mh).margin(1e-15));

    REQUIRE_THROWS_AS(lambda_mu({OpoKind::degenerate, 1.0, 0.5, 0.0}), std::domain_error);
    REQUIRE_THROWS_AS(lambda_mu({OpoKind::degenerate, 1.0, 0.7, 0.0}), std::domain_error);
}

TEST_CASE("degenerate spectrum line-center values") {
    const auto [l, m] = lambda_mu(half_squeezed_opo(1.0));
    const SpectrumPoint c = degenerate_spectrum(0.0, l, m);
    REQUIRE(c.N == Approx(0.125).margin(1e-14));
    REQUIRE(c.M == Approx(0.375).margin(1e-14));

    // no pumping: vacuum output everywhere
    for (double w : {0.0, 0.3, 2.0}) {
        const SpectrumPoint v = degenerate_spectrum(w, 0.5, 0.5);
        REQUIRE(v.N == 0.0);
        REQUIRE(v.M == 0.0);
    }

    const SpectrumPoint far = degenerate_spectrum(1e6, l, m);
    REQUIRE(std::abs(far.N) < 1e-11);
    REQUIRE(std::abs(far.M) < 1e-11);
}

TEST_CASE("spectra are even and ordered M >= N >= 0 below threshold") {
    const auto [l, m] = lambda_mu(half_squeezed_opo(2.0));
    for (int i = 0; i < 200; ++i) {
        const double w = -10.0 * l + 20.0 * l * i / 199.0;
        const SpectrumPoint d = degenerate_spectrum(w, l, m);
        REQUIRE(d.M >= d.N);
        REQUIRE(d.N >= 0.0);
        const SpectrumPoint dm = degenerate_spectrum(-w, l, m);
        REQUIRE(d.N == Approx(dm.N).margin(1e-16));
        REQUIRE(d.M == Approx(dm.M).margin(1e-16));

        const SpectrumPoint n = nondegenerate_spectrum(w, l, m, 3.0 * l);
        const SpectrumPoint nm = nondegenerate_spectrum(-w, l, m, 3.0 * l);
        REQUIRE(n.M >= n.N);
        REQUIRE(n.N == Approx(nm.N).margin(1e-16));
        REQUIRE(n.M == Approx(nm.M).margin(1e-16));
    }
}

TEST_CASE("two-photon correlation identity of the degenerate output") {
    const auto [l, m] = lambda_mu(half_squeezed_opo(1.7));
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double w = -10.0 * l + 20.0 * l * i / 999.0;
        const SpectrumPoint s = degenerate_spectrum(w, l, m);
        const SpectrumPoint sm = degenerate_spectrum(-w, l, m);
        const double lhs = s.M * s.M;
        const double rhs = s.N * (sm.N + 1.0);
        worst = std::max(worst, std::abs(lhs - rhs) / lhs);
    }
    REQUIRE(worst < 1e-12);
}

TEST_CASE("pairing identity of the nondegenerate output, branch by branch") {
    const auto [l, m] = lambda_mu(half_squeezed_opo(1.0));
    const double alpha = 8.0 * l;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double w = -10.0 * l + 20.0 * l * i / 999.0;
        // a signal mode at w pairs with the idler mode at -w, and vice versa
        const SpectrumPoint s = nondegenerate_branch(w, l, m, alpha, Branch::signal);
        const SpectrumPoint i_at_minus = nondegenerate_branch(-w, l, m, alpha, Branch::idler);
        worst = std::max(worst,
                         std::abs(s.M * s.M - s.N * (i_at_minus.N + 1.0)) / (s.M * s.M));
        const SpectrumPoint id = nondegenerate_branch(w, l, m, alpha, Branch::idler);
        const SpectrumPoint s_at_minus = nondegenerate_branch(-w, l, m, alpha, Branch::signal);
        worst = std::max(worst,
                         std::abs(id.M * id.M - id.N * (s_at_minus.N + 1.0)) / (id.M * id.M));
    }
    REQUIRE(worst < 1e-12);
}

TEST_CASE("summed nondegenerate spectrum double-counts overlapping branches") {
    // Where the two displaced pairings overlap, the summed (N, M) functions
    // exceed the two-photon bound by exactly twice the cross product
    // M_s M_i - N_s N_i; the excess vanishes only when a branch is absent.
    const auto [l, m] = lambda_mu(half_squeezed_opo(1.0));
    for (double alpha : {0.0, l, 5.0 * l}) {
        for (double w : {0.0, 0.4 * l, 2.0 * l}) {
            const SpectrumPoint t = nondegenerate_spectrum(w, l, m, alpha);
            const SpectrumPoint s = nondegenerate_branch(w, l, m, alpha, Branch::signal);
            const SpectrumPoint i = nondegenerate_branch(w, l, m, alpha, Branch::idler);
            const double excess = t.M * t.M - t.N * (t.N + 1.0);
            REQUIRE(excess > 0.0);
            REQUIRE(excess == Approx(2.0 * (s.M * i.M - s.N * i.N)).epsilon(1e-10));
        }
    }
}

TEST_CASE("nondegenerate spectrum reduces to twice the degenerate one at alpha = 0") {
    const auto [l, m] = lambda_mu(half_squeezed_opo(1.3));
    for (double w : {0.0, 0.2, 1.0, 4.0}) {
        const SpectrumPoint d = degenerate_spectrum(w, l, m);
        const SpectrumPoint n = nondegenerate_spectrum(w, l, m, 0.0);
        REQUIRE(n.N == Approx(2.0 * d.N).margin(1e-15));
        REQUIRE(n.M == Approx(2.0 * d.M).margin(1e-15));
    }
}

TEST_CASE("far-separated peaks recover the degenerate line-center values") {
    const auto [l, m] = lambda_mu(half_squeezed_opo(1.0));
    const double alpha = 100.0 * l;
    const SpectrumPoint peak = nondegenerate_spectrum(alpha, l, m, alpha);
    REQUIRE(peak.N == Approx(0.125).margin(1e-6));
    REQUIRE(peak.M == Approx(0.375).margin(1e-4));
    REQUIRE(nondegenerate_spectrum(1e9, l, m, alpha).N < 1e-12);
}

TEST_CASE("maximal two-photon correlation") {
    REQUIRE(max_correlation(0.125) == Approx(0.375).margin(1e-15));
    REQUIRE(max_correlation(0.0) == 0.0);
    REQUIRE(max_correlation(1.0) == Approx(std::sqrt(2.0)).margin(1e-12));
    REQUIRE_THROWS_AS(max_correlation(-0.1), std::domain_error);
}

TEST_CASE("physicality of the (N, M) pair") {
    REQUIRE(validate_physical({0.125, 0.375, std::nullopt}).ok);

    const PhysicalityReport bad = validate_physical({0.125, 0.5, std::nullopt});
    REQUIRE_FALSE(bad.ok);
    REQUIRE(bad.excess == Approx(0.125).margin(1e-12));

    REQUIRE(validate_physical({0.125, 0.125, std::nullopt}).ok);

    // per-cavity N values: checked against the weaker bound
    SqueezingParams sq{0.5, 0.375, std::make_pair(0.5, 0.125)};
    REQUIRE(validate_physical(sq).ok);
    sq.per_cavity_N = std::make_pair(0.5, 0.01);
    REQUIRE_FALSE(validate_physical(sq).ok);
}

TEST_CASE("broadband check compares bandwidth against cavity linewidths") {
    REQUIRE(broadband_ok(50.0, 40.0, 1.0, 2.0));
    REQUIRE_FALSE(broadband_ok(50.0, 15.0, 1.0, 2.0));
}
