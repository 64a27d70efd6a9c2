// test_effective_action.cpp — Matsubara propagators, the Gaussian kernel and
// the quartic response, checked against closed forms, tail-rate measurements,
// and bounds.

#include <doctest.h>

#include "oracles.hpp"
#include "srlab/boundary.hpp"
#include "srlab/effective_action.hpp"
#include "srlab/landau.hpp"

using namespace srlab;

namespace {

double crel(cplx a, cplx b, double floor = 1e-300) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

} // namespace

TEST_SUITE("effective_action") {

TEST_CASE("frequency grids") {
    const double beta = 2.5;
    CHECK(matsubara_boson(3, beta) == doctest::Approx(6.0 * M_PI / beta).epsilon(1e-15));
    CHECK(matsubara_boson(-3, beta) == doctest::Approx(-6.0 * M_PI / beta).epsilon(1e-15));
    CHECK(matsubara_tilde(0, beta) == doctest::Approx(1.5 * M_PI / beta).epsilon(1e-15));
    CHECK(matsubara_tilde(-1, beta) == doctest::Approx(-0.5 * M_PI / beta).epsilon(1e-15));
    // the shifted grid is not symmetric about zero
    CHECK(matsubara_tilde(-1, beta) != -matsubara_tilde(0, beta));
}

TEST_CASE("propagator magnitude is bounded by 2/(beta Omega)") {
    oracle::ModelSampler sampler(0xB0B0ull);
    for (int k = 0; k < 200; ++k) {
        const double beta = sampler.uniform(0.05, 50.0);
        const double splitting = sampler.uniform(0.1, 10.0);
        const int q = sampler.uniform_int(-2000, 2000);
        const int n = sampler.uniform_int(-40, 40);
        const int sign = sampler.uniform_int(0, 1) == 0 ? -1 : 1;
        const cplx g = atom_propagator(q, sign, beta, splitting, -matsubara_boson(n, beta));
        CHECK(std::abs(g) <= 2.0 / (beta * splitting) * (1.0 + 1e-12));
    }
    CHECK_THROWS_AS(atom_propagator(0, 2, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("pair bubble: windowed sum against the closed form") {
    oracle::ModelSampler sampler(0xBBB1ull);
    for (int k = 0; k < 12; ++k) {
        const double beta = sampler.uniform(0.2, 12.0);
        const double splitting = sampler.uniform(0.3, 5.0);
        const int n = sampler.uniform_int(-7, 7);
        CAPTURE(beta);
        CAPTURE(splitting);
        CAPTURE(n);
        CHECK(crel(pair_bubble_windowed(n, beta, splitting, 4096),
                   pair_bubble_closed(n, beta, splitting)) <= 1e-9);
    }
}

TEST_CASE("pair bubble numerator is independent of the external index") {
    const double beta = 3.0, splitting = 1.4;
    const cplx expect{-std::tanh(0.5 * beta * splitting) / beta, 0.0};
    for (int n : {-5, -1, 0, 1, 2, 9}) {
        const cplx omega_n{0.0, matsubara_boson(n, beta)};
        CHECK(crel((omega_n + splitting) * pair_bubble_closed(n, beta, splitting), expect) <=
              1e-15);
        CHECK(crel((omega_n + splitting) * pair_bubble_windowed(n, beta, splitting, 4096),
                   expect) <= 1e-8);
    }
}

TEST_CASE("partial-sum tails shrink at the predicted rates") {
    const double beta = 1.7, splitting = 1.1;
    SUBCASE("pair bubble tail ~ 1/K") {
        const cplx exact = pair_bubble_closed(2, beta, splitting);
        const double e1 = std::abs(pair_bubble_partial(2, beta, splitting, 1 << 10) - exact);
        const double e2 = std::abs(pair_bubble_partial(2, beta, splitting, 1 << 11) - exact);
        CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.15));
    }
    SUBCASE("quartic tail ~ 1/K^3") {
        const double g = 0.8;
        const cplx exact = chi4_general(1, 2, 3, g, splitting, beta, 2);
        const double e1 =
            std::abs(chi2m_partial({1, 2, 3}, g, splitting, beta, 2, 1 << 10) - exact);
        const double e2 =
            std::abs(chi2m_partial({1, 2, 3}, g, splitting, beta, 2, 1 << 11) - exact);
        CHECK(e1 / e2 == doctest::Approx(8.0).epsilon(0.25));
    }
}

TEST_CASE("kernel: static value is omega minus omega_c for rotating families") {
    oracle::ModelSampler sampler(0x4EA4ull);
    for (Family f : {Family::JaynesCummings, Family::Inhomogeneous, Family::NonlinearKappa}) {
        for (int k = 0; k < 10; ++k) {
            const ModelSpec spec = sampler.draw(f);
            const double beta = sampler.uniform(0.3, 15.0);
            const cplx k0 = action_kernel(spec, 0, beta);
            CAPTURE(family_name(f));
            CHECK(std::abs(k0.imag()) <= 1e-14 * std::max(1.0, std::abs(k0)));
            CHECK(std::abs(k0.real() - (spec.omega - critical_omega(spec, beta))) <=
                  1e-12 * std::max(1.0, spec.omega + critical_omega(spec, beta)));
        }
    }
    CHECK_THROWS_AS(action_kernel(make_homogeneous(Family::Dicke, 1, 1.0, 1.0, 0.1), 0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(action_kernel(make_anisotropic(1, 1.0, 1.0, 0.3, 0.2), 0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("kernel equals the free part plus the summed pair bubble") {
    const ModelSpec spec = make_homogeneous(Family::JaynesCummings, 3, 0.9, 1.6, 0.5);
    const double beta = 2.2;
    for (int n : {-3, 0, 1, 4}) {
        const cplx free_part{spec.omega, matsubara_boson(n, beta)};
        // the atom sum cancels the collective 1/N: sum_i g^2/N = g^2
        const cplx bubble = (0.5 * 0.5) * beta * pair_bubble_closed(n, beta, 1.6);
        CHECK(crel(action_kernel(spec, n, beta), free_part + bubble) <= 1e-14);
    }
}

TEST_CASE("kernel block: diagonal conjugate pair, rotating off-diagonal zero") {
    const double beta = 3.1;
    const ModelSpec jc = make_homogeneous(Family::JaynesCummings, 2, 1.1, 1.9, 0.4);
    for (int n : {-2, 0, 3}) {
        const Eigen::Matrix2cd m = action_kernel_block(jc, n, beta);
        CHECK(std::abs(m(0, 1)) == 0.0);
        CHECK(std::abs(m(1, 0)) == 0.0);
        CHECK(crel(m(0, 0), action_kernel(jc, n, beta)) <= 1e-15);
        CHECK(crel(m(1, 1), std::conj(m(0, 0))) <= 1e-15);
    }
    const ModelSpec dicke = make_homogeneous(Family::Dicke, 2, 1.1, 1.9, 0.4);
    const Eigen::Matrix2cd m = action_kernel_block(dicke, 1, beta);
    CHECK(std::abs(m(0, 1)) > 1e-3);
    CHECK(crel(m(0, 1), m(1, 0)) <= 1e-15);
}

TEST_CASE("static kernel eigenvalues split by the coupling combinations") {
    const double beta = 4.0;
    const double t = std::tanh(0.5 * beta * 1.5) / 1.5;
    const ModelSpec aniso = make_anisotropic(2, 1.0, 1.5, 0.5, 0.2);
    const auto eigs = static_kernel_eigenvalues(aniso, beta);
    CHECK(eigs[0] == doctest::Approx(1.0 - 0.49 * t).epsilon(1e-13));
    CHECK(eigs[1] == doctest::Approx(1.0 - 0.09 * t).epsilon(1e-13));

    // flipping the sign of g2 swaps which combination is soft
    ModelSpec flipped = aniso;
    flipped.g2 = -0.2;
    const auto eigs_f = static_kernel_eigenvalues(flipped, beta);
    CHECK(eigs_f[0] == doctest::Approx(1.0 - 0.49 * t).epsilon(1e-13));
    CHECK(eigs_f[1] == doctest::Approx(1.0 - 0.09 * t).epsilon(1e-13));
}

TEST_CASE("soft static eigenvalue vanishes on the boundary for every family") {
    oracle::ModelSampler sampler(0x50F7ull);
    for (Family f : oracle::all_families()) {
        ModelSpec spec = sampler.draw(f);
        const double beta = sampler.uniform(0.5, 10.0);
        spec.omega = critical_omega(spec, beta);
        const auto eigs = static_kernel_eigenvalues(spec, beta);
        const double soft = std::min(std::abs(eigs[0]), std::abs(eigs[1]));
        CAPTURE(family_name(f));
        CHECK(soft <= 1e-12 * std::max(1.0, spec.omega));
    }
}

TEST_CASE("quartic response at zero external frequency") {
    const double g = 0.6, splitting = 1.3, beta = 2.7;
    const int n = 2;
    SUBCASE("matches the windowed frequency sum") {
        const double closed = chi4_zero(g, splitting, beta, n);
        const cplx numeric = chi2m_numeric({0, 0, 0}, g, splitting, beta, n);
        CHECK(std::abs(numeric.imag()) <= 1e-10 * std::abs(closed));
        CHECK(oracle::rel_diff(numeric.real(), closed) <= 1e-8);
    }
    SUBCASE("equals beta times the quartic landau coefficient") {
        const ModelSpec spec = make_homogeneous(Family::JaynesCummings, n, 1.0, splitting, g);
        const LandauCoefficients lc = landau_coefficients(spec, beta);
        CHECK(oracle::rel_diff(chi4_zero(g, splitting, beta, n), beta * lc.f4) <= 1e-7);
    }
    SUBCASE("small-beta expansion is g^4 beta^4 / (12 N)") {
        const double b = 1e-3;
        CHECK(oracle::rel_diff(chi4_zero(g, splitting, b, n),
                               std::pow(g, 4) * std::pow(b, 4) / (12.0 * n)) <= 1e-4);
    }
    SUBCASE("positive on a parameter grid") {
        oracle::ModelSampler sampler(0x9999ull);
        for (int k = 0; k < 100; ++k)
            CHECK(chi4_zero(sampler.uniform(0.05, 2.0), sampler.uniform(0.1, 6.0),
                            sampler.uniform(0.05, 30.0), sampler.uniform_int(1, 6)) > 0.0);
    }
}

TEST_CASE("general quartic response") {
    const double g = 0.7, splitting = 1.2, beta = 1.9;
    const int n = 3;
    SUBCASE("agrees with the windowed sum at distinct indices") {
        oracle::ModelSampler sampler(0x44CCull);
        for (int k = 0; k < 8; ++k) {
            int n1 = sampler.uniform_int(-4, 4);
            int n2 = sampler.uniform_int(-4, 4);
            int n3 = sampler.uniform_int(-4, 4);
            if (n2 == n1) n2 = n1 + 1;
            if (n3 == n2) n3 = n2 + 2;
            CAPTURE(n1);
            CAPTURE(n2);
            CAPTURE(n3);
            const cplx closed = chi4_general(n1, n2, n3, g, splitting, beta, n);
            const cplx numeric = chi2m_numeric({n1, n2, n3}, g, splitting, beta, n);
            CHECK(crel(numeric, closed) <= 1e-8);
        }
    }
    SUBCASE("symmetric under swapping the odd external legs") {
        CHECK(crel(chi4_general(1, 3, 2, g, splitting, beta, n),
                   chi4_general(2, 3, 1, g, splitting, beta, n)) <= 1e-15);
    }
    SUBCASE("conjugate under negating all indices") {
        CHECK(crel(chi4_general(-1, -3, -2, g, splitting, beta, n),
                   std::conj(chi4_general(1, 3, 2, g, splitting, beta, n))) <= 1e-15);
    }
    SUBCASE("refuses coincident poles") {
        CHECK_THROWS_AS(chi4_general(2, 2, 5, g, splitting, beta, n), std::invalid_argument);
        CHECK_THROWS_AS(chi4_general(1, 4, 4, g, splitting, beta, n), std::invalid_argument);
        // the windowed sum has no such restriction
        CHECK_NOTHROW(chi2m_numeric({2, 2, 5}, g, splitting, beta, n, 1024));
    }
}

TEST_CASE("sqrt-6 bound holds and is approached at soft frequencies") {
    oracle::ModelSampler sampler(0x66BBull);
    double max_ratio = 0.0;
    for (int k = 0; k < 400; ++k) {
        const double g = sampler.uniform(0.05, 1.5);
        const double splitting = sampler.uniform(0.2, 4.0);
        const double beta = sampler.uniform(0.1, 20.0);
        const int n = sampler.uniform_int(1, 5);
        int n1 = sampler.uniform_int(-6, 6), n2 = sampler.uniform_int(-6, 6),
            n3 = sampler.uniform_int(-6, 6);
        if (n2 == n1) n2 = n1 + 1;
        if (n3 == n2) n3 = n2 + 2;
        const double ratio = std::abs(chi4_general(n1, n2, n3, g, splitting, beta, n)) /
                             chi4_bound(g, splitting, beta, n);
        CHECK(ratio <= 1.0);
        max_ratio = std::max(max_ratio, ratio);
    }
    // all frequencies soft: |chi4| -> g^4 beta t/(N Omega^3), ratio -> 1/sqrt(6)
    const double soft = std::abs(chi4_general(0, 1, 0, 0.5, 1.0, 1e3, 1)) /
                        chi4_bound(0.5, 1.0, 1e3, 1);
    CHECK(soft == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-3));
    CHECK(max_ratio <= 1.0 / std::sqrt(6.0) + 1e-12);
}

TEST_CASE("window certificate bounds the raw partial sums") {
    oracle::ModelSampler sampler(0xCE47ull);
    for (int m : {1, 2, 3}) {
        for (int k = 0; k < 10; ++k) {
            const double g = sampler.uniform(0.05, 1.2);
            const double splitting = sampler.uniform(0.3, 4.0);
            const double beta = sampler.uniform(0.2, 10.0);
            const int n = sampler.uniform_int(1, 4);
            const int window = 1 << sampler.uniform_int(5, 9);
            std::vector<int> ns(static_cast<size_t>(2 * m - 1));
            for (int& v : ns) v = sampler.uniform_int(-3, 3);
            const cplx partial = chi2m_partial(ns, g, splitting, beta, n, window);
            const double bound = chi_window_bound(m, g, splitting, window, n);
            CAPTURE(m);
            // beta varies freely above while the certificate takes no beta at
            // all: it must hold uniformly in temperature
            CHECK(std::abs(partial) <= bound);
        }
    }
}

TEST_CASE("second-order response reduces to the pair bubble") {
    const double g = 0.65, splitting = 1.8, beta = 3.3;
    const int n_atoms = 2;
    for (int n : {-2, 0, 3}) {
        const cplx chi2 = chi2m_partial({n}, g, splitting, beta, n_atoms, 2048);
        const cplx bubble = pair_bubble_partial(n, beta, splitting, 2048);
        CHECK(crel(chi2, beta * beta * g * g * bubble) <= 1e-13);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(pair_bubble_closed(0, std::numeric_limits<double>::infinity(), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(pair_bubble_closed(0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(pair_bubble_closed(0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(chi2m_partial({1, 2}, 0.5, 1.0, 1.0, 1, 64), std::invalid_argument);
    CHECK_THROWS_AS(chi2m_partial({1}, 0.5, 1.0, 1.0, 1, 0), std::invalid_argument);
}

} // TEST_SUITE
