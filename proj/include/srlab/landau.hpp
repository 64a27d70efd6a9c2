// landau.hpp — classical-field free energy and its expansion at the origin.
//
// The boson is replaced by a static complex field b0 = a e^{iθ}; atoms are
// summed as independent two-level systems with a field-dependent gap.  All
// expansion coefficients are taken in x = |b0|² along the θ = 0 ray.

#pragma once

#include "srlab/model_spec.hpp"

namespace srlab {

struct ClassicalField {
    double amplitude{0.0}; // |b0| >= 0
    double phase{0.0};     // θ
};

// Half-splitting of atom `atom` dressed by the field:
//   rotating families     sqrt(Ω_i²/4 + g_i² a²/N)
//   counter-rotating      sqrt(Ω²/4 + a²((g1+g2)²cos²θ + (g1-g2)²sin²θ)/N)
//   nonlinear κ           sqrt((Ω/2 + κa²)² + g² a²/N)
double classical_gap(const ModelSpec& spec, const ClassicalField& field, int atom);

// F = ω a² + U a⁴ - Σ_i ln(2 cosh(β E_i))/β, with the β = inf sentinel
// dropping the log-cosh to -Σ E_i.  The quartic Hubbard term is the classical
// limit of the normal-ordered n(n-1).
double free_energy(const ModelSpec& spec, const ClassicalField& field, double beta);

struct FreeEnergyMinimum {
    double amplitude{0.0};
    double phase{0.0};
    double value{0.0};
};

// Global minimum over the field.  Phase is scanned on a 64-point grid for the
// counter-rotating families (the gap is θ-dependent) and fixed to 0 otherwise;
// the amplitude is bracketed by doubling and refined by golden section.
// Throws if the free energy is unbounded below.
FreeEnergyMinimum minimize_free_energy(const ModelSpec& spec, double beta);

struct LandauCoefficients {
    double f0{0.0};        // F(0)
    double f2{0.0};        // dF/dx at 0, finite differences
    double f4{0.0};        // (1/2!) d²F/dx²
    double f6{0.0};        // (1/3!) d³F/dx³
    double f8{0.0};        // (1/4!) d⁴F/dx⁴
    double f2_closed{0.0}; // ω - Σ_i tanh(βΩ_i/2) (dE_i²/dx)|₀ / Ω_i
};

// Central differences in x with Richardson extrapolation over halved steps.
// The step is kept inside the region where every gap radicand stays positive;
// underflowing that region is an error.
LandauCoefficients landau_coefficients(const ModelSpec& spec, double beta);

// Closed-form quadratic coefficient alone (also exposed through the struct).
double f2_closed_form(const ModelSpec& spec, double beta);

struct ExponentFit {
    double alpha{0.0};      // slope of ln|b0| vs ln(g - g_c)
    double alpha_amp2{0.0}; // same fit for |b0|²; equals 2α
    double residual{0.0};   // rms of fit residuals
    double window_lo{0.0};  // (g - g_c)/g_c at the window ends
    double window_hi{0.0};
    int points{0};
};

// Order-parameter exponent on the superradiant side: all couplings are scaled
// by s = s_c (1 + r) with r log-spaced in [window_lo, window_hi], the free
// energy is minimized at each point, and ln a is regressed on ln r.  The
// window excludes the critical point itself.
ExponentFit fit_exponent(const ModelSpec& spec, double beta,
                         double window_lo = 1e-4, double window_hi = 1e-2, int points = 25);

} // namespace srlab
