// landau.cpp — classical free-energy surface, minimizer and expansion.

#include "srlab/landau.hpp"

#include "srlab/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace srlab {

namespace {

// ln(2 cosh y) without overflow
double ln_2cosh(double y) {
    const double a = std::abs(y);
    return a + std::log1p(std::exp(-2.0 * a));
}

// dE_i²/dx at x = 0 along θ = 0 (the soft direction)
double gap_sq_slope(const ModelSpec& spec, int atom) {
    const double n = spec.n_atoms;
    switch (spec.family) {
        case Family::JaynesCummings:
        case Family::Inhomogeneous: {
            const double g = spec.couplings[static_cast<size_t>(atom)];
            return g * g / n;
        }
        case Family::Dicke: {
            const double g = 2.0 * spec.couplings[static_cast<size_t>(atom)];
            return g * g / n;
        }
        case Family::AnisotropicRabiHubbard: {
            const double g = spec.g1 + spec.g2;
            return g * g / n;
        }
        case Family::NonlinearKappa: {
            const double g = spec.couplings[static_cast<size_t>(atom)];
            return spec.atom_splittings[static_cast<size_t>(atom)] * spec.kappa + g * g / n;
        }
    }
    throw std::logic_error("gap_sq_slope: unreachable");
}

// E_i² as an analytic function of x = |b0|²; negative x is reachable from the
// finite-difference stencils and is legitimate as long as the result stays
// positive.
double gap_squared(const ModelSpec& spec, double x, double phase, int atom) {
    const double w = spec.atom_splittings[static_cast<size_t>(atom)];
    const double n = spec.n_atoms;
    switch (spec.family) {
        case Family::JaynesCummings:
        case Family::Inhomogeneous: {
            const double g = spec.couplings[static_cast<size_t>(atom)];
            return 0.25 * w * w + g * g * x / n;
        }
        case Family::Dicke:
        case Family::AnisotropicRabiHubbard: {
            const double gp = spec.family == Family::Dicke
                                  ? 2.0 * spec.couplings[static_cast<size_t>(atom)]
                                  : spec.g1 + spec.g2;
            const double gm = spec.family == Family::Dicke ? 0.0 : spec.g1 - spec.g2;
            const double c = std::cos(phase), s = std::sin(phase);
            return 0.25 * w * w + x * (gp * gp * c * c + gm * gm * s * s) / n;
        }
        case Family::NonlinearKappa: {
            const double g = spec.couplings[static_cast<size_t>(atom)];
            const double half = 0.5 * w + spec.kappa * x;
            return half * half + g * g * x / n;
        }
    }
    throw std::logic_error("gap_squared: unreachable");
}

double free_energy_x(const ModelSpec& spec, double x, double phase, double beta) {
    double f = spec.omega * x;
    if (spec.family == Family::AnisotropicRabiHubbard) f += spec.hubbard_u * x * x;
    for (int i = 0; i < spec.n_atoms; ++i) {
        const double e2 = gap_squared(spec, x, phase, i);
        if (e2 < 0.0)
            throw std::runtime_error("free_energy: gap radicand negative; |b0|² out of the analytic range");
        const double e = std::sqrt(e2);
        f -= std::isinf(beta) ? e : ln_2cosh(beta * e) / beta;
    }
    return f;
}

bool theta_dependent(Family f) {
    return f == Family::Dicke || f == Family::AnisotropicRabiHubbard;
}

} // namespace

double classical_gap(const ModelSpec& spec, const ClassicalField& field, int atom) {
    spec.validate();
    if (atom < 0 || atom >= spec.n_atoms) throw std::invalid_argument("classical_gap: atom out of range");
    if (field.amplitude < 0.0) throw std::invalid_argument("classical_gap: amplitude must be >= 0");
    return std::sqrt(gap_squared(spec, field.amplitude * field.amplitude, field.phase, atom));
}

double free_energy(const ModelSpec& spec, const ClassicalField& field, double beta) {
    spec.validate();
    if (field.amplitude < 0.0) throw std::invalid_argument("free_energy: amplitude must be >= 0");
    if (beta <= 0.0 && !std::isinf(beta))
        throw std::invalid_argument("free_energy: beta must be positive (inf = zero temperature)");
    return free_energy_x(spec, field.amplitude * field.amplitude, field.phase, beta);
}

namespace {

// E_i²(x) − E_i²(0) exactly, with no Ω²/4 cancellation
double gap_sq_delta(const ModelSpec& spec, double x, double phase, int atom) {
    const double n = spec.n_atoms;
    switch (spec.family) {
        case Family::JaynesCummings:
        case Family::Inhomogeneous: {
            const double g = spec.couplings[static_cast<size_t>(atom)];
            return g * g * x / n;
        }
        case Family::Dicke:
        case Family::AnisotropicRabiHubbard: {
            const double gp = spec.family == Family::Dicke
                                  ? 2.0 * spec.couplings[static_cast<size_t>(atom)]
                                  : spec.g1 + spec.g2;
            const double gm = spec.family == Family::Dicke ? 0.0 : spec.g1 - spec.g2;
            const double c = std::cos(phase), s = std::sin(phase);
            return x * (gp * gp * c * c + gm * gm * s * s) / n;
        }
        case Family::NonlinearKappa: {
            const double g = spec.couplings[static_cast<size_t>(atom)];
            const double w = spec.atom_splittings[static_cast<size_t>(atom)];
            return spec.kappa * x * (w + spec.kappa * x) + g * g * x / n;
        }
    }
    throw std::logic_error("gap_sq_delta: unreachable");
}

// ln 2cosh(y0 + d) − ln 2cosh(y0), cancellation-free at small |d|
double ln_2cosh_delta(double y0, double d) {
    if (std::abs(d) > 1.0) return ln_2cosh(y0 + d) - ln_2cosh(y0);
    const double sh = std::sinh(0.5 * d);
    return std::log1p(2.0 * sh * sh + std::tanh(y0) * std::sinh(d));
}

// F(x, θ) − F(0, θ) to full relative precision.  Near the boundary the
// physically meaningful part of F is many orders below |F(0)| = Σ Ω_i/2, so
// the minimizer must never subtract the two absolute values itself.
double free_energy_delta(const ModelSpec& spec, double x, double phase, double beta) {
    double df = spec.omega * x;
    if (spec.family == Family::AnisotropicRabiHubbard) df += spec.hubbard_u * x * x;
    for (int i = 0; i < spec.n_atoms; ++i) {
        const double e0 = 0.5 * spec.atom_splittings[static_cast<size_t>(i)];
        const double de2 = gap_sq_delta(spec, x, phase, i);
        const double e2 = e0 * e0 + de2;
        if (e2 < 0.0)
            throw std::runtime_error("free_energy: gap radicand negative; |b0|² out of the analytic range");
        const double de = de2 / (std::sqrt(e2) + e0);
        df -= std::isinf(beta) ? de : ln_2cosh_delta(beta * e0, beta * de) / beta;
    }
    return df;
}

// Minimize F(x, θ fixed) − F(0, θ) for x >= 0 by doubling then golden section.
// Returns {x, ΔF}; throws when F is unbounded below.
std::pair<double, double> minimize_over_x(const ModelSpec& spec, double phase, double beta) {
    double slope = 0.0;
    for (int i = 0; i < spec.n_atoms; ++i) slope = std::max(slope, gap_sq_slope(spec, i));
    const double w0 = *std::min_element(spec.atom_splittings.begin(), spec.atom_splittings.end());
    const double x_scale = slope > 0.0 ? std::max(1.0, 0.25 * w0 * w0 / slope) : 1.0;
    const double x_cap = 1e12 * x_scale;

    double s = 1e-12 * x_scale;
    while (s < x_cap && free_energy_delta(spec, s, phase, beta) >= 0.0) s *= 2.0;
    if (s >= x_cap) return {0.0, 0.0}; // no descent direction: normal phase

    double b = s;
    double fb = free_energy_delta(spec, b, phase, beta);
    while (true) {
        const double c = 2.0 * b;
        if (c > x_cap) throw std::runtime_error("minimize_free_energy: free energy unbounded below");
        const double fc = free_energy_delta(spec, c, phase, beta);
        if (fc >= fb) break;
        b = c;
        fb = fc;
    }

    double lo = 0.5 * b, hi = 2.0 * b;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = free_energy_delta(spec, x1, phase, beta);
    double f2 = free_energy_delta(spec, x2, phase, beta);
    while (hi - lo > 1e-13 * hi + 1e-300) {
        if (f1 <= f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = free_energy_delta(spec, x1, phase, beta);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = free_energy_delta(spec, x2, phase, beta);
        }
    }
    // one parabolic polish step: golden section alone is noise-limited to
    // ~sqrt(eps) relative accuracy near the quadratic minimum
    double xm = 0.5 * (lo + hi);
    const double h = std::min(1e-4 * std::max(xm, 1e-6 * x_scale), 0.9 * xm);
    if (h > 0.0) {
        const double fm = free_energy_delta(spec, xm, phase, beta);
        const double fl = free_energy_delta(spec, xm - h, phase, beta);
        const double fr = free_energy_delta(spec, xm + h, phase, beta);
        const double curv = fl - 2.0 * fm + fr;
        if (curv > 0.0) {
            const double step = 0.5 * h * (fl - fr) / curv;
            if (std::abs(step) < h) xm += step;
        }
    }
    return {xm, free_energy_delta(spec, xm, phase, beta)};
}

} // namespace

FreeEnergyMinimum minimize_free_energy(const ModelSpec& spec, double beta) {
    spec.validate();
    if (beta <= 0.0 && !std::isinf(beta))
        throw std::invalid_argument("minimize_free_energy: beta must be positive (inf = zero temperature)");

    std::vector<double> phases;
    if (theta_dependent(spec.family)) {
        for (int k = 0; k < 64; ++k) phases.push_back(2.0 * std::numbers::pi * k / 64.0);
    } else {
        phases.push_back(0.0);
    }

    const double f0 = free_energy_x(spec, 0.0, 0.0, beta); // θ-independent at x = 0
    FreeEnergyMinimum best;
    double best_df = 0.0;
    bool first = true;
    for (double phase : phases) {
        const auto [x, df] = minimize_over_x(spec, phase, beta);
        // strict improvement only, so the smallest winning θ is reported
        if (first || df < best_df - 1e-12 * (1.0 + std::abs(best_df))) {
            best.amplitude = std::sqrt(x);
            best.phase = phase;
            best_df = df;
            first = false;
        }
    }
    best.value = f0 + best_df;
    return best;
}

double f2_closed_form(const ModelSpec& spec, double beta) {
    spec.validate();
    double f2 = spec.omega;
    for (int i = 0; i < spec.n_atoms; ++i) {
        const double w = spec.atom_splittings[static_cast<size_t>(i)];
        f2 -= tanh_half(beta, w) * gap_sq_slope(spec, i) / w;
    }
    return f2;
}

namespace {

// k-th central difference at x = 0 (second-order accurate)
double central_diff(const ModelSpec& spec, double beta, int k, double h) {
    auto f = [&](double x) { return free_energy_x(spec, x, 0.0, beta); };
    switch (k) {
        case 1: return (f(h) - f(-h)) / (2.0 * h);
        case 2: return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
        case 3: return (f(2.0 * h) - 2.0 * f(h) + 2.0 * f(-h) - f(-2.0 * h)) / (2.0 * h * h * h);
        case 4: return (f(2.0 * h) - 4.0 * f(h) + 6.0 * f(0.0) - 4.0 * f(-h) + f(-2.0 * h)) / (h * h * h * h);
    }
    throw std::logic_error("central_diff: order out of range");
}

double richardson_derivative(const ModelSpec& spec, double beta, int k, double h0) {
    constexpr int levels = 4;
    double table[levels][levels];
    for (int l = 0; l < levels; ++l) {
        table[l][0] = central_diff(spec, beta, k, h0 / (1 << l));
        for (int j = 1; j <= l; ++j) {
            const double p = std::pow(4.0, j);
            table[l][j] = (p * table[l][j - 1] - table[l - 1][j - 1]) / (p - 1.0);
        }
    }
    return table[levels - 1][levels - 1];
}

} // namespace

LandauCoefficients landau_coefficients(const ModelSpec& spec, double beta) {
    spec.validate();
    if (beta <= 0.0 && !std::isinf(beta))
        throw std::invalid_argument("landau_coefficients: beta must be positive (inf = zero temperature)");

    // step bound: keep every stencil point inside the positive-radicand range
    double x_lim = std::numeric_limits<double>::infinity();
    for (int i = 0; i < spec.n_atoms; ++i) {
        const double slope = std::abs(gap_sq_slope(spec, i));
        if (slope > 0.0) {
            const double w = spec.atom_splittings[static_cast<size_t>(i)];
            x_lim = std::min(x_lim, 0.25 * w * w / slope);
        }
    }
    double h = std::isinf(x_lim) ? 1.0 : 0.1 * x_lim;
    const double h_floor = 1e-7 * std::max(h, 1e-30);
    auto stencil_ok = [&](double step) {
        for (double x : {-2.0 * step, 2.0 * step})
            for (int i = 0; i < spec.n_atoms; ++i)
                if (gap_squared(spec, x, 0.0, i) <= 0.0) return false;
        return true;
    };
    while (!stencil_ok(h)) {
        h *= 0.5;
        if (h < h_floor)
            throw std::runtime_error("landau_coefficients: step size underflow while keeping the gap real");
    }

    LandauCoefficients out;
    out.f0 = free_energy_x(spec, 0.0, 0.0, beta);
    out.f2 = richardson_derivative(spec, beta, 1, h);
    out.f4 = richardson_derivative(spec, beta, 2, h) / 2.0;
    out.f6 = richardson_derivative(spec, beta, 3, h) / 6.0;
    out.f8 = richardson_derivative(spec, beta, 4, h) / 24.0;
    out.f2_closed = f2_closed_form(spec, beta);
    return out;
}

ExponentFit fit_exponent(const ModelSpec& spec, double beta,
                         double window_lo, double window_hi, int points) {
    spec.validate();
    if (!(window_lo > 0.0) || !(window_hi > window_lo))
        throw std::invalid_argument("fit_exponent: need 0 < window_lo < window_hi");
    if (points < 3) throw std::invalid_argument("fit_exponent: need at least 3 points");

    // interaction(s) = s² A + B under uniform coupling scaling g -> s g
    const double b_part = spec.family == Family::NonlinearKappa
                              ? spec.kappa * spec.n_atoms * tanh_half(beta, spec.scalar_splitting())
                              : 0.0;
    const double a_part = critical_omega(spec, beta) - b_part;
    if (!(a_part > 0.0))
        throw std::invalid_argument("fit_exponent: couplings are all zero; no transition to scan");
    if (spec.omega <= b_part)
        throw std::invalid_argument("fit_exponent: superradiant at every coupling for this ω (κ shift too large)");
    const double s_c = std::sqrt((spec.omega - b_part) / a_part);

    std::vector<double> lx, ly;
    for (int k = 0; k < points; ++k) {
        const double t = points == 1 ? 0.0 : static_cast<double>(k) / (points - 1);
        const double r = std::exp(std::log(window_lo) + t * (std::log(window_hi) - std::log(window_lo)));
        ModelSpec scaled = spec;
        const double s = s_c * (1.0 + r);
        for (double& g : scaled.couplings) g *= s;
        scaled.g1 *= s;
        scaled.g2 *= s;
        const FreeEnergyMinimum m = minimize_free_energy(scaled, beta);
        if (!(m.amplitude > 0.0))
            throw std::runtime_error("fit_exponent: no superradiant minimum inside the fit window");
        lx.push_back(std::log(r));
        ly.push_back(std::log(m.amplitude));
    }

    const int n = points;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int k = 0; k < n; ++k) {
        sx += lx[static_cast<size_t>(k)];
        sy += ly[static_cast<size_t>(k)];
        sxx += lx[static_cast<size_t>(k)] * lx[static_cast<size_t>(k)];
        sxy += lx[static_cast<size_t>(k)] * ly[static_cast<size_t>(k)];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    double rss = 0.0;
    for (int k = 0; k < n; ++k) {
        const double r = ly[static_cast<size_t>(k)] - slope * lx[static_cast<size_t>(k)] - intercept;
        rss += r * r;
    }

    ExponentFit fit;
    fit.alpha = slope;
    fit.alpha_amp2 = 2.0 * slope;
    fit.residual = std::sqrt(rss / n);
    fit.window_lo = window_lo;
    fit.window_hi = window_hi;
    fit.points = points;
    return fit;
}

} // namespace srlab
