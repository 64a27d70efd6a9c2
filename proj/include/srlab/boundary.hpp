// boundary.hpp — closed-form superradiant phase boundaries.

#pragma once

#include <optional>

#include "srlab/model_spec.hpp"

namespace srlab {

// tanh(β x / 2) with the beta = inf sentinel mapped to 1 (x > 0).
double tanh_half(double beta, double x);

// Critical boson frequency at the spec's couplings:
//   homogeneous       (η g)² tanh(βΩ/2) / Ω
//   inhomogeneous     (1/N) Σ g_i² tanh(βΩ_i/2) / Ω_i
//   anisotropic       (g1 + g2)² tanh(βΩ/2) / Ω
//   nonlinear κ       (g² + κNΩ) tanh(βΩ/2) / Ω
// Superradiance sets in for ω below the returned value.
double critical_omega(const ModelSpec& spec, double beta);

// Inversion at fixed ω for families with a single coupling scale.  nullopt
// means the κ shift alone already exceeds ω: superradiant at every g.
// Throws for the inhomogeneous and anisotropic families.
std::optional<double> critical_g(const ModelSpec& spec, double beta, double omega);

// Dimensionless distance from the classical limit in which the boundary
// formula becomes exact: ω/(NΩ) for uniform splittings, (1/N²) Σ g_i²/Ω_i²
// otherwise.  Falls as 1/λ along the critical manifold.
double classicality(const ModelSpec& spec);

struct BoundaryResult {
    double omega_c{0.0};
    std::optional<double> g_c;      // at the spec's ω, when invertible
    bool always_superradiant{false};
    int eta{1};
    double classicality{0.0};
};

BoundaryResult boundary_report(const ModelSpec& spec, double beta);

} // namespace srlab
