// model_spec.hpp — spin-boson model families and their parameter sets.
//
// One boson mode coupled to N two-level atoms.  Couplings carry the 1/sqrt(N)
// collective normalization inside the Hamiltonian builders, not here: the
// values stored in ModelSpec are the bare g's as written in the family table.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace srlab {

enum class Family {
    JaynesCummings,        // rotating-wave coupling g(σ+ b + σ- b†)/√N
    Dicke,                 // full σx(b + b†) coupling
    AnisotropicRabiHubbard,// (g1 σ+ + g2 σ-)b/√N + h.c., plus U n(n-1)
    Inhomogeneous,         // per-atom g_i, Ω_i, rotating-wave
    NonlinearKappa,        // σz coefficient Ω/2 + κ b†b, rotating-wave
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct ModelSpec {
    Family family{Family::Dicke};
    int n_atoms{1};
    double omega{1.0};                   // boson frequency ω
    std::vector<double> atom_splittings; // Ω_i, length n_atoms
    std::vector<double> couplings;       // g_i, length n_atoms
    double g1{0.0};                      // rotating coupling (anisotropic family)
    double g2{0.0};                      // counter-rotating coupling (anisotropic family)
    double hubbard_u{0.0};               // U (anisotropic family)
    double kappa{0.0};                   // κ (nonlinear family)

    // η = 1 for rotating-wave families, 2 when counter-rotating terms are
    // present; for the anisotropic family this depends on whether g2 is set.
    int eta() const;

    // Uniform values for homogeneous families; throw on per-atom variation.
    double scalar_g() const;
    double scalar_splitting() const;

    // Validity check; throws std::invalid_argument naming the offending field.
    void validate() const;

    // Critical-manifold scaling g_i -> sqrt(λ) g_i, Ω_i -> λ Ω_i.
    // κ, U and ω are left untouched.
    ModelSpec with_lambda(double lambda) const;

    bool operator==(const ModelSpec&) const = default;
};

// Convenience constructors used throughout the tests and tools.
ModelSpec make_homogeneous(Family f, int n_atoms, double omega, double splitting, double g);
ModelSpec make_anisotropic(int n_atoms, double omega, double splitting,
                           double g1, double g2, double hubbard_u = 0.0);
ModelSpec make_inhomogeneous(double omega, std::vector<double> splittings,
                             std::vector<double> couplings);
ModelSpec make_nonlinear_kappa(int n_atoms, double omega, double splitting,
                               double g, double kappa);

// JSON round trip.  Parsing rejects unknown fields and reports which field
// failed; serialization emits only the fields meaningful for the family.
nlohmann::json to_json(const ModelSpec& spec);
ModelSpec model_spec_from_json(const nlohmann::json& j);

} // namespace srlab
