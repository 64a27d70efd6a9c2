// eigensolve.hpp — dense and iterative spectra, thermal averages, Fock cutoff control.
//
// beta = +infinity is the ground-state sentinel throughout: thermal averages
// then reduce to a uniform average over the numerically degenerate ground set.

#pragma once

#include <Eigen/Dense>

#include "srlab/basis.hpp"
#include "srlab/model_spec.hpp"
#include "srlab/sparse_operator.hpp"

namespace srlab {

struct SpectrumResult {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors; // columns match eigenvalues
};

struct GroundState {
    double energy{0.0};
    std::vector<cplx> vector;
    double residual{0.0};   // ‖Hv - Ev‖₂ of the reported pair
    int iterations{0};      // total Lanczos steps
};

// Full spectrum via dense self-adjoint diagonalization.  Refuses dimensions
// above max_dim; this is the oracle path, not the scaling path.
SpectrumResult dense_spectrum(const SparseOperator& h, std::int64_t max_dim = 4096);

// Lowest eigenpair by Lanczos with full reorthogonalization and restarts.
// Converged when ‖Hv - Ev‖ <= tol * ‖H‖_inf.
GroundState ground_state(const SparseOperator& h, double tol = 1e-10);

double expectation(const std::vector<cplx>& state, const SparseOperator& op);

// Tr(op e^{-βH}) / Tr(e^{-βH}) with the spectrum shifted by its minimum
// before exponentiating.  beta = inf averages over the degenerate ground set.
double thermal_expectation(const SpectrumResult& spectrum, const SparseOperator& op, double beta);

// F = -ln(Z)/β from the same shifted sums; E₀ at beta = inf.
double free_energy(const SpectrumResult& spectrum, double beta);

struct ObservableSet {
    double energy{0.0};         // E₀ (ground path) or ⟨H⟩ (thermal path)
    double photon_number{0.0};  // ⟨b†b⟩
    double photon_per_atom{0.0};
    double photon_fluct{0.0};   // ⟨(b†b)²⟩ - ⟨b†b⟩²
    double collective_sz{0.0};  // ⟨Σ σz⟩
    double parity{0.0};         // ⟨Π⟩
    double gap{0.0};            // E₁ - E₀ when the full spectrum is available
    int fock_cutoff{0};
};

// Ground-state observables through the iterative path (gap not filled).
ObservableSet ground_observables(const ModelSpec& spec, const Basis& basis, double tol = 1e-10);
// Thermal observables through the dense path.
ObservableSet thermal_observables(const ModelSpec& spec, const Basis& basis, double beta);

// Thrown when the adaptive search hits the hard cap: the photon sector is
// diverging at these parameters (deep superradiant), not a solver failure.
struct CutoffDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Smallest cutoff in the doubling sequence from `start` whose top two Fock
// levels hold less than tail_tol of the (thermal or ground) population,
// verified at the returned cutoff.  Hard cap 2^14.
int adaptive_cutoff(const ModelSpec& spec, double beta, double tail_tol,
                    int start = 8, int hard_cap = 1 << 14);

} // namespace srlab
