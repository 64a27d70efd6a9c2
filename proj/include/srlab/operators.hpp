// operators.hpp — Hamiltonians and symmetry operators for the model families.

#pragma once

#include "srlab/basis.hpp"
#include "srlab/model_spec.hpp"
#include "srlab/sparse_operator.hpp"

namespace srlab {

// Family Hamiltonian on the truncated basis.  Couplings enter with the
// collective 1/sqrt(N) normalization; atom splittings enter as (Ω_i/2) σz_i.
// The Hubbard term uses n(n-1) literally.
SparseOperator build_hamiltonian(const ModelSpec& spec, const Basis& basis);

// Π = exp(iπ(b†b + Σ_i (σz_i + 1)/2)); diagonal entries (-1)^(n + #up).
SparseOperator parity_operator(const Basis& basis);

// N̂ = b†b + Σ_i (σz_i + 1)/2; diagonal entries n + #up.  Commutes with the
// truncated Hamiltonian exactly for the rotating-wave families.
SparseOperator excitation_operator(const Basis& basis);

SparseOperator boson_number(const Basis& basis);           // b†b
SparseOperator boson_number_squared(const Basis& basis);   // (b†b)²
SparseOperator collective_sz(const Basis& basis);          // Σ_i σz_i

} // namespace srlab
