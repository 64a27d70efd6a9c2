// schwinger.hpp — two-fermion-per-site representation of the spins.
//
// Each spin maps to a pair of fermion modes (α_i, β_i) with σ⁺_i = α†_i β_i and
// σz_i = n_α - n_β.  The enlarged Fock space carries unphysical empty and
// doubly occupied sites; the phase-weighted sum over total-fermion-number
// sectors cancels them exactly, giving
//
//     Z_spin = i^N  Σ_{N_F=0}^{2N} (-i)^{N_F}  Tr_{N_F} e^{-βH_F}
//
// on the same truncated boson space.  The couplings conserve total fermion
// number, so the sector traces are well defined for every family.

#pragma once

#include "srlab/basis.hpp"
#include "srlab/model_spec.hpp"
#include "srlab/sparse_operator.hpp"

#include <vector>

namespace srlab {

// Jordan-Wigner mode layout.  Interleaved puts (α_i, β_i) adjacent, so every
// coupling is string-free and the physical block reproduces the spin matrix
// entry for entry.  Grouped lists all α modes then all β modes; strings then
// cross other sites and only spectra and traces coincide.  The two layouts
// are identical at N = 1.
enum class ModeOrdering { Interleaved, Grouped };

struct FermionBasis {
    int n_atoms{1};
    int fock_cutoff{0};
    ModeOrdering ordering{ModeOrdering::Interleaved};

    int n_modes() const { return 2 * n_atoms; }
    std::int64_t fermion_dim() const { return std::int64_t{1} << n_modes(); }
    std::int64_t dim() const { return (std::int64_t{fock_cutoff} + 1) * fermion_dim(); }

    std::int64_t index(int fock, std::uint32_t bits) const {
        return fock * fermion_dim() + static_cast<std::int64_t>(bits);
    }
    int fock_of(std::int64_t idx) const { return static_cast<int>(idx >> n_modes()); }
    std::uint32_t bits_of(std::int64_t idx) const {
        return static_cast<std::uint32_t>(idx & (fermion_dim() - 1));
    }

    int alpha_mode(int atom) const {
        return ordering == ModeOrdering::Interleaved ? 2 * atom : atom;
    }
    int beta_mode(int atom) const {
        return ordering == ModeOrdering::Interleaved ? 2 * atom + 1 : n_atoms + atom;
    }
};

// Throws std::invalid_argument unless 1 <= n_atoms <= 8 and fock_cutoff >= 0.
FermionBasis build_fermion_basis(int n_atoms, int fock_cutoff,
                                 ModeOrdering ordering = ModeOrdering::Interleaved);

// c†_a c_b with the full Jordan-Wigner strings.  Returns the signed amplitude
// (0 or ±1) and writes the resulting occupation pattern to `out`.
int apply_bilinear(std::uint32_t bits, int create, int annihilate, std::uint32_t& out);

// H_F on the enlarged space: same boson terms, spins replaced per the mapping
SparseOperator build_fermion_hamiltonian(const ModelSpec& spec, const FermionBasis& basis);

// diagonal total fermion number N̂_F; commutes exactly with H_F
SparseOperator fermion_number(const FermionBasis& basis);

// eigenvalues (ascending) of the N_F = n_f block of h
std::vector<double> sector_eigenvalues(const SparseOperator& h, const FermionBasis& basis, int n_f);

// The single-occupancy block of h in spin-boson ordering (α occupied ⇔ spin
// bit set).  With interleaved modes this equals the spin Hamiltonian exactly.
SparseOperator project_single_occupancy(const SparseOperator& h, const FermionBasis& basis);

struct PartitionIdentityReport {
    int n_atoms{0};
    int fock_cutoff{0};
    double beta{0.0};
    double e_ref{0.0};                 // common shift applied before exponentiating
    std::vector<double> sector_traces; // Tr_{N_F} e^{-β(H_F - e_ref)}, N_F = 0..2N
    double z_spin{0.0};                // Tr e^{-β(H_spin - e_ref)}
    cplx z_fermion{0.0, 0.0};          // phase-weighted sector combination
    double relative_error{0.0};        // |z_fermion - z_spin| / z_spin
    double imag_residual{0.0};         // |Im z_fermion| / z_spin
};

// Builds both sides of the identity at the given cutoff and reports the
// mismatch.  The identity is exact on the truncated space, so the error is
// floating-point small at any cutoff.  corrupt_phase deliberately runs the
// sector sum with the naive alternating weight (-1)^{N_F} instead of the
// quarter phases; it exists so tests can watch the identity fail.
PartitionIdentityReport verify_partition_identity(const ModelSpec& spec, int fock_cutoff,
                                                  double beta,
                                                  ModeOrdering ordering = ModeOrdering::Interleaved,
                                                  bool corrupt_phase = false);

} // namespace srlab
