// effective_action.hpp — Matsubara-frequency effective action for the photon mode.
//
// Integrating out the atoms at fixed photon field gives an action whose Gaussian
// kernel vanishes exactly on the phase boundary and whose quartic response
// controls the ordered side. Everything here works at finite β; the frequency
// sums have no meaning at β = ∞.

#pragma once

#include "srlab/model_spec.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

namespace srlab {

using cplx = std::complex<double>;

// --- frequency grids -------------------------------------------------------

// shifted fermionic grid ω̃_q = (2q + 3/2)·π/β, q ∈ ℤ  (note: not symmetric about 0)
double matsubara_tilde(int q, double beta);

// bosonic grid ω_n = 2πn/β
double matsubara_boson(int n, double beta);

// --- single-atom propagators ----------------------------------------------

// 𝒢±_q = 1 / (β(iω̃_q ± Ω/2)).  sign must be +1 or -1.  freq_shift is added to
// ω̃_q; an index offset q -> q - n is the bosonic shift freq_shift = -ω_n.
// |𝒢±_q| <= 2/(βΩ) on the whole grid.
cplx atom_propagator(int q, int sign, double beta, double splitting, double freq_shift = 0.0);

// --- pair bubble Σ_q 𝒢⁺_q 𝒢⁻_{q-n} ----------------------------------------

// closed form: -tanh(βΩ/2) / (β(iω_n + Ω)); the numerator is n-independent
cplx pair_bubble_closed(int n, double beta, double splitting);

// partial sum over the paired window q ∈ [0, K), each q accumulated together
// with its partner -q-1; deterministic accumulation order
cplx pair_bubble_partial(int n, double beta, double splitting, int window);

// partial sums at K, 2K, 4K combined by two-level Richardson (tail ~ 1/K)
cplx pair_bubble_windowed(int n, double beta, double splitting, int window);

// --- Gaussian kernel -------------------------------------------------------

// scalar kernel K(n) = iω_n + ω - Σ_i (g_i²/N)·tanh(βΩ_i/2)/(iω_n + Ω_i),
// with the extra static shift -κ·Σ_i tanh(βΩ_i/2) for the nonlinear-κ family.
// Only defined for families without counter-rotating terms; K(0) = ω - ω_c.
cplx action_kernel(const ModelSpec& spec, int n, double beta);

// 2×2 kernel on the (b, b̄) pair at bosonic indices (n, -n); valid for every
// family. For number-conserving families the off-diagonal entries vanish and
// the diagonal is {K(n), conj(K(n))}.
Eigen::Matrix2cd action_kernel_block(const ModelSpec& spec, int n, double beta);

// eigenvalues of the static (n = 0) block, ascending. The smaller one crosses
// zero exactly at ω = ω_c.
std::array<double, 2> static_kernel_eigenvalues(const ModelSpec& spec, double beta);

// --- quartic response ------------------------------------------------------

// all external frequencies zero (coincident-pole case, handled exactly):
// χ₀⁽⁴⁾ = g⁴β(2tanh(βΩ/2) - βΩ sech²(βΩ/2)) / (2NΩ³) = β·(quartic Landau coefficient)
double chi4_zero(double g, double splitting, double beta, int n_atoms);

// distinct external bosonic indices (n1, n2, n3; n4 = n1 - n2 + n3):
// χ⁽⁴⁾ = g⁴β tanh(βΩ/2)(iω_{n1+n3} + 2Ω) /
//        (2N(iω_{n1}+Ω)(iω_{n2}+Ω)(iω_{n3}+Ω)(iω_{n1-n2+n3}+Ω)).
// Requires n1 != n2 and n2 != n3; otherwise the underlying frequency sum has
// coincident poles and this form does not apply, so the call refuses.
cplx chi4_general(int n1, int n2, int n3, double g, double splitting, double beta, int n_atoms);

// uniform bound √6·(gβ/N)(g/Ω)³ tanh(βΩ/2) ≥ |χ⁽⁴⁾| over all admissible indices
double chi4_bound(double g, double splitting, double beta, int n_atoms);

// --- frequency-summed response of arbitrary even order ---------------------

// χ⁽²ᵐ⁾ = (β²ᵐ/m)(g²ᵐ/Nᵐ⁻¹) Σ_q Π_{j=0}^{2m-1} 𝒢^{s_j}_{q-σ_j} with alternating
// signs s_j = (-1)^j and running shifts σ_j = n1 - n2 + ... ± n_j built from the
// 2m-1 external indices in `ns` (the last index is fixed by conservation).
//
// chi2m_partial: raw paired-window sum, q ∈ [0, window) with partners -q-1.
// chi2m_numeric: two-level Richardson over windows K, 2K, 4K (tail ~ 1/K^{2m-1}).
// Accumulation is chunked so results are bit-identical at any thread count.
cplx chi2m_partial(const std::vector<int>& ns, double g, double splitting, double beta,
                   int n_atoms, int window);
cplx chi2m_numeric(const std::vector<int>& ns, double g, double splitting, double beta,
                   int n_atoms, int window = 4096);

// β-independent certificate (2K·4ᵐ/m)(g/Ω)²ᵐ/Nᵐ⁻¹ ≥ |chi2m_partial| at window K,
// from |𝒢| ≤ 2/(βΩ) termwise
double chi_window_bound(int m, double g, double splitting, int window, int n_atoms);

} // namespace srlab
