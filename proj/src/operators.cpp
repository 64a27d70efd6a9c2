// operators.cpp — sparse assembly of the family Hamiltonians.

#include "srlab/operators.hpp"

#include <bit>
#include <cmath>

namespace srlab {

namespace {

int popcount(std::uint32_t s) { return std::popcount(s); }

// σ+_i b + σ-_i b† with weight w, accumulated into the triplet list.
// σ+ takes bit i from 0 (down) to 1 (up) while absorbing one boson.
void add_rotating_coupling(const Basis& basis, int atom, double w, std::vector<Triplet>& out) {
    const std::uint32_t bit = 1u << atom;
    for (int n = 1; n <= basis.fock_cutoff; ++n) {
        const double amp = w * std::sqrt(static_cast<double>(n));
        for (std::uint32_t s = 0; s < basis.spin_dim(); ++s) {
            if (s & bit) continue;
            const std::int64_t from = basis.index(n, s);
            const std::int64_t to = basis.index(n - 1, s | bit);
            out.push_back({to, from, amp});
            out.push_back({from, to, amp});
        }
    }
}

// σ+_i b† + σ-_i b with weight w (counter-rotating part).
void add_counter_rotating_coupling(const Basis& basis, int atom, double w, std::vector<Triplet>& out) {
    const std::uint32_t bit = 1u << atom;
    for (int n = 0; n < basis.fock_cutoff; ++n) {
        const double amp = w * std::sqrt(static_cast<double>(n + 1));
        for (std::uint32_t s = 0; s < basis.spin_dim(); ++s) {
            if (s & bit) continue;
            const std::int64_t from = basis.index(n, s);
            const std::int64_t to = basis.index(n + 1, s | bit);
            out.push_back({to, from, amp});
            out.push_back({from, to, amp});
        }
    }
}

} // namespace

SparseOperator build_hamiltonian(const ModelSpec& spec, const Basis& basis) {
    spec.validate();
    if (basis.n_atoms != spec.n_atoms)
        throw std::invalid_argument("build_hamiltonian: basis and spec disagree on n_atoms");

    const double root_n = std::sqrt(static_cast<double>(spec.n_atoms));
    std::vector<Triplet> t;

    // diagonal part
    for (int n = 0; n <= basis.fock_cutoff; ++n) {
        for (std::uint32_t s = 0; s < basis.spin_dim(); ++s) {
            double diag = spec.omega * n;
            for (int i = 0; i < spec.n_atoms; ++i) {
                const double sz = (s >> i) & 1u ? 1.0 : -1.0;
                diag += 0.5 * spec.atom_splittings[static_cast<size_t>(i)] * sz;
                if (spec.family == Family::NonlinearKappa) diag += spec.kappa * n * sz;
            }
            if (spec.family == Family::AnisotropicRabiHubbard)
                diag += spec.hubbard_u * n * (n - 1.0);
            if (diag != 0.0) t.push_back({basis.index(n, s), basis.index(n, s), diag});
        }
    }

    // coupling part
    for (int i = 0; i < spec.n_atoms; ++i) {
        switch (spec.family) {
            case Family::JaynesCummings:
            case Family::Inhomogeneous:
            case Family::NonlinearKappa:
                add_rotating_coupling(basis, i, spec.couplings[static_cast<size_t>(i)] / root_n, t);
                break;
            case Family::Dicke: {
                const double w = spec.couplings[static_cast<size_t>(i)] / root_n;
                add_rotating_coupling(basis, i, w, t);
                add_counter_rotating_coupling(basis, i, w, t);
                break;
            }
            case Family::AnisotropicRabiHubbard:
                add_rotating_coupling(basis, i, spec.g1 / root_n, t);
                add_counter_rotating_coupling(basis, i, spec.g2 / root_n, t);
                break;
        }
    }

    return from_triplets(basis.dim(), std::move(t), true);
}

SparseOperator parity_operator(const Basis& basis) {
    std::vector<Triplet> t;
    for (int n = 0; n <= basis.fock_cutoff; ++n)
        for (std::uint32_t s = 0; s < basis.spin_dim(); ++s) {
            const double sign = (n + popcount(s)) % 2 == 0 ? 1.0 : -1.0;
            t.push_back({basis.index(n, s), basis.index(n, s), sign});
        }
    return from_triplets(basis.dim(), std::move(t), true);
}

SparseOperator excitation_operator(const Basis& basis) {
    std::vector<Triplet> t;
    for (int n = 0; n <= basis.fock_cutoff; ++n)
        for (std::uint32_t s = 0; s < basis.spin_dim(); ++s)
            if (n + popcount(s) != 0)
                t.push_back({basis.index(n, s), basis.index(n, s),
                             static_cast<double>(n + popcount(s))});
    return from_triplets(basis.dim(), std::move(t), true);
}

SparseOperator boson_number(const Basis& basis) {
    std::vector<Triplet> t;
    for (int n = 1; n <= basis.fock_cutoff; ++n)
        for (std::uint32_t s = 0; s < basis.spin_dim(); ++s)
            t.push_back({basis.index(n, s), basis.index(n, s), static_cast<double>(n)});
    return from_triplets(basis.dim(), std::move(t), true);
}

SparseOperator boson_number_squared(const Basis& basis) {
    std::vector<Triplet> t;
    for (int n = 1; n <= basis.fock_cutoff; ++n)
        for (std::uint32_t s = 0; s < basis.spin_dim(); ++s)
            t.push_back({basis.index(n, s), basis.index(n, s), static_cast<double>(n) * n});
    return from_triplets(basis.dim(), std::move(t), true);
}

SparseOperator collective_sz(const Basis& basis) {
    std::vector<Triplet> t;
    for (int n = 0; n <= basis.fock_cutoff; ++n)
        for (std::uint32_t s = 0; s < basis.spin_dim(); ++s) {
            const double v = 2.0 * popcount(s) - basis.n_atoms;
            if (v != 0.0) t.push_back({basis.index(n, s), basis.index(n, s), v});
        }
    return from_triplets(basis.dim(), std::move(t), true);
}

} // namespace srlab
