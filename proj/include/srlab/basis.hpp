// basis.hpp — truncated product basis for one boson mode and N spins.
//
// Basis index = fock_index * 2^N + spin_bits, with spin bit i set meaning
// σz_i = +1.  fock_cutoff is the highest retained boson occupation, so the
// boson sector has fock_cutoff + 1 levels.

#pragma once

#include <cstdint>
#include <stdexcept>

namespace srlab {

struct Basis {
    int n_atoms{1};
    int fock_cutoff{0};

    std::int64_t spin_dim() const { return std::int64_t{1} << n_atoms; }
    std::int64_t dim() const { return (std::int64_t{fock_cutoff} + 1) * spin_dim(); }

    std::int64_t index(int fock, std::uint32_t spin_bits) const {
        return fock * spin_dim() + static_cast<std::int64_t>(spin_bits);
    }
    int fock_of(std::int64_t idx) const { return static_cast<int>(idx >> n_atoms); }
    std::uint32_t spins_of(std::int64_t idx) const {
        return static_cast<std::uint32_t>(idx & (spin_dim() - 1));
    }
};

// Throws std::invalid_argument unless 1 <= n_atoms <= 20 and fock_cutoff >= 0.
Basis build_basis(int n_atoms, int fock_cutoff);

} // namespace srlab
