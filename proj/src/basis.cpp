// basis.cpp

#include "srlab/basis.hpp"

namespace srlab {

Basis build_basis(int n_atoms, int fock_cutoff) {
    if (n_atoms < 1 || n_atoms > 20)
        throw std::invalid_argument("build_basis: n_atoms must be in [1, 20]");
    if (fock_cutoff < 0)
        throw std::invalid_argument("build_basis: fock_cutoff must be >= 0");
    return Basis{n_atoms, fock_cutoff};
}

} // namespace srlab
