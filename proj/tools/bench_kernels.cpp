// bench_kernels.cpp — serial versus OpenMP kernel timings.
//
// Times the two data-parallel kernels (sparse matvec, Matsubara window sums)
// against their single-thread runs and confirms the results stay bit-identical,
// which is the contract the sweep determinism relies on.

#include "srlab/effective_action.hpp"
#include "srlab/operators.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <vector>

using namespace srlab;

namespace {

bool bits_equal(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

void bench_matvec(int n_atoms, int fock_cutoff, int reps) {
    const ModelSpec spec = make_homogeneous(Family::Dicke, n_atoms, 1.0, 1.0, 0.4);
    const Basis basis = build_basis(n_atoms, fock_cutoff);
    const SparseOperator h = build_hamiltonian(spec, basis);

    std::vector<cplx> x(static_cast<size_t>(h.dim));
    for (std::int64_t i = 0; i < h.dim; ++i)
        x[static_cast<size_t>(i)] = cplx(std::sin(0.1 * i), std::cos(0.2 * i));
    std::vector<cplx> y_serial(x.size()), y_par(x.size());

    double t0 = omp_get_wtime();
    for (int r = 0; r < reps; ++r) h.apply_serial(x.data(), y_serial.data());
    const double t_serial = (omp_get_wtime() - t0) / reps * 1e3;

    t0 = omp_get_wtime();
    for (int r = 0; r < reps; ++r) h.apply(x.data(), y_par.data());
    const double t_par = (omp_get_wtime() - t0) / reps * 1e3;

    std::printf("%-22s dim %8lld nnz %9lld  serial %8.3f ms  parallel %8.3f ms  x%.2f  %s\n",
                "matvec", static_cast<long long>(h.dim), static_cast<long long>(h.nnz()), t_serial,
                t_par, t_serial / t_par, bits_equal(y_serial, y_par) ? "bit-identical" : "MISMATCH");
}

void bench_window_sum(int window, int reps) {
    const std::vector<int> ns = {1, 2, 3};
    const int max_threads = omp_get_max_threads();

    omp_set_num_threads(1);
    cplx serial_value{};
    double t0 = omp_get_wtime();
    for (int r = 0; r < reps; ++r) serial_value = chi2m_partial(ns, 0.4, 1.0, 5.0, 1, window);
    const double t_serial = (omp_get_wtime() - t0) / reps * 1e3;

    omp_set_num_threads(max_threads);
    cplx par_value{};
    t0 = omp_get_wtime();
    for (int r = 0; r < reps; ++r) par_value = chi2m_partial(ns, 0.4, 1.0, 5.0, 1, window);
    const double t_par = (omp_get_wtime() - t0) / reps * 1e3;

    const bool same = std::memcmp(&serial_value, &par_value, sizeof(cplx)) == 0;
    std::printf("%-22s window %6d %22s serial %8.3f ms  parallel %8.3f ms  x%.2f  %s\n",
                "matsubara window sum", window, "", t_serial, t_par, t_serial / t_par,
                same ? "bit-identical" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("threads available: %d\n", omp_get_max_threads());
    bench_matvec(2, 1023, 20);
    bench_matvec(8, 255, 10);
    bench_window_sum(1 << 16, 20);
    bench_window_sum(1 << 20, 3);
    return 0;
}
