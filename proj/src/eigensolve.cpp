// eigensolve.cpp — dense diagonalization, Lanczos iteration, thermal sums.

#include "srlab/eigensolve.hpp"

#include "srlab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace srlab {

namespace {

Eigen::MatrixXcd to_dense(const SparseOperator& h) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(h.dim, h.dim);
    for (std::int64_t r = 0; r < h.dim; ++r)
        for (std::int64_t k = h.row_ptr[r]; k < h.row_ptr[r + 1]; ++k)
            m(r, h.col[k]) = h.val[k];
    return m;
}

cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s{0.0, 0.0};
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm2(const std::vector<cplx>& a) { return std::sqrt(std::real(dot(a, a))); }

void axpy(cplx alpha, const std::vector<cplx>& x, std::vector<cplx>& y) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

void scale(std::vector<cplx>& x, double s) {
    for (cplx& v : x) v *= s;
}

} // namespace

SpectrumResult dense_spectrum(const SparseOperator& h, std::int64_t max_dim) {
    if (h.dim > max_dim)
        throw std::invalid_argument("dense_spectrum: dimension " + std::to_string(h.dim) +
                                    " exceeds the dense limit " + std::to_string(max_dim));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_dense(h));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dense_spectrum: eigensolver failed to converge");
    return SpectrumResult{solver.eigenvalues(), solver.eigenvectors()};
}

GroundState ground_state(const SparseOperator& h, double tol) {
    const std::int64_t dim = h.dim;
    if (dim <= 32) {
        const SpectrumResult s = dense_spectrum(h);
        GroundState g;
        g.energy = s.eigenvalues(0);
        g.vector.resize(static_cast<size_t>(dim));
        for (std::int64_t i = 0; i < dim; ++i) g.vector[static_cast<size_t>(i)] = s.eigenvectors(i, 0);
        std::vector<cplx> hv(g.vector.size());
        h.apply(g.vector.data(), hv.data());
        axpy(-g.energy, g.vector, hv);
        g.residual = norm2(hv);
        return g;
    }

    const double hnorm = std::max(h.inf_norm(), 1.0);
    const int max_subspace = static_cast<int>(std::min<std::int64_t>(dim, 250));
    const int max_restarts = 60;
    const int keep = std::min(24, max_subspace - 2);

    // Thick-restart Lanczos: between cycles we retain the lowest Ritz vectors
    // together with their coupling onto the trailing Krylov vector, so clusters
    // of nearly degenerate low states keep converging across restarts.  The
    // projected matrix is diagonal on the retained block with a single border
    // column and tridiagonal beyond it; we store it densely, which is cheap at
    // this subspace size.
    std::vector<std::vector<cplx>> basis; // p processed vectors plus one trailing
    Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(max_subspace, max_subspace);
    std::vector<double> link; // components of H*basis[i] on the trailing vector

    {
        // deterministic start vector
        std::vector<cplx> v(static_cast<size_t>(dim));
        std::mt19937_64 rng(0x5eedULL);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (cplx& x : v) x = cplx{u(rng), u(rng)};
        scale(v, 1.0 / norm2(v));
        basis.push_back(std::move(v));
    }

    GroundState g;
    int total_steps = 0;
    std::vector<cplx> w(static_cast<size_t>(dim));
    for (int restart = 0; restart < max_restarts; ++restart) {
        int p = static_cast<int>(link.size()); // processed columns this cycle
        bool breakdown = false;

        while (p < max_subspace) {
            h.apply(basis[static_cast<size_t>(p)].data(), w.data());
            ++total_steps;
            const double a = std::real(dot(basis[static_cast<size_t>(p)], w));
            for (int i = 0; i < p; ++i) {
                proj(i, p) = link[static_cast<size_t>(i)];
                proj(p, i) = link[static_cast<size_t>(i)];
                if (link[static_cast<size_t>(i)] != 0.0)
                    axpy(cplx{-link[static_cast<size_t>(i)], 0.0}, basis[static_cast<size_t>(i)], w);
            }
            proj(p, p) = a;
            axpy(cplx{-a, 0.0}, basis[static_cast<size_t>(p)], w);
            // full reorthogonalization, two passes
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& q : basis) axpy(-dot(q, w), q, w);
            ++p;
            const double b = norm2(w);
            if (b < 1e-14 * hnorm) {
                breakdown = true; // invariant subspace reached
                break;
            }
            link.assign(static_cast<size_t>(p), 0.0);
            link.back() = b;
            std::vector<cplx> next = w;
            scale(next, 1.0 / b);
            basis.push_back(std::move(next));

            // Probe the projected problem occasionally; the link coefficients
            // against the lowest Ritz component bound the residual, so we can
            // stop the cycle early once the estimate is already tight.
            if (p % 40 == 0 && p < max_subspace) {
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> probe(proj.topLeftCorner(p, p));
                double est = 0.0;
                for (int i = 0; i < p; ++i) est += link[static_cast<size_t>(i)] * probe.eigenvectors()(i, 0);
                if (std::abs(est) <= 0.25 * tol * hnorm) break;
            }
        }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(proj.topLeftCorner(p, p));
        const Eigen::MatrixXd& s = solver.eigenvectors();

        // assemble the lowest Ritz vector and measure its true residual
        std::vector<cplx> x(static_cast<size_t>(dim), cplx{0.0, 0.0});
        for (int i = 0; i < p; ++i) axpy(cplx{s(i, 0), 0.0}, basis[static_cast<size_t>(i)], x);
        scale(x, 1.0 / norm2(x));
        const double theta = solver.eigenvalues()(0);
        h.apply(x.data(), w.data());
        axpy(cplx{-theta, 0.0}, x, w);
        const double res = norm2(w);

        g.energy = theta;
        g.vector = std::move(x);
        g.residual = res;
        g.iterations = total_steps;
        if (res <= tol * hnorm || breakdown) return g;

        // restart: lowest Ritz vectors, then the untouched trailing vector
        const int k = std::min(keep, p - 2);
        std::vector<std::vector<cplx>> kept;
        kept.reserve(static_cast<size_t>(k) + 1);
        for (int i = 0; i < k; ++i) {
            std::vector<cplx> y(static_cast<size_t>(dim), cplx{0.0, 0.0});
            for (int j = 0; j < p; ++j) axpy(cplx{s(j, i), 0.0}, basis[static_cast<size_t>(j)], y);
            kept.push_back(std::move(y));
        }
        kept.push_back(std::move(basis.back()));
        std::vector<double> border(static_cast<size_t>(k), 0.0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < p; ++j) border[static_cast<size_t>(i)] += link[static_cast<size_t>(j)] * s(j, i);
        basis = std::move(kept);
        link = std::move(border);
        proj.setZero();
        for (int i = 0; i < k; ++i) proj(i, i) = solver.eigenvalues()(i);
    }
    throw std::runtime_error("ground_state: Lanczos failed to reach tolerance " +
                             std::to_string(tol) + " (residual " + std::to_string(g.residual) + ")");
}

double expectation(const std::vector<cplx>& state, const SparseOperator& op) {
    std::vector<cplx> w(state.size());
    op.apply(state.data(), w.data());
    return std::real(dot(state, w));
}

namespace {

// Boltzmann weights after shifting out the ground energy; at beta = inf an
// indicator of the numerically degenerate ground set.
std::vector<double> boltzmann_weights(const Eigen::VectorXd& e, double beta) {
    const std::int64_t n = e.size();
    std::vector<double> w(static_cast<size_t>(n));
    const double e0 = e(0);
    if (std::isinf(beta)) {
        const double tol = 1e-10 * std::max(1.0, std::abs(e0));
        for (std::int64_t k = 0; k < n; ++k) w[static_cast<size_t>(k)] = (e(k) - e0 <= tol) ? 1.0 : 0.0;
    } else {
        for (std::int64_t k = 0; k < n; ++k) w[static_cast<size_t>(k)] = std::exp(-beta * (e(k) - e0));
    }
    return w;
}

} // namespace

double thermal_expectation(const SpectrumResult& spectrum, const SparseOperator& op, double beta) {
    if (beta <= 0.0 && !std::isinf(beta))
        throw std::invalid_argument("thermal_expectation: beta must be positive (inf = ground state)");
    const std::vector<double> w = boltzmann_weights(spectrum.eigenvalues, beta);
    double num = 0.0, den = 0.0;
    for (std::int64_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
        if (w[static_cast<size_t>(k)] == 0.0) continue;
        std::vector<cplx> state(static_cast<size_t>(spectrum.eigenvectors.rows()));
        for (std::int64_t i = 0; i < spectrum.eigenvectors.rows(); ++i)
            state[static_cast<size_t>(i)] = spectrum.eigenvectors(i, k);
        num += w[static_cast<size_t>(k)] * expectation(state, op);
        den += w[static_cast<size_t>(k)];
    }
    return num / den;
}

double free_energy(const SpectrumResult& spectrum, double beta) {
    const double e0 = spectrum.eigenvalues(0);
    if (std::isinf(beta)) return e0;
    double z = 0.0;
    for (std::int64_t k = 0; k < spectrum.eigenvalues.size(); ++k)
        z += std::exp(-beta * (spectrum.eigenvalues(k) - e0));
    return e0 - std::log(z) / beta;
}

namespace {

ObservableSet fill_from_state(const ModelSpec& spec, const Basis& basis,
                              const std::vector<cplx>& state, double energy) {
    ObservableSet obs;
    obs.energy = energy;
    obs.photon_number = expectation(state, boson_number(basis));
    obs.photon_per_atom = obs.photon_number / spec.n_atoms;
    obs.photon_fluct = expectation(state, boson_number_squared(basis)) -
                       obs.photon_number * obs.photon_number;
    obs.collective_sz = expectation(state, collective_sz(basis));
    obs.parity = expectation(state, parity_operator(basis));
    obs.fock_cutoff = basis.fock_cutoff;
    return obs;
}

} // namespace

ObservableSet ground_observables(const ModelSpec& spec, const Basis& basis, double tol) {
    const SparseOperator h = build_hamiltonian(spec, basis);
    const GroundState g = ground_state(h, tol);
    return fill_from_state(spec, basis, g.vector, g.energy);
}

ObservableSet thermal_observables(const ModelSpec& spec, const Basis& basis, double beta) {
    const SparseOperator h = build_hamiltonian(spec, basis);
    const SpectrumResult s = dense_spectrum(h);
    ObservableSet obs;
    obs.energy = thermal_expectation(s, h, beta);
    obs.photon_number = thermal_expectation(s, boson_number(basis), beta);
    obs.photon_per_atom = obs.photon_number / spec.n_atoms;
    obs.photon_fluct = thermal_expectation(s, boson_number_squared(basis), beta) -
                       obs.photon_number * obs.photon_number;
    obs.collective_sz = thermal_expectation(s, collective_sz(basis), beta);
    obs.parity = thermal_expectation(s, parity_operator(basis), beta);
    obs.gap = s.eigenvalues.size() > 1 ? s.eigenvalues(1) - s.eigenvalues(0) : 0.0;
    obs.fock_cutoff = basis.fock_cutoff;
    return obs;
}

namespace {

// Population of the top two Fock levels, ground or thermal.
double top_level_population(const ModelSpec& spec, const Basis& basis, double beta) {
    std::vector<Triplet> t;
    for (int n = std::max(basis.fock_cutoff - 1, 0); n <= basis.fock_cutoff; ++n)
        for (std::uint32_t s = 0; s < basis.spin_dim(); ++s)
            t.push_back({basis.index(n, s), basis.index(n, s), 1.0});
    const SparseOperator top = from_triplets(basis.dim(), std::move(t), true);
    const SparseOperator h = build_hamiltonian(spec, basis);
    if (std::isinf(beta)) {
        const GroundState g = ground_state(h);
        return expectation(g.vector, top);
    }
    return thermal_expectation(dense_spectrum(h), top, beta);
}

} // namespace

int adaptive_cutoff(const ModelSpec& spec, double beta, double tail_tol, int start, int hard_cap) {
    if (!(tail_tol > 0.0)) throw std::invalid_argument("adaptive_cutoff: tail_tol must be > 0");
    if (start < 2) throw std::invalid_argument("adaptive_cutoff: start must be >= 2");
    int n = start;
    while (true) {
        const Basis basis = build_basis(spec.n_atoms, n);
        if (top_level_population(spec, basis, beta) < tail_tol) return n;
        if (n >= hard_cap)
            throw CutoffDivergence("adaptive_cutoff: photon sector still rising at cutoff " +
                                   std::to_string(hard_cap) + "; diverging photon number");
        n = std::min(2 * n, hard_cap);
    }
}

} // namespace srlab
