// effective_action.cpp — frequency sums, Gaussian kernel and quartic response.

#include "srlab/effective_action.hpp"

#include "srlab/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace srlab {

namespace {

void require_finite_beta(double beta, const char* where) {
    if (!(beta > 0.0) || std::isinf(beta))
        throw std::invalid_argument(std::string(where) + ": beta must be finite and positive");
}

void require_splitting(double splitting, const char* where) {
    if (!(splitting > 0.0))
        throw std::invalid_argument(std::string(where) + ": splitting must be positive");
}

// sech²(y) without overflow
double sech_sq(double y) {
    const double e = std::exp(-2.0 * std::abs(y));
    const double s = 2.0 * std::sqrt(e) / (1.0 + e);
    return s * s;
}

// deterministic paired window sum: q runs over [0, K), each q accumulated with
// its partner -q-1; fixed-size chunks keep the reduction order independent of
// the thread count.
template <class Term>
cplx paired_window_sum(int window, Term&& term) {
    constexpr int chunk = 1024;
    const int n_chunks = (window + chunk - 1) / chunk;
    std::vector<cplx> partial(static_cast<size_t>(n_chunks));
#pragma omp parallel for schedule(static)
    for (int c = 0; c < n_chunks; ++c) {
        cplx acc(0.0, 0.0);
        const int hi = std::min(window, (c + 1) * chunk);
        for (int q = c * chunk; q < hi; ++q) acc += term(q) + term(-q - 1);
        partial[static_cast<size_t>(c)] = acc;
    }
    cplx total(0.0, 0.0);
    for (const cplx& p : partial) total += p;
    return total;
}

// per-atom rotating and counter-rotating weights as seen by the photon
struct AtomCoupling {
    double rot = 0.0;
    double counter = 0.0;
    double splitting = 0.0;
};

std::vector<AtomCoupling> atom_couplings(const ModelSpec& spec) {
    std::vector<AtomCoupling> out;
    out.reserve(static_cast<size_t>(spec.n_atoms));
    for (int i = 0; i < spec.n_atoms; ++i) {
        const double w = spec.atom_splittings[static_cast<size_t>(i)];
        switch (spec.family) {
            case Family::JaynesCummings:
            case Family::Inhomogeneous:
            case Family::NonlinearKappa:
                out.push_back({spec.couplings[static_cast<size_t>(i)], 0.0, w});
                break;
            case Family::Dicke:
                out.push_back({spec.couplings[static_cast<size_t>(i)],
                               spec.couplings[static_cast<size_t>(i)], w});
                break;
            case Family::AnisotropicRabiHubbard:
                out.push_back({spec.g1, spec.g2, w});
                break;
        }
    }
    return out;
}

} // namespace

double matsubara_tilde(int q, double beta) {
    require_finite_beta(beta, "matsubara_tilde");
    return (2.0 * q + 1.5) * std::numbers::pi / beta;
}

double matsubara_boson(int n, double beta) {
    require_finite_beta(beta, "matsubara_boson");
    return 2.0 * std::numbers::pi * n / beta;
}

cplx atom_propagator(int q, int sign, double beta, double splitting, double freq_shift) {
    require_finite_beta(beta, "atom_propagator");
    require_splitting(splitting, "atom_propagator");
    if (sign != 1 && sign != -1) throw std::invalid_argument("atom_propagator: sign must be +1 or -1");
    const double freq = matsubara_tilde(q, beta) + freq_shift;
    return 1.0 / (beta * cplx(sign * 0.5 * splitting, freq));
}

cplx pair_bubble_closed(int n, double beta, double splitting) {
    require_finite_beta(beta, "pair_bubble_closed");
    require_splitting(splitting, "pair_bubble_closed");
    const double t = std::tanh(0.5 * beta * splitting);
    return -t / (beta * cplx(splitting, matsubara_boson(n, beta)));
}

cplx pair_bubble_partial(int n, double beta, double splitting, int window) {
    require_finite_beta(beta, "pair_bubble_partial");
    require_splitting(splitting, "pair_bubble_partial");
    if (window < 1) throw std::invalid_argument("pair_bubble_partial: window must be >= 1");
    const double shift = -matsubara_boson(n, beta);
    return paired_window_sum(window, [&](int q) {
        return atom_propagator(q, +1, beta, splitting) *
               atom_propagator(q, -1, beta, splitting, shift);
    });
}

namespace {

// two-level Richardson over windows K, 2K, 4K for a tail starting at 1/K^p;
// cancels the 1/K^p and 1/K^{p+1} orders
template <class Partial>
cplx richardson_windows(int window, int p, Partial&& partial) {
    const cplx s1 = partial(window);
    const cplx s2 = partial(2 * window);
    const cplx s4 = partial(4 * window);
    const double a = std::pow(2.0, p);
    const cplx r1 = (a * s2 - s1) / (a - 1.0);
    const cplx r2 = (a * s4 - s2) / (a - 1.0);
    const double b = 2.0 * a;
    return (b * r2 - r1) / (b - 1.0);
}

} // namespace

cplx pair_bubble_windowed(int n, double beta, double splitting, int window) {
    return richardson_windows(window, 1, [&](int k) { // tail ~ 1/K
        return pair_bubble_partial(n, beta, splitting, k);
    });
}

cplx action_kernel(const ModelSpec& spec, int n, double beta) {
    spec.validate();
    require_finite_beta(beta, "action_kernel");
    if (spec.family == Family::Dicke || spec.family == Family::AnisotropicRabiHubbard)
        throw std::invalid_argument("action_kernel: counter-rotating family, use action_kernel_block");

    cplx k(spec.omega, matsubara_boson(n, beta));
    for (const AtomCoupling& a : atom_couplings(spec)) {
        k += (beta / spec.n_atoms) * a.rot * a.rot * pair_bubble_closed(n, beta, a.splitting);
        if (spec.family == Family::NonlinearKappa)
            k -= spec.kappa * std::tanh(0.5 * beta * a.splitting);
    }
    return k;
}

Eigen::Matrix2cd action_kernel_block(const ModelSpec& spec, int n, double beta) {
    spec.validate();
    require_finite_beta(beta, "action_kernel_block");

    const double wn = matsubara_boson(n, beta);
    cplx m11(spec.omega, wn), m22(spec.omega, -wn), m12(0.0, 0.0);
    for (const AtomCoupling& a : atom_couplings(spec)) {
        const double t = std::tanh(0.5 * beta * a.splitting);
        const cplx plus = 1.0 / cplx(a.splitting, wn);   // 1/(iω_n + Ω)
        const cplx minus = 1.0 / cplx(a.splitting, -wn); // 1/(-iω_n + Ω)
        const double inv_n = 1.0 / spec.n_atoms;
        m11 -= t * inv_n * (a.rot * a.rot * plus + a.counter * a.counter * minus);
        m22 -= t * inv_n * (a.rot * a.rot * minus + a.counter * a.counter * plus);
        m12 -= t * inv_n * a.rot * a.counter * (plus + minus);
        if (spec.family == Family::NonlinearKappa) {
            m11 -= spec.kappa * t;
            m22 -= spec.kappa * t;
        }
    }
    Eigen::Matrix2cd m;
    m << m11, m12, m12, m22;
    return m;
}

std::array<double, 2> static_kernel_eigenvalues(const ModelSpec& spec, double beta) {
    const Eigen::Matrix2cd m = action_kernel_block(spec, 0, beta);
    const double diag = m(0, 0).real();
    const double off = std::abs(m(0, 1).real());
    return {diag - off, diag + off};
}

double chi4_zero(double g, double splitting, double beta, int n_atoms) {
    require_finite_beta(beta, "chi4_zero");
    require_splitting(splitting, "chi4_zero");
    if (n_atoms < 1) throw std::invalid_argument("chi4_zero: n_atoms must be >= 1");
    const double y = 0.5 * beta * splitting;
    const double g2 = g * g;
    return g2 * g2 * beta * (2.0 * std::tanh(y) - beta * splitting * sech_sq(y)) /
           (2.0 * n_atoms * splitting * splitting * splitting);
}

cplx chi4_general(int n1, int n2, int n3, double g, double splitting, double beta, int n_atoms) {
    require_finite_beta(beta, "chi4_general");
    require_splitting(splitting, "chi4_general");
    if (n_atoms < 1) throw std::invalid_argument("chi4_general: n_atoms must be >= 1");
    if (n1 == n2 || n2 == n3)
        throw std::invalid_argument(
            "chi4_general: coincident frequencies (n1 == n2 or n2 == n3) put double poles "
            "in the sum; this closed form does not apply there");

    const double t = std::tanh(0.5 * beta * splitting);
    const double g2 = g * g;
    auto pole = [&](int n) { return cplx(splitting, matsubara_boson(n, beta)); };
    const cplx num(2.0 * splitting, matsubara_boson(n1 + n3, beta));
    const cplx den = pole(n1) * pole(n2) * pole(n3) * pole(n1 - n2 + n3);
    return g2 * g2 * beta * t * num / (2.0 * n_atoms * den);
}

double chi4_bound(double g, double splitting, double beta, int n_atoms) {
    require_finite_beta(beta, "chi4_bound");
    require_splitting(splitting, "chi4_bound");
    if (n_atoms < 1) throw std::invalid_argument("chi4_bound: n_atoms must be >= 1");
    const double g2 = g * g;
    return std::sqrt(6.0) * g2 * g2 * beta * std::tanh(0.5 * beta * splitting) /
           (n_atoms * splitting * splitting * splitting);
}

cplx chi2m_partial(const std::vector<int>& ns, double g, double splitting, double beta,
                   int n_atoms, int window) {
    require_finite_beta(beta, "chi2m_partial");
    require_splitting(splitting, "chi2m_partial");
    if (n_atoms < 1) throw std::invalid_argument("chi2m_partial: n_atoms must be >= 1");
    if (window < 1) throw std::invalid_argument("chi2m_partial: window must be >= 1");
    if (ns.empty() || ns.size() % 2 == 0)
        throw std::invalid_argument("chi2m_partial: need an odd number of external indices (2m-1)");

    const int m = static_cast<int>(ns.size() + 1) / 2;
    // running shifts σ_j and signs s_j of the 2m propagators in the chain
    std::vector<double> freq_shift(static_cast<size_t>(2 * m));
    std::vector<int> sign(static_cast<size_t>(2 * m));
    int sigma = 0;
    for (int j = 0; j < 2 * m; ++j) {
        if (j > 0) sigma += (j % 2 == 1 ? ns[static_cast<size_t>(j - 1)] : -ns[static_cast<size_t>(j - 1)]);
        freq_shift[static_cast<size_t>(j)] = -matsubara_boson(sigma, beta);
        sign[static_cast<size_t>(j)] = (j % 2 == 0) ? +1 : -1;
    }

    const cplx sum = paired_window_sum(window, [&](int q) {
        cplx prod(1.0, 0.0);
        for (int j = 0; j < 2 * m; ++j)
            prod *= atom_propagator(q, sign[static_cast<size_t>(j)], beta, splitting,
                                    freq_shift[static_cast<size_t>(j)]);
        return prod;
    });
    const double norm = std::pow(beta, 2 * m) / m * std::pow(g, 2 * m) /
                        std::pow(static_cast<double>(n_atoms), m - 1);
    return norm * sum;
}

cplx chi2m_numeric(const std::vector<int>& ns, double g, double splitting, double beta,
                   int n_atoms, int window) {
    const int m = static_cast<int>(ns.size() + 1) / 2;
    return richardson_windows(window, 2 * m - 1, [&](int k) { // tail ~ 1/K^(2m-1)
        return chi2m_partial(ns, g, splitting, beta, n_atoms, k);
    });
}

double chi_window_bound(int m, double g, double splitting, int window, int n_atoms) {
    require_splitting(splitting, "chi_window_bound");
    if (m < 1) throw std::invalid_argument("chi_window_bound: m must be >= 1");
    if (window < 1) throw std::invalid_argument("chi_window_bound: window must be >= 1");
    if (n_atoms < 1) throw std::invalid_argument("chi_window_bound: n_atoms must be >= 1");
    const double ratio = std::abs(g) / splitting;
    return 2.0 * window * std::pow(4.0, m) / m * std::pow(ratio, 2 * m) /
           std::pow(static_cast<double>(n_atoms), m - 1);
}

} // namespace srlab
