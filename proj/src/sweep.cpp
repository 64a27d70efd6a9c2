// sweep.cpp — grid evaluation and deterministic CSV rendering.

#include "srlab/sweep.hpp"

#include "srlab/boundary.hpp"
#include "srlab/operators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace srlab {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return s;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

SweepPoint compute_point(const RunConfig& cfg, int index) {
    SweepPoint p;
    p.index = index;
    p.value = cfg.sweep.values[static_cast<size_t>(index)];

    const auto& fail = cfg.testing.fail_at_indices;
    if (std::find(fail.begin(), fail.end(), index) != fail.end()) {
        p.status = "injected_failure";
        return p;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        const ModelSpec model = model_at(cfg, p.value);
        model.validate();
        const double beta = beta_at(cfg, p.value);

        const int cutoff = cfg.sweep.fock_cutoff >= 0
                               ? cfg.sweep.fock_cutoff
                               : adaptive_cutoff(model, beta, cfg.sweep.tail_tol);
        const Basis basis = build_basis(model.n_atoms, cutoff);
        p.obs = std::isinf(beta) ? ground_observables(model, basis)
                                 : thermal_observables(model, basis, beta);
        p.omega_c = critical_omega(model, beta);
        p.ok = true;
    } catch (const std::exception& e) {
        p.status = std::string("error: ") + e.what();
        p.ok = false;
    }
    p.ms = elapsed_ms(t0);
    return p;
}

} // namespace

ModelSpec model_at(const RunConfig& cfg, double value) {
    ModelSpec m = cfg.model;
    const std::string& par = cfg.sweep.parameter;
    if (par == "omega") {
        m.omega = value;
    } else if (par == "coupling_scale") {
        for (double& g : m.couplings) g *= value;
        m.g1 *= value;
        m.g2 *= value;
    } else if (par == "lambda") {
        m = m.with_lambda(value);
    } else if (par == "temperature") {
        // model untouched; the grid value feeds beta_at
    } else {
        throw std::invalid_argument("sweep: unknown parameter \"" + par + "\"");
    }
    return m;
}

double beta_at(const RunConfig& cfg, double value) {
    if (cfg.sweep.parameter != "temperature") return cfg.beta;
    if (value < 0.0) throw std::invalid_argument("sweep: temperature must be >= 0");
    return value == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / value;
}

SweepResult run_sweep(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = static_cast<int>(cfg.sweep.values.size());

    SweepResult result;
    result.points.resize(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) result.points[static_cast<size_t>(i)] = compute_point(cfg, i);

    for (const SweepPoint& p : result.points)
        if (!p.ok) ++result.n_failed;
    result.wall_ms = elapsed_ms(t0);
    return result;
}

std::string render_csv(const SweepResult& result, const RunConfig& cfg) {
    std::ostringstream out;
    out << "index,parameter,value,status,energy,photon_number,photon_per_atom,"
           "photon_fluct,collective_sz,parity,gap,omega_c,fock_cutoff\n";
    for (const SweepPoint& p : result.points) {
        out << p.index << ',' << cfg.sweep.parameter << ',' << fmt17(p.value) << ','
            << sanitize(p.status);
        if (p.ok) {
            out << ',' << fmt17(p.obs.energy) << ',' << fmt17(p.obs.photon_number) << ','
                << fmt17(p.obs.photon_per_atom) << ',' << fmt17(p.obs.photon_fluct) << ','
                << fmt17(p.obs.collective_sz) << ',' << fmt17(p.obs.parity) << ','
                << fmt17(p.obs.gap) << ',' << fmt17(p.omega_c) << ',' << p.obs.fock_cutoff;
        } else {
            out << ",,,,,,,,,";
        }
        out << '\n';
    }
    return out.str();
}

} // namespace srlab
