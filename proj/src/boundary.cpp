// boundary.cpp

#include "srlab/boundary.hpp"

#include <cmath>

namespace srlab {

double tanh_half(double beta, double x) {
    if (beta < 0.0) throw std::invalid_argument("tanh_half: beta must be positive or inf");
    if (std::isinf(beta)) return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    return std::tanh(0.5 * beta * x);
}

double critical_omega(const ModelSpec& spec, double beta) {
    spec.validate();
    switch (spec.family) {
        case Family::JaynesCummings:
        case Family::Dicke: {
            const double g = spec.scalar_g(), w = spec.scalar_splitting();
            const double eg = spec.eta() * g;
            return eg * eg * tanh_half(beta, w) / w;
        }
        case Family::Inhomogeneous: {
            double acc = 0.0;
            for (int i = 0; i < spec.n_atoms; ++i) {
                const double g = spec.couplings[static_cast<size_t>(i)];
                const double w = spec.atom_splittings[static_cast<size_t>(i)];
                acc += g * g * tanh_half(beta, w) / w;
            }
            return acc / spec.n_atoms;
        }
        case Family::AnisotropicRabiHubbard: {
            const double w = spec.scalar_splitting();
            const double gsum = spec.g1 + spec.g2;
            return gsum * gsum * tanh_half(beta, w) / w;
        }
        case Family::NonlinearKappa: {
            const double g = spec.scalar_g(), w = spec.scalar_splitting();
            return (g * g + spec.kappa * spec.n_atoms * w) * tanh_half(beta, w) / w;
        }
    }
    throw std::logic_error("critical_omega: unreachable");
}

std::optional<double> critical_g(const ModelSpec& spec, double beta, double omega) {
    spec.validate();
    if (!(omega > 0.0)) throw std::invalid_argument("critical_g: omega must be > 0");
    const double w = spec.scalar_splitting();
    const double coth = 1.0 / tanh_half(beta, w);
    switch (spec.family) {
        case Family::JaynesCummings:
            return std::sqrt(omega * w * coth);
        case Family::Dicke:
            return 0.5 * std::sqrt(omega * w * coth);
        case Family::NonlinearKappa: {
            const double radicand = omega * w * coth - spec.kappa * spec.n_atoms * w;
            if (radicand <= 0.0) return std::nullopt; // superradiant at every coupling
            return std::sqrt(radicand);
        }
        default:
            throw std::invalid_argument(
                "critical_g: no single coupling scale for family " + family_name(spec.family));
    }
}

double classicality(const ModelSpec& spec) {
    spec.validate();
    if (spec.family == Family::Inhomogeneous) {
        double acc = 0.0;
        for (int i = 0; i < spec.n_atoms; ++i) {
            const double r = spec.couplings[static_cast<size_t>(i)] /
                             spec.atom_splittings[static_cast<size_t>(i)];
            acc += r * r;
        }
        return acc / (static_cast<double>(spec.n_atoms) * spec.n_atoms);
    }
    return spec.omega / (spec.n_atoms * spec.scalar_splitting());
}

BoundaryResult boundary_report(const ModelSpec& spec, double beta) {
    BoundaryResult out;
    out.omega_c = critical_omega(spec, beta);
    out.eta = spec.eta();
    out.classicality = classicality(spec);
    switch (spec.family) {
        case Family::JaynesCummings:
        case Family::Dicke:
        case Family::NonlinearKappa: {
            const auto gc = critical_g(spec, beta, spec.omega);
            out.g_c = gc;
            out.always_superradiant = !gc.has_value();
            break;
        }
        default:
            break;
    }
    return out;
}

} // namespace srlab
