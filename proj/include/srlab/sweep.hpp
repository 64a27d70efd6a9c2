// sweep.hpp — parameter sweeps over exact-diagonalization observables.
//
// Points are computed independently (OpenMP across grid points) and written
// into slots addressed by grid index, so the rendered CSV is byte-identical
// at any thread count.  A point that fails reports a status row instead of
// aborting the sweep.

#pragma once

#include "srlab/config.hpp"
#include "srlab/eigensolve.hpp"

#include <string>
#include <vector>

namespace srlab {

struct SweepPoint {
    int index{0};
    double value{0.0};
    std::string status{"ok"};
    bool ok{false};
    ObservableSet obs;
    double omega_c{0.0}; // boundary prediction for this point's model and beta
    double ms{0.0};      // wall time; goes to the manifest, never to the CSV
};

struct SweepResult {
    std::vector<SweepPoint> points;
    double wall_ms{0.0};
    int n_failed{0};
};

// The model and inverse temperature a grid value resolves to.
ModelSpec model_at(const RunConfig& cfg, double value);
double beta_at(const RunConfig& cfg, double value);

SweepResult run_sweep(const RunConfig& cfg);

// Fixed-format CSV ("%.17g" cells); failed points keep their row with empty
// data cells and the error text in the status column.
std::string render_csv(const SweepResult& result, const RunConfig& cfg);

} // namespace srlab
