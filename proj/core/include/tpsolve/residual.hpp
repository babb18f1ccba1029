#ifndef TPSOLVE_RESIDUAL_HPP
#define TPSOLVE_RESIDUAL_HPP

#include <vector>

namespace tps {

/// Per-degree magnitudes of an ODE residual (the candidate solution
/// substituted back into its equation), restricted to the degrees the
/// truncation still certifies: each derivative taken while forming the
/// residual invalidates one top degree.
///
/// `scale` is max(1, largest |coefficient| among the residual's summands),
/// so `passed()` is a relative-to-cancellation test that cannot pass
/// vacuously on near-zero data.
struct ResidualReport {
    std::vector<double> residual_coeffs; ///< |r_k| for k = 0..verified_degree
    int verified_degree = 0;
    double max_residual = 0.0; ///< max over degrees 0..verified_degree
    double tolerance_used = 0.0;
    double scale = 1.0;

    bool passed() const { return max_residual <= tolerance_used * scale; }
};

} // namespace tps

#endif
