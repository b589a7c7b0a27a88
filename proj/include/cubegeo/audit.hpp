#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubegeo/symmetry.hpp"

namespace cubegeo {

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    std::string suite;
    std::vector<AuditCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Frozen strict-interior sample per region (all nine regions).
const std::vector<std::pair<std::string, DeltaPoint>>& region_samples();

/// Criterion 1: exact equality of the source-image distance with the
/// windowed oracle on random/grid pairs, saturation at max_len+1.
AuditReport audit_eq11(unsigned grid_den = 8, std::size_t n_goal_pairs = 200,
                       std::size_t n_other_facet_pairs = 50, std::uint64_t seed = 20240901);

/// Criterion 2: 3-cube orbits converge to (b,b,0).
AuditReport audit_3cube_limits(unsigned grid_den = 16, double tol = 1e-9,
                               std::size_t max_steps = 100);

/// Criterion 3: farthest map vs candidate table and vs the grid oracle;
/// tie sets on region boundaries.
AuditReport audit_theorem7(unsigned grid_den = 16, unsigned oracle_den = 64);

/// Criterion 4: planar and spatial wall lemmas (exact Delaunay emptiness).
AuditReport audit_walls(unsigned grid_den = 32);

/// Criterion 5: corner criterion f_max = z0 and dominated-site gaps.
AuditReport audit_corners(unsigned grid_den = 16, unsigned rect_den = 16);

/// Criterion 6: 4-cube orbit limits (diagonal, c-monotone, c' > 0, facet
/// preservation, Delta11 invariance).
AuditReport audit_dynamics(unsigned grid_den = 16, double diag_tol = 1e-9,
                           double c_floor = 1e-6);

/// Criterion 7: descent inequalities on random samples in each window.
AuditReport audit_descent(std::size_t per_window = 100, std::uint64_t seed = 20240902);

/// Criterion 8: exact radius/diameter, grid certification, Eq-18 ratios.
AuditReport audit_metrics(unsigned grid_den = 16);

/// Criterion 9: source-unfolding volume conservation and circumradius;
/// 3-cube star-unfolding area.
AuditReport audit_unfolding_conservation(std::size_t n_random = 5,
                                         std::uint64_t seed = 20240903);

/// Criterion 10: closed-form circumcenters equal the generic solver;
/// psi22/psi32 printed identities equal the determinant definitions.
AuditReport audit_cross_formulas(std::size_t per_region = 200, std::uint64_t seed = 20240904);

/// Named suite -> reports (the CLI surface).
std::vector<AuditReport> run_suite(const std::string& suite);

} // namespace cubegeo
