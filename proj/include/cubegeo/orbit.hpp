#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubegeo/farthest.hpp"

namespace cubegeo {

/// One orbit step in fundamental-domain coordinates.
struct OrbitStep {
    std::vector<Rat> coords;           // reduced (a,b,c) — snapped during the tail
    std::string region;                // exact classification tag
    bool exact = true;                 // computed in the exact prefix
};

/// Orbit of the iterated map iota∘f, tracked in the fundamental domain.
struct Orbit {
    std::vector<OrbitStep> steps;       // step 0 = the (reduced) start
    std::size_t exact_prefix_len = 0;
    std::optional<Vec> limit;           // 4D surface point in reduced frame
    bool limit_exact = false;
    std::string resolution;             // "fixed-point" | "delta11" | "converged" | "unresolved"
    SignedPerm witness;                 // reduction witness of the start
};

struct OrbitOptions {
    std::size_t max_steps = 500;
    std::size_t exact_steps = 8;
    double tol = 1e-12;
    unsigned snap_bits = 48; // denominator cap 2^48 for the tail
};

/// Iterate iota∘f from a boundary point of I^4. Multi-valued steps select the
/// lexicographically least Delta-reduced image. The first exact_steps are
/// exact rationals; the tail snaps coordinates to denominator 2^snap_bits
/// and re-runs the exact region logic on the snapped point each step.
Orbit iterate_orbit(const Vec& start, const OrbitOptions& opts = {});

/// Orbit limit transported back to the original frame.
std::optional<Vec> orbit_limit_original_frame(const Orbit& o);

/// Blow-up coordinates (r_xz, r_2, r_yz) = (a/c, (a-c)/c^2, b/c); nullopt
/// components when c = 0.
struct BlowupCoords {
    std::optional<Rat> r_xz, r_2, r_yz;
};
BlowupCoords blowup_coords(const DeltaPoint& p);

/// Descent-inequality report for the small-|p| escape mechanism.
struct DescentReport {
    bool window_met = false;
    std::string window;   // which hypothesis window was checked
    std::string detail;   // human-readable margins
    bool holds = false;   // the exact inequality/identity verdict
};
/// window: "rxz_drop"  (D21/D22A, r_xz > 3: r_xz drops by more than 1)
///         "r2_drop"   (D21/D22A, r_xz < 3.535: r_xz drops, r_2 > 6, r_2 drops by > 4)
///         "d31_identity" (D31/D32A: r_xz > 4 and the displayed identity, negative)
DescentReport check_descent(const DeltaPoint& p, const std::string& window);

/// Aggregate limit diagnostics over a grid of Delta (step = 1/grid_den) with
/// c > 0: per-sample resolved limit, distance to the diagonal, and c'.
struct LimitSummaryRow {
    std::vector<Rat> start;
    std::string resolution;
    double diag_dist = 0.0;
    double c_limit = 0.0;
    bool c_limit_exact = false;
};
struct LimitSummary {
    std::vector<LimitSummaryRow> rows;
    double max_diag_dist = 0.0;
    std::size_t unresolved = 0;
    std::size_t below_floor = 0; // c > 0 samples with numeric c' below the floor
};
LimitSummary limit_set_summary(unsigned grid_den, double c_floor = 1e-6,
                               const OrbitOptions& opts = {});

} // namespace cubegeo
