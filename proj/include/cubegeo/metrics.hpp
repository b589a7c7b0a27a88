#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubegeo/farthest.hpp"

namespace cubegeo {

/// Intrinsic radius/diameter report. Exact squared values for n = 2,3,4;
/// labeled estimates otherwise.
struct RadiusReport {
    std::size_t n = 0;
    bool exact = false;
    Rat radius_sq;                   // exact mode
    Rat diameter_sq;                 // exact mode
    double radius_est = 0.0;         // estimate mode (distance, not squared)
    double diameter_est = 0.0;
    double ratio = 0.0;
    std::string radius_witness;
    std::string diameter_witness;
    // estimate mode extras
    double ratio_eq18 = 0.0;         // 2/sqrt(n+2)
    double ratio_corner = 0.0;       // (sqrt(n+7)/2)/sqrt(n+2)
    std::size_t samples = 0;
    bool saturated = true;
};

/// Exact values with witnesses for n = 2, 3, 4 (facet centers realize the
/// radius, opposite corners the diameter).
RadiusReport radius_diameter_exact(std::size_t n);

/// Sampling estimator for general n: grid/Monte-Carlo probe of
/// inf_p sup_q d(p,q) via window-checked unfolding enumeration up to
/// max_len (default n+1). Estimates only; never asserted as ground truth.
RadiusReport estimate_ratio_sampling(std::size_t n, std::size_t samples, std::uint64_t seed,
                                     std::size_t max_len = 0);

/// d(p, f(p))^2 sampled over the fundamental domain (exact), for csv dumps
/// and the radius grid certification.
struct FieldRow {
    std::vector<Rat> coords;
    Rat sq_dist;
};
std::vector<FieldRow> farthest_distance_field(std::size_t n, unsigned grid_den);

} // namespace cubegeo
