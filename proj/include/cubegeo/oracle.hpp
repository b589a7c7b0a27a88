#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubegeo/distance.hpp"
#include "cubegeo/unfold.hpp"

namespace cubegeo {

/// All adjacency-valid non-backtracking facet sequences from src to dst of
/// length <= max_len (sequence length counts facets).
std::vector<UnfoldSeq> enumerate_sequences(std::size_t n, const Facet& src, const Facet& dst,
                                           std::size_t max_len);

struct OracleOptions {
    std::size_t max_len = 5;
    std::size_t node_cap = 10'000'000; // DFS safety valve
};

struct OracleResult {
    bool found = false;
    Rat sq_dist;
    std::vector<std::string> best_seq; // facet names, target first
    bool node_capped = false;
    std::size_t nodes = 0;
};

/// Brute-force intrinsic squared distance between boundary points of I^n:
/// enumerate unfolding sequences from a facet of q to a facet of p, keep
/// candidates whose straight unfolded segment crosses every shared-face
/// window in order (exact tests), return the minimum. Equals the true
/// geodesic distance whenever max_len covers the geodesic's facet count.
OracleResult oracle_distance(const Vec& p, const Vec& q, const OracleOptions& opts = {});

/// Grid argmax of dist_to_goal over iota(Delta) (step 1/grid_den); in full
/// mode the search runs over a grid of the whole boundary via
/// dist_on_surface. Exact comparisons throughout.
struct OracleFarthest {
    Vec point; // ambient 4D
    Rat sq_dist;
};
OracleFarthest oracle_farthest(const DeltaPoint& p, unsigned grid_den, bool full_surface = false);

/// Exact-equality audit of the source-image distance against the oracle,
/// with a saturation check at max_len + 1.
struct Eq11Audit {
    std::size_t pairs = 0;
    std::size_t mismatches = 0;
    bool saturated = true; // no value changed when allowing one more facet
    std::vector<std::string> mismatch_details;
};
Eq11Audit eq11_audit(const std::vector<std::pair<DeltaPoint, Vec>>& pairs,
                     std::size_t max_len = 5);

} // namespace cubegeo
