#ifndef LOADCOLOR_SOLVER_CLUSTER_HPP
#define LOADCOLOR_SOLVER_CLUSTER_HPP

#include <optional>
#include <vector>

#include "loadcolor/graph.hpp"

namespace loadcolor {

/// FPT solve parameterized by distance to cluster graphs: enumerate the 2^|X|
/// colorings of the modulator, preprocess X-internal edges into residual
/// demands, then a two-phase DP over the cliques of G - X. The lowest
/// feasible guess index wins regardless of thread count.
///
/// Throws std::invalid_argument unless G - x is a cluster graph.
std::optional<Coloring> solve_dist_cluster(const Graph& g, const std::vector<Vertex>& x,
                                           long long k1, long long k2, int threads = 1);

namespace cluster_detail {

/// Phase-1 table for one modulator coloring h (aligned with sorted x):
/// value[n_r][q] = max blue edges in G[X u C] without X-internal edges, with
/// exactly n_r red vertices in the clique C and at least q red edges.
/// kInfeasibleValue encodes an unsatisfiable cell.
std::vector<std::vector<long long>> phase1_table(const Graph& g, const std::vector<Vertex>& x,
                                                 const std::vector<Color>& h,
                                                 const std::vector<Vertex>& clique,
                                                 long long q_cap);

}  // namespace cluster_detail

}  // namespace loadcolor

#endif
