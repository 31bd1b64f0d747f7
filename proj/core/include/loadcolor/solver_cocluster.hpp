#ifndef LOADCOLOR_SOLVER_COCLUSTER_HPP
#define LOADCOLOR_SOLVER_COCLUSTER_HPP

#include <optional>
#include <vector>

#include "loadcolor/graph.hpp"

namespace loadcolor {

/// FPT solve parameterized by distance to co-cluster graphs. G - X splits
/// into maximal independent sets with all cross edges present; Phase 2
/// additionally tracks the running red vertex count to price those cross
/// edges. When G - X is edgeless the same machinery runs with one block.
///
/// Throws std::invalid_argument unless G - x is a co-cluster graph.
std::optional<Coloring> solve_dist_cocluster(const Graph& g, const std::vector<Vertex>& x,
                                             long long k1, long long k2, int threads = 1);

namespace cocluster_detail {

/// Phase-2 table for one modulator coloring h: value[t][N][p] = max blue
/// edges in G[X u I_1..I_t] without X-internal edges, N red vertices outside
/// X so far, at least p red edges. kInfeasibleValue encodes infeasible.
std::vector<std::vector<std::vector<long long>>> phase2_table(const Graph& g,
                                                              const std::vector<Vertex>& x,
                                                              const std::vector<Color>& h,
                                                              long long q_cap);

}  // namespace cocluster_detail

}  // namespace loadcolor

#endif
