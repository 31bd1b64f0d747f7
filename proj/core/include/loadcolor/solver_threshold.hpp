#ifndef LOADCOLOR_SOLVER_THRESHOLD_HPP
#define LOADCOLOR_SOLVER_THRESHOLD_HPP

#include <optional>
#include <vector>

#include "loadcolor/cwexpr.hpp"
#include "loadcolor/graph.hpp"

namespace loadcolor {

/// Creation sequence of a threshold graph: vertices[t] enters the graph
/// induced by vertices[0..t] as a universal or an isolated vertex.
struct ThresholdOrder {
    std::vector<Vertex> vertices;
    std::vector<ThresholdTag> tags;
};

enum class PeelPreference : unsigned char { isolated_first, universal_first };

/// Peels a currently isolated or universal vertex (lowest index, isolated
/// preferred by default) until the graph is empty; the reversed peel order
/// is the creation sequence. Throws std::invalid_argument if g is not a
/// threshold graph.
ThresholdOrder threshold_order(const Graph& g,
                               PeelPreference pref = PeelPreference::isolated_first);

/// FPT solve parameterized by distance to threshold graphs: guess the
/// modulator coloring, then a DP along the creation ordering of G - X.
///
/// Throws std::invalid_argument unless G - x is a threshold graph.
std::optional<Coloring> solve_dist_threshold(const Graph& g, const std::vector<Vertex>& x,
                                             long long k1, long long k2, int threads = 1,
                                             PeelPreference pref = PeelPreference::isolated_first);

namespace threshold_detail {

/// value[t][j][p] = max blue edges in G[X u {v_1..v_t}] without X-internal
/// edges, j red vertices among v_1..v_t, at least p red edges.
std::vector<std::vector<std::vector<long long>>> opt_table(const Graph& g,
                                                           const std::vector<Vertex>& x,
                                                           const std::vector<Color>& h,
                                                           const ThresholdOrder& order,
                                                           long long q_cap);

}  // namespace threshold_detail

}  // namespace loadcolor

#endif
