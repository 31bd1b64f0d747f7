#ifndef LOADCOLOR_REDUCTIONS_HPP
#define LOADCOLOR_REDUCTIONS_HPP

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "loadcolor/graph.hpp"

namespace loadcolor {

/// Per-H-vertex provenance. Roles: 'a'/'b' = copy vertices of the bisection
/// reduction (origin = source vertex); 'x' = source vertex, 'y' = edge
/// vertex, 'z' = pendant (origin = source edge index in sorted edge order).
struct RoleEntry {
    char role = '?';
    int origin = -1;
};

struct RoleMap {
    std::vector<RoleEntry> roles;  // indexed by H-vertex
    bool demands_swapped = false;  // k1 > k2 was normalized away
};

/// Sidecar format: "c swapped <0|1>" then one line "<h-vertex> <role>
/// <origin>" per vertex, both columns 1-indexed.
void write_roles(const RoleMap& rm, std::ostream& out);
RoleMap read_roles(std::istream& in);

struct ReducedInstance {
    Graph graph;
    long long k1 = 0;
    long long k2 = 0;
    RoleMap roles;
};

/// Minimum Bisection -> 2-Load Coloring: H = two copies of G plus all cross
/// edges, demands k1 = k2 = m - k + n^2/4. Requires even n and k <= m.
ReducedInstance bisection_to_lc(const Graph& g, long long k);

/// Equal bipartition with cut <= k, if one exists. Enumerates all
/// bisections; V1 is the side containing vertex 0.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> brute_bisection(
    const Graph& g, long long k, int size_cap = 20);

/// General -> bipartite instances: incidence graph plus m^2 pendants per
/// edge vertex. Swaps demands first when k1 > k2 (recorded in the role map).
ReducedInstance to_bipartite(const Graph& g, long long k1, long long k2);

/// As to_bipartite, with the edge side completed into a clique.
ReducedInstance to_split(const Graph& g, long long k1, long long k2);

/// Extends a coloring of the non-pendant vertices (ascending H ids) by
/// giving every pendant the color of its edge vertex.
Coloring collapse_pendants(const Graph& h, const RoleMap& rm, const Coloring& core);

}  // namespace loadcolor

#endif
