#ifndef LOADCOLOR_MODULATORS_HPP
#define LOADCOLOR_MODULATORS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "loadcolor/graph.hpp"

namespace loadcolor {

enum class GraphClass : unsigned char { cluster, cocluster, threshold };

std::string to_string(GraphClass cls);
std::optional<GraphClass> graph_class_from_string(const std::string& s);

/// Vertex set X such that G - X lies in target_class.
struct Modulator {
    std::vector<Vertex> vertices;  // sorted ascending
    GraphClass target_class;
};

/// Lexicographically first vertex triple inducing a P3, if any.
std::optional<std::array<Vertex, 3>> find_induced_p3(const Graph& g);

/// Lowest (by sorted vertex tuple) induced P4, C4 or 2K2, if any.
std::optional<std::array<Vertex, 4>> find_threshold_obstruction(const Graph& g);

/// Bounded-depth branching on forbidden induced subgraphs: P3 for cluster
/// (3-way), P3 in the complement for co-cluster, and P4/C4/2K2 for threshold
/// (4-way). Returns a modulator of size <= kmax if one exists.
std::optional<Modulator> find_modulator(const Graph& g, GraphClass cls, int kmax);

/// Iterative deepening over kmax = 0, 1, 2, ...; always terminates.
Modulator find_minimum_modulator(const Graph& g, GraphClass cls);

bool verify_modulator(const Graph& g, const std::vector<Vertex>& x, GraphClass cls);

inline std::optional<Modulator> cluster_modulator(const Graph& g, int kmax) {
    return find_modulator(g, GraphClass::cluster, kmax);
}
inline std::optional<Modulator> cocluster_modulator(const Graph& g, int kmax) {
    return find_modulator(g, GraphClass::cocluster, kmax);
}
inline std::optional<Modulator> threshold_modulator(const Graph& g, int kmax) {
    return find_modulator(g, GraphClass::threshold, kmax);
}

}  // namespace loadcolor

#endif
