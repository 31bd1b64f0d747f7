#ifndef LOADCOLOR_GRAPH_HPP
#define LOADCOLOR_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace loadcolor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized u < v

/// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Validates: ids in range, no self-loops, no duplicates. Edges are
    /// normalized to u < v and stored sorted.
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

enum class Color : unsigned char { red, blue };

inline Color other(Color c) { return c == Color::red ? Color::blue : Color::red; }

/// Total assignment of {red, blue} to the vertices of one graph.
struct Coloring {
    std::vector<Color> colors;

    int size() const { return static_cast<int>(colors.size()); }
    Color at(Vertex v) const { return colors[v]; }

    /// One line of 'r'/'b' characters, character i = color of vertex i.
    std::string to_certificate() const;
    static Coloring from_certificate(const std::string& line, int n);
};

struct LoadCount {
    long long red_edges = 0;
    long long blue_edges = 0;

    friend bool operator==(const LoadCount&, const LoadCount&) = default;
};

/// A graph together with red/blue edge demands.
struct Instance {
    Graph graph;
    long long k1 = 0;  // red demand
    long long k2 = 0;  // blue demand
};

struct ClassFlags {
    bool is_cluster = false;
    bool is_cocluster = false;
    bool is_threshold = false;
    bool is_bipartite = false;
    bool is_split = false;
};

/// Reads the text format: 'c' comment lines, one "p edge <n> <m>" header,
/// then exactly m lines "e <u> <v>" with 1-based ids. Vertices are
/// renumbered to 0..n-1. Malformed input throws std::runtime_error with the
/// offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);

/// red_edges = edges with both ends red, blue_edges likewise.
LoadCount count_load(const Graph& g, const Coloring& f);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> vertices;  // vertices[new_id] = old_id, ascending
};

/// Subgraph induced by s (given in any order, no duplicates).
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& s);

/// |E[x, y]| for disjoint x, y.
long long cut_edges(const Graph& g, const std::vector<Vertex>& x,
                    const std::vector<Vertex>& y);

ClassFlags recognize_class(const Graph& g);

/// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// G(n, p) with a fixed pair scan order; identical (n, p, seed) gives an
/// identical graph on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace loadcolor

#endif
