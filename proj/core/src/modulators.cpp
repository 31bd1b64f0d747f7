#include "loadcolor/modulators.hpp"

#include <algorithm>
#include <stdexcept>

namespace loadcolor {

std::string to_string(GraphClass cls) {
    switch (cls) {
        case GraphClass::cluster: return "cluster";
        case GraphClass::cocluster: return "cocluster";
        case GraphClass::threshold: return "threshold";
    }
    return "?";
}

std::optional<GraphClass> graph_class_from_string(const std::string& s) {
    if (s == "cluster") return GraphClass::cluster;
    if (s == "cocluster") return GraphClass::cocluster;
    if (s == "threshold") return GraphClass::threshold;
    return std::nullopt;
}

namespace {

// All finders take an aliveness mask so branching never rebuilds graphs.

std::optional<std::array<Vertex, 3>> p3_in(const Graph& g, const std::vector<char>& alive) {
    for (Vertex a = 0; a < g.n(); ++a) {
        if (!alive[a]) continue;
        for (Vertex b = a + 1; b < g.n(); ++b) {
            if (!alive[b]) continue;
            for (Vertex c = b + 1; c < g.n(); ++c) {
                if (!alive[c]) continue;
                int e = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c);
                if (e == 2) return std::array<Vertex, 3>{a, b, c};
            }
        }
    }
    return std::nullopt;
}

// Induced P4 or C4 among alive vertices, scanning 4-subsets lexicographically.
std::optional<std::array<Vertex, 4>> p4_or_c4_in(const Graph& g, const std::vector<char>& alive) {
    for (Vertex a = 0; a < g.n(); ++a) {
        if (!alive[a]) continue;
        for (Vertex b = a + 1; b < g.n(); ++b) {
            if (!alive[b]) continue;
            for (Vertex c = b + 1; c < g.n(); ++c) {
                if (!alive[c]) continue;
                for (Vertex d = c + 1; d < g.n(); ++d) {
                    if (!alive[d]) continue;
                    std::array<Vertex, 4> vs{a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(vs[i], vs[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges == 3) {
                        // among 3-edge graphs on 4 vertices only P4 has max degree 2
                        // and no isolated vertex
                        if (std::max({deg[0], deg[1], deg[2], deg[3]}) == 2 &&
                            std::min({deg[0], deg[1], deg[2], deg[3]}) == 1)
                            return vs;
                    } else if (edges == 4) {
                        if (deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2) return vs;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// Scans edge pairs; returns the 2K2 with the smallest sorted vertex tuple.
std::optional<std::array<Vertex, 4>> two_k2_in(const Graph& g, const std::vector<char>& alive) {
    std::optional<std::array<Vertex, 4>> best;
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) {
        auto [a, b] = es[i];
        if (!alive[a] || !alive[b]) continue;
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto [c, d] = es[j];
            if (!alive[c] || !alive[d]) continue;
            if (a == c || a == d || b == c || b == d) continue;
            if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d))
                continue;
            std::array<Vertex, 4> vs{a, b, c, d};
            std::sort(vs.begin(), vs.end());
            if (!best || vs < *best) best = vs;
        }
    }
    return best;
}

std::optional<std::array<Vertex, 4>> threshold_obstruction_in(const Graph& g,
                                                              const std::vector<char>& alive) {
    auto pc = p4_or_c4_in(g, alive);
    auto kk = two_k2_in(g, alive);
    if (pc && kk) return std::min(*pc, *kk);
    return pc ? pc : kk;
}

template <typename Finder>
bool branch(const Graph& g, const Finder& find, std::vector<char>& alive, int depth_left,
            std::vector<Vertex>& deleted) {
    auto obstruction = find(g, alive);
    if (!obstruction) return true;
    if (depth_left == 0) return false;
    for (Vertex v : *obstruction) {
        alive[v] = 0;
        deleted.push_back(v);
        if (branch(g, find, alive, depth_left - 1, deleted)) return true;
        deleted.pop_back();
        alive[v] = 1;
    }
    return false;
}

std::optional<std::vector<Vertex>> bounded_deletion(const Graph& g, GraphClass cls, int kmax) {
    std::vector<char> alive(g.n(), 1);
    std::vector<Vertex> deleted;
    bool ok;
    switch (cls) {
        case GraphClass::cluster:
            ok = branch(g, [](const Graph& h, const std::vector<char>& a) { return p3_in(h, a); },
                        alive, kmax, deleted);
            break;
        case GraphClass::threshold:
            ok = branch(g,
                        [](const Graph& h, const std::vector<char>& a) {
                            return threshold_obstruction_in(h, a);
                        },
                        alive, kmax, deleted);
            break;
        case GraphClass::cocluster: {
            Graph gc = complement(g);
            ok = branch(gc, [](const Graph& h, const std::vector<char>& a) { return p3_in(h, a); },
                        alive, kmax, deleted);
            break;
        }
        default:
            throw std::logic_error("bad graph class");
    }
    if (!ok) return std::nullopt;
    std::sort(deleted.begin(), deleted.end());
    return deleted;
}

}  // namespace

std::optional<std::array<Vertex, 3>> find_induced_p3(const Graph& g) {
    std::vector<char> alive(g.n(), 1);
    return p3_in(g, alive);
}

std::optional<std::array<Vertex, 4>> find_threshold_obstruction(const Graph& g) {
    std::vector<char> alive(g.n(), 1);
    return threshold_obstruction_in(g, alive);
}

std::optional<Modulator> find_modulator(const Graph& g, GraphClass cls, int kmax) {
    if (kmax < 0) throw std::invalid_argument("find_modulator: negative kmax");
    auto set = bounded_deletion(g, cls, kmax);
    if (!set) return std::nullopt;
    return Modulator{std::move(*set), cls};
}

Modulator find_minimum_modulator(const Graph& g, GraphClass cls) {
    for (int k = 0;; ++k) {
        auto m = find_modulator(g, cls, k);
        if (m) return std::move(*m);
    }
}

bool verify_modulator(const Graph& g, const std::vector<Vertex>& x, GraphClass cls) {
    std::vector<char> keep(g.n(), 1);
    for (Vertex v : x) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("verify_modulator: vertex out of range");
        keep[v] = 0;
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.n(); ++v)
        if (keep[v]) rest.push_back(v);
    ClassFlags flags = recognize_class(induced_subgraph(g, rest).graph);
    switch (cls) {
        case GraphClass::cluster: return flags.is_cluster;
        case GraphClass::cocluster: return flags.is_cocluster;
        case GraphClass::threshold: return flags.is_threshold;
    }
    return false;
}

}  // namespace loadcolor
