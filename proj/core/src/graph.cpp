#include "loadcolor/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace loadcolor {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: vertex out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), w);
}

std::string Coloring::to_certificate() const {
    std::string s;
    s.reserve(colors.size());
    for (Color c : colors) s.push_back(c == Color::red ? 'r' : 'b');
    return s;
}

Coloring Coloring::from_certificate(const std::string& line, int n) {
    if (static_cast<int>(line.size()) != n)
        throw std::runtime_error("certificate: expected " + std::to_string(n) +
                                 " characters, got " + std::to_string(line.size()));
    Coloring f;
    f.colors.reserve(n);
    for (char ch : line) {
        if (ch == 'r')
            f.colors.push_back(Color::red);
        else if (ch == 'b')
            f.colors.push_back(Color::blue);
        else
            throw std::runtime_error(std::string("certificate: invalid character '") + ch + "'");
    }
    return f;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) parse_fail(line_no, "duplicate header");
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge")
                parse_fail(line_no, "malformed header, expected 'p edge <n> <m>'");
            if (n < 0 || m < 0) parse_fail(line_no, "negative count in header");
            std::string rest;
            if (ls >> rest) parse_fail(line_no, "trailing tokens after header");
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) parse_fail(line_no, "edge before header");
            long long u, v;
            if (!(ls >> u >> v)) parse_fail(line_no, "malformed edge line");
            std::string rest;
            if (ls >> rest) parse_fail(line_no, "trailing tokens after edge");
            if (u < 1 || u > n || v < 1 || v > n) parse_fail(line_no, "vertex id out of range");
            if (u == v) parse_fail(line_no, "self-loop");
            Edge e{static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1)};
            if (!seen.insert(e).second) parse_fail(line_no, "duplicate edge");
            if (static_cast<long long>(edges.size()) == m)
                parse_fail(line_no, "more edges than declared");
            edges.push_back(e);
        } else {
            parse_fail(line_no, "unrecognized line type '" + tag + "'");
        }
    }
    if (!have_header) throw std::runtime_error("missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != m)
        throw std::runtime_error("declared " + std::to_string(m) + " edges, got " +
                                 std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

LoadCount count_load(const Graph& g, const Coloring& f) {
    if (f.size() != g.n())
        throw std::invalid_argument("count_load: coloring covers " + std::to_string(f.size()) +
                                    " vertices, graph has " + std::to_string(g.n()));
    LoadCount lc;
    for (auto [u, v] : g.edges()) {
        if (f.at(u) != f.at(v)) continue;
        if (f.at(u) == Color::red)
            ++lc.red_edges;
        else
            ++lc.blue_edges;
    }
    return lc;
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<Vertex> vs = s;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex");
    for (Vertex v : vs)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> pos(g.n(), -1);
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) pos[vs[i]] = i;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    return {Graph(static_cast<int>(vs.size()), std::move(edges)), std::move(vs)};
}

long long cut_edges(const Graph& g, const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
    std::vector<char> in_x(g.n(), 0), in_y(g.n(), 0);
    for (Vertex v : x) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("cut_edges: vertex out of range");
        in_x[v] = 1;
    }
    for (Vertex v : y) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("cut_edges: vertex out of range");
        if (in_x[v]) throw std::invalid_argument("cut_edges: sets overlap at vertex " + std::to_string(v));
        in_y[v] = 1;
    }
    long long cnt = 0;
    for (auto [u, v] : g.edges())
        if ((in_x[u] && in_y[v]) || (in_x[v] && in_y[u])) ++cnt;
    return cnt;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<Vertex> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            out[id].push_back(u);
            for (Vertex w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

namespace {

// True iff every pair of neighbors of every vertex is adjacent (no induced P3).
bool p3_free(const Graph& g) {
    for (Vertex u = 0; u < g.n(); ++u) {
        const auto& nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j])) return false;
    }
    return true;
}

bool bipartite(const Graph& g) {
    std::vector<int> side(g.n(), -1);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Peel isolated/universal vertices; threshold graphs are exactly the graphs
// this empties.
bool threshold(const Graph& g) {
    std::vector<char> alive(g.n(), 1);
    std::vector<int> deg(g.n());
    for (Vertex v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    int remaining = g.n();
    while (remaining > 0) {
        Vertex pick = -1;
        for (Vertex v = 0; v < g.n() && pick < 0; ++v)
            if (alive[v] && (deg[v] == 0 || deg[v] == remaining - 1)) pick = v;
        if (pick < 0) return false;
        alive[pick] = 0;
        --remaining;
        for (Vertex w : g.neighbors(pick))
            if (alive[w]) --deg[w];
    }
    return true;
}

// Hammer-Simeone degree criterion; the candidate partition is verified
// directly so ties in the degree order cannot mislead.
bool split(const Graph& g) {
    std::vector<Vertex> order(g.n());
    for (Vertex v = 0; v < g.n(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    int q = 0;
    for (int i = 0; i < g.n(); ++i)
        if (g.degree(order[i]) >= i) q = i + 1;
    long long lhs = 0, rhs = static_cast<long long>(q) * (q - 1);
    for (int i = 0; i < q; ++i) lhs += g.degree(order[i]);
    for (int i = q; i < g.n(); ++i) rhs += std::min(g.degree(order[i]), q);
    if (lhs != rhs) return false;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (!g.has_edge(order[i], order[j])) return false;
    for (int i = q; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.has_edge(order[i], order[j])) return false;
    return true;
}

}  // namespace

ClassFlags recognize_class(const Graph& g) {
    ClassFlags f;
    f.is_cluster = p3_free(g);
    f.is_cocluster = p3_free(complement(g));
    f.is_threshold = threshold(g);
    f.is_bipartite = bipartite(g);
    f.is_split = split(g);
    return f;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p out of [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            // mt19937_64 output is fully specified; avoid std distributions,
            // whose mapping is implementation-defined.
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) edges.emplace_back(u, v);
        }
    return Graph(n, std::move(edges));
}

}  // namespace loadcolor
