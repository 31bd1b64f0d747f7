#include "loadcolor/reductions.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace loadcolor {

namespace {

long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

}  // namespace

void write_roles(const RoleMap& rm, std::ostream& out) {
    out << "c swapped " << (rm.demands_swapped ? 1 : 0) << '\n';
    for (size_t i = 0; i < rm.roles.size(); ++i)
        out << i + 1 << ' ' << rm.roles[i].role << ' ' << rm.roles[i].origin + 1 << '\n';
}

RoleMap read_roles(std::istream& in) {
    RoleMap rm;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") {
            std::string key;
            int flag;
            if ((ls >> key >> flag) && key == "swapped") rm.demands_swapped = flag != 0;
            continue;
        }
        long long hv, origin;
        char role;
        std::istringstream ls2(line);
        if (!(ls2 >> hv >> role >> origin) || hv < 1 ||
            std::string("abxyz").find(role) == std::string::npos)
            throw std::runtime_error("roles line " + std::to_string(line_no) + ": malformed entry");
        if (static_cast<size_t>(hv) > rm.roles.size()) rm.roles.resize(hv);
        rm.roles[hv - 1] = {role, static_cast<int>(origin - 1)};
    }
    for (size_t i = 0; i < rm.roles.size(); ++i)
        if (rm.roles[i].role == '?')
            throw std::runtime_error("roles: missing entry for vertex " + std::to_string(i + 1));
    return rm;
}

ReducedInstance bisection_to_lc(const Graph& g, long long k) {
    const long long n = g.n(), m = g.m();
    if (n % 2 != 0) throw std::invalid_argument("bisection_to_lc: n must be even");
    if (k < 0 || k > m) throw std::invalid_argument("bisection_to_lc: need 0 <= k <= m");
    std::vector<Edge> edges;
    edges.reserve(2 * g.m() + static_cast<size_t>(n) * n);
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(static_cast<Vertex>(n + u), static_cast<Vertex>(n + v));
    }
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) edges.emplace_back(i, static_cast<Vertex>(n + j));
    ReducedInstance out;
    out.graph = Graph(static_cast<int>(2 * n), std::move(edges));
    out.k1 = out.k2 = m - k + n * n / 4;
    out.roles.roles.resize(2 * n);
    for (Vertex v = 0; v < n; ++v) {
        out.roles.roles[v] = {'a', v};
        out.roles.roles[n + v] = {'b', v};
    }
    return out;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> brute_bisection(
    const Graph& g, long long k, int size_cap) {
    if (g.n() % 2 != 0) throw std::invalid_argument("brute_bisection: n must be even");
    if (g.n() > size_cap)
        throw std::invalid_argument("brute_bisection: " + std::to_string(g.n()) +
                                    " vertices exceeds cap " + std::to_string(size_cap));
    if (k < 0) return std::nullopt;
    if (g.n() == 0) return std::make_pair(std::vector<Vertex>{}, std::vector<Vertex>{});
    const int n = g.n(), half = n / 2;
    // V1 always holds vertex 0; pick the other half-1 members in
    // lexicographic combination order
    std::vector<int> idx(half - 1);
    for (int i = 0; i < half - 1; ++i) idx[i] = i + 1;
    std::vector<char> side(n);
    for (;;) {
        std::fill(side.begin(), side.end(), 0);
        side[0] = 1;
        for (int v : idx) side[v] = 1;
        long long cut = 0;
        for (auto [u, v] : g.edges())
            if (side[u] != side[v]) ++cut;
        if (cut <= k) {
            std::vector<Vertex> v1, v2;
            for (Vertex v = 0; v < n; ++v) (side[v] ? v1 : v2).push_back(v);
            return std::make_pair(std::move(v1), std::move(v2));
        }
        // next combination over {1..n-1}
        int pos = half - 2;
        while (pos >= 0 && idx[pos] == n - (half - 1) + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < half - 1; ++i) idx[i] = idx[i - 1] + 1;
    }
    return std::nullopt;
}

namespace {

ReducedInstance incidence_reduction(const Graph& g, long long k1, long long k2, bool make_split) {
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("reduction: negative demand");
    bool swapped = false;
    if (k1 > k2) {
        std::swap(k1, k2);
        swapped = true;
    }
    const long long n = g.n(), m = g.m();
    const long long pendants_per_edge = m * m;
    const long long total = n + m + m * pendants_per_edge;
    std::vector<Edge> edges;
    for (long long e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        Vertex ye = static_cast<Vertex>(n + e);
        edges.emplace_back(u, ye);
        edges.emplace_back(v, ye);
        for (long long i = 0; i < pendants_per_edge; ++i)
            edges.emplace_back(ye, static_cast<Vertex>(n + m + e * pendants_per_edge + i));
    }
    if (make_split)
        for (long long e1 = 0; e1 < m; ++e1)
            for (long long e2 = e1 + 1; e2 < m; ++e2)
                edges.emplace_back(static_cast<Vertex>(n + e1), static_cast<Vertex>(n + e2));
    ReducedInstance out;
    out.graph = Graph(static_cast<int>(total), std::move(edges));
    out.k1 = 2 * k1 + k1 * pendants_per_edge;
    out.k2 = (m + k2 - k1) + (m - k1) * pendants_per_edge;
    if (make_split) {
        out.k1 += choose2(k1);
        out.k2 += choose2(m - k1);
    }
    out.k1 = std::max<long long>(out.k1, 0);
    out.k2 = std::max<long long>(out.k2, 0);
    out.roles.demands_swapped = swapped;
    out.roles.roles.resize(total);
    for (Vertex v = 0; v < n; ++v) out.roles.roles[v] = {'x', v};
    for (long long e = 0; e < m; ++e) {
        out.roles.roles[n + e] = {'y', static_cast<int>(e)};
        for (long long i = 0; i < pendants_per_edge; ++i)
            out.roles.roles[n + m + e * pendants_per_edge + i] = {'z', static_cast<int>(e)};
    }
    return out;
}

}  // namespace

ReducedInstance to_bipartite(const Graph& g, long long k1, long long k2) {
    return incidence_reduction(g, k1, k2, false);
}

ReducedInstance to_split(const Graph& g, long long k1, long long k2) {
    return incidence_reduction(g, k1, k2, true);
}

Coloring collapse_pendants(const Graph& h, const RoleMap& rm, const Coloring& core) {
    if (static_cast<int>(rm.roles.size()) != h.n())
        throw std::invalid_argument("collapse_pendants: role map does not match graph");
    std::vector<int> y_of_edge;
    int non_pendants = 0;
    for (int v = 0; v < h.n(); ++v) {
        if (rm.roles[v].role == 'z') continue;
        ++non_pendants;
        if (rm.roles[v].role == 'y') {
            if (rm.roles[v].origin >= static_cast<int>(y_of_edge.size()))
                y_of_edge.resize(rm.roles[v].origin + 1, -1);
            y_of_edge[rm.roles[v].origin] = v;
        }
    }
    if (core.size() != non_pendants)
        throw std::invalid_argument("collapse_pendants: core coloring covers " +
                                    std::to_string(core.size()) + " vertices, expected " +
                                    std::to_string(non_pendants));
    Coloring f;
    f.colors.resize(h.n());
    int next_core = 0;
    for (int v = 0; v < h.n(); ++v)
        if (rm.roles[v].role != 'z') f.colors[v] = core.at(next_core++);
    for (int v = 0; v < h.n(); ++v) {
        if (rm.roles[v].role != 'z') continue;
        int e = rm.roles[v].origin;
        if (e < 0 || e >= static_cast<int>(y_of_edge.size()) || y_of_edge[e] < 0)
            throw std::invalid_argument("collapse_pendants: pendant without an edge vertex");
        f.colors[v] = f.colors[y_of_edge[e]];
    }
    return f;
}

}  // namespace loadcolor
