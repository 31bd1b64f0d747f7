#ifndef LOADCOLOR_SRC_SOLVER_COMMON_HPP
#define LOADCOLOR_SRC_SOLVER_COMMON_HPP

// Shared machinery of the modulator-based solvers: guess contexts over X,
// the per-vertex DP pricing X-incident edges, and the deterministic
// lowest-feasible-guess scan.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "loadcolor/dp_common.hpp"
#include "loadcolor/graph.hpp"

namespace loadcolor {
namespace fpt {

inline long long add(long long a, long long b) {
    return (a == kInfeasibleValue || b == kInfeasibleValue) ? kInfeasibleValue : a + b;
}

inline long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// One modulator coloring plus everything derived from it. X-internal edges
// are accounted here once and never touched by the DPs.
struct XContext {
    std::vector<Vertex> x;  // sorted
    std::vector<Color> h;   // h[t] colors x[t]
    long long internal_red = 0;
    long long internal_blue = 0;
    long long k1p = 0;  // residual demands after X-internal edges
    long long k2p = 0;
    std::vector<int> red_nbrs;   // per vertex: red X-neighbors under h
    std::vector<int> blue_nbrs;  // per vertex: blue X-neighbors under h
};

inline XContext make_context(const Graph& g, const std::vector<Vertex>& x,
                             const std::vector<Color>& h, long long k1, long long k2) {
    XContext ctx;
    ctx.x = x;
    ctx.h = h;
    std::vector<int> xpos(g.n(), -1);
    for (size_t t = 0; t < x.size(); ++t) xpos[x[t]] = static_cast<int>(t);
    for (auto [u, v] : g.edges()) {
        if (xpos[u] < 0 || xpos[v] < 0) continue;
        if (h[xpos[u]] != h[xpos[v]]) continue;
        if (h[xpos[u]] == Color::red)
            ++ctx.internal_red;
        else
            ++ctx.internal_blue;
    }
    ctx.k1p = saturate(k1 - ctx.internal_red);
    ctx.k2p = saturate(k2 - ctx.internal_blue);
    ctx.red_nbrs.assign(g.n(), 0);
    ctx.blue_nbrs.assign(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (xpos[v] >= 0) continue;
        for (Vertex w : g.neighbors(v)) {
            if (xpos[w] < 0) continue;
            if (h[xpos[w]] == Color::red)
                ++ctx.red_nbrs[v];
            else
                ++ctx.blue_nbrs[v];
        }
    }
    return ctx;
}

inline std::vector<Color> guess_colors(std::uint64_t bits, size_t size) {
    std::vector<Color> h(size);
    for (size_t t = 0; t < size; ++t) h[t] = (bits >> t) & 1 ? Color::red : Color::blue;
    return h;
}

// DP over one vertex list with only X-incident edges in play.
// val[t][j][q] = max blue X-edges among the first t vertices with j of them
// red and at least q red X-edges.
struct VertexDp {
    int count = 0;
    long long q_cap = 0;
    std::vector<long long> val;
    std::vector<char> red_choice;

    long long& at(int t, int j, long long q) {
        return val[(static_cast<size_t>(t) * (count + 1) + j) * (q_cap + 1) + q];
    }
    long long get(int t, int j, long long q) const {
        return val[(static_cast<size_t>(t) * (count + 1) + j) * (q_cap + 1) + q];
    }

    VertexDp(const std::vector<Vertex>& vs, const XContext& ctx, long long q_cap_in)
        : count(static_cast<int>(vs.size())), q_cap(q_cap_in) {
        size_t cells = static_cast<size_t>(count + 1) * (count + 1) * (q_cap + 1);
        val.assign(cells, kInfeasibleValue);
        red_choice.assign(cells, 0);
        at(0, 0, 0) = 0;
        for (int t = 1; t <= count; ++t) {
            Vertex v = vs[t - 1];
            long long rx = ctx.red_nbrs[v], bx = ctx.blue_nbrs[v];
            for (int j = 0; j <= t; ++j) {
                for (long long q = 0; q <= q_cap; ++q) {
                    long long best = add(get(t - 1, j, q), bx);
                    char red = 0;
                    if (j >= 1) {
                        long long cand = get(t - 1, j - 1, saturate(q - rx));
                        if (cand != kInfeasibleValue && cand > best) {
                            best = cand;
                            red = 1;
                        }
                    }
                    size_t idx = (static_cast<size_t>(t) * (count + 1) + j) * (q_cap + 1) + q;
                    val[idx] = best;
                    red_choice[idx] = red;
                }
            }
        }
    }

    // Walks choices down from (count, j, q); colors indexed by original ids.
    void trace(int j, long long q, const std::vector<Vertex>& vs, const XContext& ctx,
               std::vector<Color>& colors) const {
        for (int t = count; t >= 1; --t) {
            Vertex v = vs[t - 1];
            size_t idx = (static_cast<size_t>(t) * (count + 1) + j) * (q_cap + 1) + q;
            if (red_choice[idx]) {
                colors[v] = Color::red;
                q = saturate(q - ctx.red_nbrs[v]);
                --j;
            } else {
                colors[v] = Color::blue;
            }
        }
    }
};

// Runs try_guess over guess indices 0..count-1 and returns the result of the
// lowest feasible index, independent of thread count.
template <typename TryGuess>
std::optional<Coloring> scan_guesses(std::uint64_t count, int threads, TryGuess try_guess) {
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (auto r = try_guess(i)) return r;
        return std::nullopt;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{~std::uint64_t{0}};
    std::optional<Coloring> result;
    std::mutex result_mutex;
    auto worker = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= count || i > best.load()) return;
            auto r = try_guess(i);
            if (!r) continue;
            std::lock_guard<std::mutex> lock(result_mutex);
            if (i < best.load()) {
                best.store(i);
                result = std::move(r);
            }
        }
    };
    std::vector<std::thread> pool;
    int workers = std::min<std::uint64_t>(threads, count ? count : 1);
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return result;
}

inline std::vector<Vertex> normalized_modulator(const Graph& g, std::vector<Vertex> x) {
    std::sort(x.begin(), x.end());
    if (std::adjacent_find(x.begin(), x.end()) != x.end())
        throw std::invalid_argument("modulator contains duplicate vertices");
    for (Vertex v : x)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("modulator vertex out of range");
    if (x.size() > 30)
        throw std::invalid_argument("modulator too large to enumerate 2^|X| colorings");
    return x;
}

inline std::vector<Vertex> rest_vertices(const Graph& g, const std::vector<Vertex>& x_sorted) {
    std::vector<char> in_x(g.n(), 0);
    for (Vertex v : x_sorted) in_x[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!in_x[v]) rest.push_back(v);
    return rest;
}

}  // namespace fpt
}  // namespace loadcolor

#endif
