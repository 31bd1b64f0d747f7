#include "loadcolor/solver_threshold.hpp"

#include <cassert>
#include <stdexcept>

#include "loadcolor/dp_common.hpp"
#include "loadcolor/modulators.hpp"
#include "solver_common.hpp"

namespace loadcolor {

ThresholdOrder threshold_order(const Graph& g, PeelPreference pref) {
    std::vector<char> alive(g.n(), 1);
    std::vector<int> deg(g.n());
    for (Vertex v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    ThresholdOrder order;
    order.vertices.reserve(g.n());
    order.tags.reserve(g.n());
    int remaining = g.n();
    while (remaining > 0) {
        Vertex iso = -1, uni = -1;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (!alive[v]) continue;
            if (iso < 0 && deg[v] == 0) iso = v;
            if (uni < 0 && deg[v] == remaining - 1) uni = v;
        }
        Vertex pick;
        ThresholdTag tag;
        bool take_iso = pref == PeelPreference::isolated_first ? iso >= 0 : (uni < 0 && iso >= 0);
        if (take_iso) {
            pick = iso;
            tag = ThresholdTag::isolated;
        } else if (uni >= 0) {
            pick = uni;
            tag = ThresholdTag::universal;
        } else if (iso >= 0) {
            pick = iso;
            tag = ThresholdTag::isolated;
        } else {
            throw std::invalid_argument("threshold_order: graph is not a threshold graph");
        }
        order.vertices.push_back(pick);
        order.tags.push_back(tag);
        alive[pick] = 0;
        --remaining;
        for (Vertex w : g.neighbors(pick))
            if (alive[w]) --deg[w];
    }
    std::reverse(order.vertices.begin(), order.vertices.end());
    std::reverse(order.tags.begin(), order.tags.end());
    return order;
}

namespace {

using fpt::add;
using fpt::XContext;

using Table3 = std::vector<std::vector<std::vector<long long>>>;

struct ThresholdTables {
    Table3 opt;                                  // [t][j][p]
    std::vector<std::vector<std::vector<char>>> red_choice;
};

// DP along the creation order. Universal vertices additionally pay/earn the
// (t-1 minus j) edges toward the already-placed part of G - X.
ThresholdTables run_dp(const XContext& ctx, const ThresholdOrder& order, long long q_cap) {
    const int len = static_cast<int>(order.vertices.size());
    ThresholdTables tb;
    tb.opt.assign(len + 1, std::vector<std::vector<long long>>(
                               len + 1, std::vector<long long>(q_cap + 1, kInfeasibleValue)));
    tb.red_choice.assign(
        len + 1, std::vector<std::vector<char>>(len + 1, std::vector<char>(q_cap + 1, 0)));
    tb.opt[0][0][0] = 0;
    for (int t = 1; t <= len; ++t) {
        Vertex v = order.vertices[t - 1];
        bool universal = order.tags[t - 1] == ThresholdTag::universal;
        long long rx = ctx.red_nbrs[v], bx = ctx.blue_nbrs[v];
        for (int j = 0; j <= t; ++j) {
            for (long long p = 0; p <= q_cap; ++p) {
                long long blue_gain = bx + (universal ? (t - 1 - j) : 0);
                long long best = add(tb.opt[t - 1][j][p], blue_gain);
                char red = 0;
                if (j >= 1) {
                    long long red_cost = rx + (universal ? (j - 1) : 0);
                    long long cand = tb.opt[t - 1][j - 1][saturate(p - red_cost)];
                    if (cand != kInfeasibleValue && cand > best) {
                        best = cand;
                        red = 1;
                    }
                }
                tb.opt[t][j][p] = best;
                tb.red_choice[t][j][p] = red;
            }
        }
    }
    return tb;
}

struct ThresholdSolver {
    const Graph& g;
    std::vector<Vertex> x;
    ThresholdOrder order;  // over original vertex ids
    long long k1, k2;

    std::optional<Coloring> try_guess(std::uint64_t bits) const {
        XContext ctx = fpt::make_context(g, x, fpt::guess_colors(bits, x.size()), k1, k2);
        std::vector<Color> colors(g.n(), Color::blue);
        for (size_t t = 0; t < x.size(); ++t) colors[x[t]] = ctx.h[t];
        if (ctx.k1p == 0 && ctx.k2p == 0) return finish(std::move(colors));

        const long long q_cap = ctx.k1p;
        const int len = static_cast<int>(order.vertices.size());
        ThresholdTables tb = run_dp(ctx, order, q_cap);
        int accept_j = -1;
        for (int j = 0; j <= len; ++j) {
            if (tb.opt[len][j][q_cap] >= ctx.k2p) {
                accept_j = j;
                break;
            }
        }
        if (accept_j < 0) return std::nullopt;

        int j = accept_j;
        long long p = q_cap;
        for (int t = len; t >= 1; --t) {
            Vertex v = order.vertices[t - 1];
            bool universal = order.tags[t - 1] == ThresholdTag::universal;
            if (tb.red_choice[t][j][p]) {
                colors[v] = Color::red;
                long long red_cost = ctx.red_nbrs[v] + (universal ? (j - 1) : 0);
                p = saturate(p - red_cost);
                --j;
            } else {
                colors[v] = Color::blue;
            }
        }
        return finish(std::move(colors));
    }

    std::optional<Coloring> finish(std::vector<Color> colors) const {
        Coloring f{std::move(colors)};
        LoadCount lc = count_load(g, f);
        if (lc.red_edges < k1 || lc.blue_edges < k2)
            throw std::logic_error("solve_dist_threshold: certificate failed verification");
        return f;
    }
};

}  // namespace

std::optional<Coloring> solve_dist_threshold(const Graph& g, const std::vector<Vertex>& x,
                                             long long k1, long long k2, int threads,
                                             PeelPreference pref) {
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("solve_dist_threshold: negative demand");
    std::vector<Vertex> xs = fpt::normalized_modulator(g, x);
    if (!verify_modulator(g, xs, GraphClass::threshold))
        throw std::invalid_argument("solve_dist_threshold: G - X is not a threshold graph");
    if (k1 > g.m() || k2 > g.m()) return std::nullopt;

    auto rest = fpt::rest_vertices(g, xs);
    auto sub = induced_subgraph(g, rest);
    ThresholdOrder local = threshold_order(sub.graph, pref);
    ThresholdOrder order;
    order.tags = local.tags;
    order.vertices.reserve(local.vertices.size());
    for (Vertex v : local.vertices) order.vertices.push_back(sub.vertices[v]);

    ThresholdSolver solver{g, xs, std::move(order), k1, k2};
    return fpt::scan_guesses(std::uint64_t{1} << xs.size(), threads,
                             [&](std::uint64_t bits) { return solver.try_guess(bits); });
}

namespace threshold_detail {

Table3 opt_table(const Graph& g, const std::vector<Vertex>& x, const std::vector<Color>& h,
                 const ThresholdOrder& order, long long q_cap) {
    XContext ctx = fpt::make_context(g, x, h, 0, 0);
    return run_dp(ctx, order, q_cap).opt;
}

}  // namespace threshold_detail

}  // namespace loadcolor
