#include "loadcolor/solver_cluster.hpp"

#include <cassert>
#include <stdexcept>

#include "loadcolor/dp_common.hpp"
#include "loadcolor/modulators.hpp"
#include "solver_common.hpp"

namespace loadcolor {

namespace {

using fpt::add;
using fpt::choose2;
using fpt::XContext;

// Phase-1 data for one clique: the per-vertex DP over X-incident edges plus
// the folded table b[n_r][q] including the clique-internal binomials.
struct CliqueTable {
    std::vector<Vertex> vs;
    fpt::VertexDp dp;
    std::vector<std::vector<long long>> b;
    std::vector<int> best_nr;  // argmax of b[.][q], -1 if none
    std::vector<long long> best_val;

    CliqueTable(std::vector<Vertex> vs_in, const XContext& ctx, long long q_cap)
        : vs(std::move(vs_in)), dp(vs, ctx, q_cap) {
        int c = static_cast<int>(vs.size());
        b.assign(c + 1, std::vector<long long>(q_cap + 1, kInfeasibleValue));
        for (int nr = 0; nr <= c; ++nr) {
            long long red_inside = choose2(nr);
            long long blue_inside = choose2(c - nr);
            for (long long q = 0; q <= q_cap; ++q)
                b[nr][q] = add(dp.get(c, nr, saturate(q - red_inside)), blue_inside);
        }
        best_val.assign(q_cap + 1, kInfeasibleValue);
        best_nr.assign(q_cap + 1, -1);
        for (long long q = 0; q <= q_cap; ++q) {
            for (int nr = 0; nr <= c; ++nr) {
                if (b[nr][q] != kInfeasibleValue && b[nr][q] > best_val[q]) {
                    best_val[q] = b[nr][q];
                    best_nr[q] = nr;
                }
            }
        }
    }
};

struct ClusterSolver {
    const Graph& g;
    std::vector<Vertex> x;
    std::vector<std::vector<Vertex>> cliques;
    long long k1, k2;

    std::optional<Coloring> try_guess(std::uint64_t bits) const {
        XContext ctx = fpt::make_context(g, x, fpt::guess_colors(bits, x.size()), k1, k2);
        std::vector<Color> colors(g.n(), Color::blue);
        for (size_t t = 0; t < x.size(); ++t) colors[x[t]] = ctx.h[t];
        if (ctx.k1p == 0 && ctx.k2p == 0) return finish(std::move(colors));

        const long long q_cap = ctx.k1p;
        std::vector<CliqueTable> tables;
        tables.reserve(cliques.size());
        for (const auto& c : cliques) tables.emplace_back(c, ctx, q_cap);

        // Phase 2: opt[t][p] = max blue in the first t cliques plus X, at
        // least p red edges remaining to produce.
        const int blocks = static_cast<int>(cliques.size());
        std::vector<std::vector<long long>> opt(blocks + 1,
                                                std::vector<long long>(q_cap + 1, kInfeasibleValue));
        std::vector<std::vector<long long>> pick_q(blocks + 1,
                                                   std::vector<long long>(q_cap + 1, -1));
        opt[0][0] = 0;
        for (int t = 1; t <= blocks; ++t) {
            for (long long p = 0; p <= q_cap; ++p) {
                long long best = kInfeasibleValue, bq = -1;
                for (long long q = 0; q <= q_cap; ++q) {
                    long long cand = add(opt[t - 1][saturate(p - q)], tables[t - 1].best_val[q]);
                    if (cand != kInfeasibleValue && cand > best) {
                        best = cand;
                        bq = q;
                    }
                }
                opt[t][p] = best;
                pick_q[t][p] = bq;
            }
        }
        if (opt[blocks][q_cap] == kInfeasibleValue || opt[blocks][q_cap] < ctx.k2p)
            return std::nullopt;

        long long p = q_cap;
        for (int t = blocks; t >= 1; --t) {
            long long q = pick_q[t][p];
            int nr = tables[t - 1].best_nr[q];
            tables[t - 1].dp.trace(nr, saturate(q - choose2(nr)), tables[t - 1].vs, ctx, colors);
            p = saturate(p - q);
        }
        return finish(std::move(colors));
    }

    std::optional<Coloring> finish(std::vector<Color> colors) const {
        Coloring f{std::move(colors)};
        LoadCount lc = count_load(g, f);
        if (lc.red_edges < k1 || lc.blue_edges < k2)
            throw std::logic_error("solve_dist_cluster: certificate failed verification");
        return f;
    }
};

}  // namespace

std::optional<Coloring> solve_dist_cluster(const Graph& g, const std::vector<Vertex>& x,
                                           long long k1, long long k2, int threads) {
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("solve_dist_cluster: negative demand");
    std::vector<Vertex> xs = fpt::normalized_modulator(g, x);
    if (!verify_modulator(g, xs, GraphClass::cluster))
        throw std::invalid_argument("solve_dist_cluster: G - X is not a cluster graph");
    if (k1 > g.m() || k2 > g.m()) return std::nullopt;

    ClusterSolver solver{g, xs, {}, k1, k2};
    auto rest = fpt::rest_vertices(g, xs);
    auto sub = induced_subgraph(g, rest);
    for (const auto& comp : components(sub.graph)) {
        std::vector<Vertex> orig;
        orig.reserve(comp.size());
        for (Vertex v : comp) orig.push_back(sub.vertices[v]);
        solver.cliques.push_back(std::move(orig));
    }
    return fpt::scan_guesses(std::uint64_t{1} << xs.size(), threads,
                             [&](std::uint64_t bits) { return solver.try_guess(bits); });
}

namespace cluster_detail {

std::vector<std::vector<long long>> phase1_table(const Graph& g, const std::vector<Vertex>& x,
                                                 const std::vector<Color>& h,
                                                 const std::vector<Vertex>& clique,
                                                 long long q_cap) {
    XContext ctx = fpt::make_context(g, x, h, 0, 0);
    return CliqueTable(clique, ctx, q_cap).b;
}

}  // namespace cluster_detail

}  // namespace loadcolor
