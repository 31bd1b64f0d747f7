#include "loadcolor/solver_cocluster.hpp"

#include <cassert>
#include <stdexcept>

#include "loadcolor/dp_common.hpp"
#include "loadcolor/modulators.hpp"
#include "solver_common.hpp"

namespace loadcolor {

namespace {

using fpt::add;
using fpt::XContext;

using Table3 = std::vector<std::vector<std::vector<long long>>>;

struct CoclusterSolver {
    const Graph& g;
    std::vector<Vertex> x;
    std::vector<std::vector<Vertex>> blocks;  // maximal independent sets of G - X
    long long k1, k2;

    struct Phase2 {
        Table3 opt;
        // chosen (n_r, q) per cell; -1 when the cell is infeasible
        std::vector<std::vector<std::vector<std::pair<int, long long>>>> pick;
        std::vector<int> prefix;  // prefix[t] = |I_1| + ... + |I_t|
    };

    Phase2 run_phase2(const XContext& ctx, const std::vector<fpt::VertexDp>& dps) const {
        const long long q_cap = ctx.k1p;
        const int nblocks = static_cast<int>(blocks.size());
        Phase2 ph;
        ph.prefix.assign(nblocks + 1, 0);
        for (int t = 1; t <= nblocks; ++t)
            ph.prefix[t] = ph.prefix[t - 1] + static_cast<int>(blocks[t - 1].size());
        const int total = ph.prefix[nblocks];
        ph.opt.assign(nblocks + 1,
                      std::vector<std::vector<long long>>(
                          total + 1, std::vector<long long>(q_cap + 1, kInfeasibleValue)));
        ph.pick.assign(nblocks + 1,
                       std::vector<std::vector<std::pair<int, long long>>>(
                           total + 1, std::vector<std::pair<int, long long>>(q_cap + 1, {-1, -1})));
        ph.opt[0][0][0] = 0;
        for (int t = 1; t <= nblocks; ++t) {
            const int csize = static_cast<int>(blocks[t - 1].size());
            const int before = ph.prefix[t - 1];
            for (int reds = 0; reds <= ph.prefix[t]; ++reds) {
                for (long long p = 0; p <= q_cap; ++p) {
                    long long best = kInfeasibleValue;
                    std::pair<int, long long> arg{-1, -1};
                    int nr_lo = std::max(0, reds - before);
                    int nr_hi = std::min(csize, reds);
                    for (int nr = nr_lo; nr <= nr_hi; ++nr) {
                        long long red_cross = static_cast<long long>(nr) * (reds - nr);
                        long long blue_cross = static_cast<long long>(csize - nr) *
                                               (before - (reds - nr));
                        for (long long q = 0; q <= q_cap; ++q) {
                            long long inside = dps[t - 1].get(csize, nr, q);
                            if (inside == kInfeasibleValue) continue;
                            long long prev =
                                ph.opt[t - 1][reds - nr][saturate(p - q - red_cross)];
                            if (prev == kInfeasibleValue) continue;
                            long long cand = prev + inside + blue_cross;
                            if (cand > best) {
                                best = cand;
                                arg = {nr, q};
                            }
                        }
                    }
                    ph.opt[t][reds][p] = best;
                    ph.pick[t][reds][p] = arg;
                }
            }
        }
        return ph;
    }

    std::optional<Coloring> try_guess(std::uint64_t bits) const {
        XContext ctx = fpt::make_context(g, x, fpt::guess_colors(bits, x.size()), k1, k2);
        std::vector<Color> colors(g.n(), Color::blue);
        for (size_t t = 0; t < x.size(); ++t) colors[x[t]] = ctx.h[t];
        if (ctx.k1p == 0 && ctx.k2p == 0) return finish(std::move(colors));

        std::vector<fpt::VertexDp> dps;
        dps.reserve(blocks.size());
        for (const auto& blk : blocks) dps.emplace_back(blk, ctx, ctx.k1p);
        Phase2 ph = run_phase2(ctx, dps);

        const int nblocks = static_cast<int>(blocks.size());
        const int total = ph.prefix[nblocks];
        int accept_reds = -1;
        for (int reds = 0; reds <= total; ++reds) {
            if (ph.opt[nblocks][reds][ctx.k1p] >= ctx.k2p) {
                accept_reds = reds;
                break;
            }
        }
        if (accept_reds < 0) return std::nullopt;

        int reds = accept_reds;
        long long p = ctx.k1p;
        for (int t = nblocks; t >= 1; --t) {
            auto [nr, q] = ph.pick[t][reds][p];
            assert(nr >= 0);
            dps[t - 1].trace(nr, q, blocks[t - 1], ctx, colors);
            long long red_cross = static_cast<long long>(nr) * (reds - nr);
            p = saturate(p - q - red_cross);
            reds -= nr;
        }
        return finish(std::move(colors));
    }

    std::optional<Coloring> finish(std::vector<Color> colors) const {
        Coloring f{std::move(colors)};
        LoadCount lc = count_load(g, f);
        if (lc.red_edges < k1 || lc.blue_edges < k2)
            throw std::logic_error("solve_dist_cocluster: certificate failed verification");
#ifndef NDEBUG
        long long bichromatic = 0;
        for (auto [u, v] : g.edges())
            if (f.at(u) != f.at(v)) ++bichromatic;
        assert(lc.red_edges + lc.blue_edges + bichromatic == g.m());
#endif
        return f;
    }
};

std::vector<std::vector<Vertex>> cocluster_blocks(const Graph& g, const std::vector<Vertex>& xs) {
    auto rest = fpt::rest_vertices(g, xs);
    auto sub = induced_subgraph(g, rest);
    std::vector<std::vector<Vertex>> blocks;
    for (const auto& comp : components(complement(sub.graph))) {
        std::vector<Vertex> orig;
        orig.reserve(comp.size());
        for (Vertex v : comp) orig.push_back(sub.vertices[v]);
        blocks.push_back(std::move(orig));
    }
    return blocks;
}

}  // namespace

std::optional<Coloring> solve_dist_cocluster(const Graph& g, const std::vector<Vertex>& x,
                                             long long k1, long long k2, int threads) {
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("solve_dist_cocluster: negative demand");
    std::vector<Vertex> xs = fpt::normalized_modulator(g, x);
    if (!verify_modulator(g, xs, GraphClass::cocluster))
        throw std::invalid_argument("solve_dist_cocluster: G - X is not a co-cluster graph");
    if (k1 > g.m() || k2 > g.m()) return std::nullopt;

    CoclusterSolver solver{g, xs, cocluster_blocks(g, xs), k1, k2};
    return fpt::scan_guesses(std::uint64_t{1} << xs.size(), threads,
                             [&](std::uint64_t bits) { return solver.try_guess(bits); });
}

namespace cocluster_detail {

Table3 phase2_table(const Graph& g, const std::vector<Vertex>& x, const std::vector<Color>& h,
                    long long q_cap) {
    XContext ctx = fpt::make_context(g, x, h, q_cap, 0);
    // make_context saturates k1p at k1 - internal_red; for the raw table we
    // want exactly q_cap as the demand dimension
    ctx.k1p = q_cap;
    CoclusterSolver solver{g, x, cocluster_blocks(g, x), q_cap, 0};
    std::vector<fpt::VertexDp> dps;
    for (const auto& blk : solver.blocks) dps.emplace_back(blk, ctx, ctx.k1p);
    return solver.run_phase2(ctx, dps).opt;
}

}  // namespace cocluster_detail

}  // namespace loadcolor
