#include "loadcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace loadcolor {
namespace oracle {

namespace {

void check_cap(const Graph& g, int size_cap) {
    if (size_cap < 0 || size_cap > 62) throw std::invalid_argument("oracle: bad size cap");
    if (g.n() > size_cap)
        throw std::invalid_argument("oracle: instance has " + std::to_string(g.n()) +
                                    " vertices, cap is " + std::to_string(size_cap));
}

Coloring from_mask(const Graph& g, std::uint64_t mask) {
    Coloring f;
    f.colors.resize(g.n());
    for (int v = 0; v < g.n(); ++v)
        f.colors[v] = (mask >> v) & 1 ? Color::red : Color::blue;
    return f;
}

// Visits all 2^n colorings in Gray-code order with O(deg) load updates.
// visit(mask, red, blue) returning true stops the sweep.
template <typename Visit>
void sweep(const Graph& g, Visit visit) {
    const int n = g.n();
    std::vector<char> red(n, 0);  // start all blue
    long long r = 0, b = g.m();
    std::uint64_t mask = 0;
    if (visit(mask, r, b)) return;
    const std::uint64_t total = n >= 63 ? 0 : (std::uint64_t{1} << n);
    for (std::uint64_t i = 1; i < total; ++i) {
        int v = std::countr_zero(i);
        mask ^= std::uint64_t{1} << v;
        bool now_red = !red[v];
        for (Vertex w : g.neighbors(v)) {
            if (red[w] == red[v]) {
                // edge was monochromatic, becomes bichromatic
                if (red[v])
                    --r;
                else
                    --b;
            } else {
                if (now_red)
                    ++r;
                else
                    ++b;
            }
        }
        red[v] = now_red;
        if (visit(mask, r, b)) return;
    }
}

struct Profile {
    // best_blue[r] = max blue over colorings with exactly r red edges, -1 if none
    std::vector<long long> best_blue;
    std::vector<std::uint64_t> witness;

    explicit Profile(const Graph& g, int size_cap) {
        check_cap(g, size_cap);
        best_blue.assign(g.m() + 1, -1);
        witness.assign(g.m() + 1, 0);
        sweep(g, [&](std::uint64_t mask, long long r, long long b) {
            if (b > best_blue[r]) {
                best_blue[r] = b;
                witness[r] = mask;
            }
            return false;
        });
    }
};

}  // namespace

std::optional<Coloring> solve_exact(const Instance& inst, int size_cap) {
    check_cap(inst.graph, size_cap);
    if (inst.k1 < 0 || inst.k2 < 0) throw std::invalid_argument("oracle: negative demand");
    std::optional<std::uint64_t> hit;
    sweep(inst.graph, [&](std::uint64_t mask, long long r, long long b) {
        if (r >= inst.k1 && b >= inst.k2) {
            hit = mask;
            return true;
        }
        return false;
    });
    if (!hit) return std::nullopt;
    return from_mask(inst.graph, *hit);
}

long long mu(const Graph& g, int size_cap) {
    Profile p(g, size_cap);
    long long best = 0;
    for (long long r = 0; r <= g.m(); ++r)
        if (p.best_blue[r] >= 0) best = std::max(best, std::min(r, p.best_blue[r]));
    return best;
}

long long ell(const Graph& g, int size_cap) { return g.m() - mu(g, size_cap); }

ParetoFront pareto_with_witnesses(const Graph& g, int size_cap) {
    Profile p(g, size_cap);
    ParetoFront front;
    long long suffix_best = -1;
    // a point (r, best_blue[r]) is maximal iff every larger r does worse on blue
    std::vector<int> keep;
    for (long long r = g.m(); r >= 0; --r) {
        if (p.best_blue[r] > suffix_best) {
            suffix_best = p.best_blue[r];
            keep.push_back(static_cast<int>(r));
        }
    }
    std::reverse(keep.begin(), keep.end());
    for (int r : keep) {
        front.points.push_back({r, p.best_blue[r]});
        front.witnesses.push_back(from_mask(g, p.witness[r]));
    }
    return front;
}

std::vector<ParetoPoint> pareto(const Graph& g, int size_cap) {
    return pareto_with_witnesses(g, size_cap).points;
}

bool ParetoFront::dominates(long long k1, long long k2) const {
    for (const auto& p : points)
        if (p.red >= k1 && p.blue >= k2) return true;
    return false;
}

std::optional<Coloring> ParetoFront::witness_for(long long k1, long long k2) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i].red >= k1 && points[i].blue >= k2) return witnesses[i];
    return std::nullopt;
}

}  // namespace oracle
}  // namespace loadcolor
