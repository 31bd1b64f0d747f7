#ifndef LOADCOLOR_ORACLE_HPP
#define LOADCOLOR_ORACLE_HPP

#include <optional>
#include <vector>

#include "loadcolor/graph.hpp"

namespace loadcolor {
namespace oracle {

inline constexpr int kDefaultSizeCap = 24;

struct ParetoPoint {
    long long red = 0;
    long long blue = 0;
    friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

/// Exhaustive search over all 2^n colorings; first feasible coloring in the
/// fixed sweep order, or nullopt. Throws if n exceeds the cap.
std::optional<Coloring> solve_exact(const Instance& inst, int size_cap = kDefaultSizeCap);

/// max over colorings of min(red, blue).
long long mu(const Graph& g, int size_cap = kDefaultSizeCap);

/// m - mu(g).
long long ell(const Graph& g, int size_cap = kDefaultSizeCap);

/// Maximal achievable (red, blue) pairs, red ascending. An instance
/// (g, k1, k2) is feasible iff some point dominates (k1, k2).
std::vector<ParetoPoint> pareto(const Graph& g, int size_cap = kDefaultSizeCap);

struct ParetoFront {
    std::vector<ParetoPoint> points;
    std::vector<Coloring> witnesses;  // witnesses[i] attains points[i]

    bool dominates(long long k1, long long k2) const;
    /// Witness for a dominating point, or nullopt.
    std::optional<Coloring> witness_for(long long k1, long long k2) const;
};

ParetoFront pareto_with_witnesses(const Graph& g, int size_cap = kDefaultSizeCap);

}  // namespace oracle
}  // namespace loadcolor

#endif
