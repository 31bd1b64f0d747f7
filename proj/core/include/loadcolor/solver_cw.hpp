#ifndef LOADCOLOR_SOLVER_CW_HPP
#define LOADCOLOR_SOLVER_CW_HPP

#include <map>
#include <optional>
#include <vector>

#include "loadcolor/cwexpr.hpp"
#include "loadcolor/graph.hpp"

namespace loadcolor {

/// Bottom-up DP tables over a nice expression for one red demand k1.
///
/// A state at a node is (n_{l,r}, n_{l,b}) for each label l alive at that
/// node plus a saturated residual red demand q in [0, k1]; its value is the
/// maximum number of blue edges (absent = infeasible). Red edge production
/// subtracts from q and clamps at zero, so "at least k1 red edges overall"
/// becomes "some root state with q = k1".
class CwDp {
public:
    /// Runs the DP. Throws std::invalid_argument if the expression is not
    /// nice or k1 is negative.
    CwDp(const CwExpr& e, long long k1);

    const LabeledGraph& graph() const { return graph_; }
    long long k1() const { return k1_; }

    /// Max blue edges over colorings with at least k1 red edges.
    std::optional<long long> max_blue() const;

    /// Traceback coloring with >= k1 red and >= k2 blue edges, preferring
    /// the lexicographically smallest split at every node.
    std::optional<Coloring> extract(long long k2) const;

    // Introspection used by the test suites.
    using StateKey = std::vector<int>;  // [n_{l,r}, n_{l,b}, ..., q], labels ascending
    using Table = std::map<StateKey, long long>;
    int node_count() const { return static_cast<int>(tables_.size()); }
    const Table& table(int node) const { return tables_[node]; }
    const std::vector<int>& live_labels(int node) const { return live_[node]; }

private:
    void compute(int node);
    void trace(int node, const StateKey& key, long long value, std::vector<Color>& colors) const;

    CwExpr expr_;
    LabeledGraph graph_;
    long long k1_ = 0;
    std::vector<Table> tables_;
    std::vector<std::vector<int>> live_;
    std::vector<int> intro_vid_;  // node id -> vertex id (-1 for non-intro)
};

/// Feasible coloring of the evaluated graph, or nullopt. Requires a nice
/// expression; demands exceeding the edge count are infeasible without
/// running the DP.
std::optional<Coloring> solve_cw(const CwExpr& e, long long k1, long long k2);

}  // namespace loadcolor

#endif
