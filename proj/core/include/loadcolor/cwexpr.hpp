#ifndef LOADCOLOR_CWEXPR_HPP
#define LOADCOLOR_CWEXPR_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "loadcolor/graph.hpp"

namespace loadcolor {

enum class ExprKind : unsigned char { intro, disjoint_union, eta, rho };

struct ExprNode {
    ExprKind kind;
    int label_a = 0;   // intro label; eta first label; rho source label
    int label_b = 0;   // eta second label; rho target label
    std::string name;  // intro vertex name
    int child0 = -1;
    int child1 = -1;
};

/// Clique-width expression over the four operations: vertex introduction,
/// disjoint union, eta (edge insertion between two labels) and rho (label
/// renaming). Vertex names are unique across the expression; labels are
/// arbitrary positive integers.
class CwExpr {
public:
    static CwExpr intro(std::string name, int label);
    static CwExpr unite(CwExpr left, CwExpr right);
    static CwExpr eta(int i, int j, CwExpr child);
    static CwExpr rho(int from, int to, CwExpr child);

    int root() const { return root_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const ExprNode& node(int id) const { return nodes_[id]; }
    int vertex_count() const;

private:
    std::vector<ExprNode> nodes_;
    std::vector<std::string> sorted_names_;
    int root_ = -1;
};

/// Evaluated expression: the graph plus the final label of every vertex.
/// Vertex ids follow the order of vertex introductions in the expression
/// (left to right).
struct LabeledGraph {
    Graph graph;
    std::vector<int> labels;
    std::vector<std::string> names;
};

struct NicenessViolation {
    int eta_preorder;  // preorder index of the offending eta node, root = 0
    std::string u, v;  // one pair that was already adjacent
};

struct ExprAnalysis {
    LabeledGraph value;
    std::vector<NicenessViolation> violations;
    long long eta_pair_count = 0;  // label-pair products summed over all etas
};

/// Grammar (whitespace-insensitive):
///   expr  := term ("+" term)*
///   term  := "v(" NAME "," INT ")" | "eta(" INT "," INT "){" expr "}"
///          | "rho(" INT "->" INT "){" expr "}" | "(" expr ")"
/// Unparenthesized sums are accepted anywhere and fold left.
CwExpr parse_expr(std::string_view text);
CwExpr parse_expr(std::istream& in);
std::string render_expr(const CwExpr& e);

LabeledGraph evaluate(const CwExpr& e);
std::vector<NicenessViolation> check_nice(const CwExpr& e);
ExprAnalysis analyze_expr(const CwExpr& e);

/// Maximum label appearing anywhere in the expression.
int width(const CwExpr& e);

CwExpr clique_expr(int n);
CwExpr complete_bipartite_expr(int a, int b);
CwExpr cluster_expr(const std::vector<int>& sizes);
CwExpr cocluster_expr(const std::vector<int>& sizes);

enum class ThresholdTag : unsigned char { isolated, universal };
CwExpr threshold_expr(const std::vector<ThresholdTag>& creation);

/// Two disjoint copies of G_e joined by all cross edges, as a nice
/// (w+1)-expression: copy one relabeled to w+1, copy two to 1, then
/// eta(w+1, 1). Vertex names gain "_1"/"_2" suffixes.
CwExpr lift_join(const CwExpr& e, int w);

}  // namespace loadcolor

#endif
