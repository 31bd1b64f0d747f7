#include "loadcolor/cwexpr.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace loadcolor {

namespace {

void require_label(int l) {
    if (l < 1) throw std::invalid_argument("cwexpr: labels must be positive");
}

void require_distinct(int i, int j, const char* op) {
    if (i == j)
        throw std::invalid_argument(std::string("cwexpr: ") + op + " requires distinct labels, got " +
                                    std::to_string(i) + "," + std::to_string(j));
}

}  // namespace

CwExpr CwExpr::intro(std::string name, int label) {
    require_label(label);
    if (name.empty()) throw std::invalid_argument("cwexpr: empty vertex name");
    CwExpr e;
    e.nodes_.push_back({ExprKind::intro, label, 0, name, -1, -1});
    e.root_ = 0;
    e.sorted_names_.push_back(std::move(name));
    return e;
}

CwExpr CwExpr::unite(CwExpr left, CwExpr right) {
    CwExpr e = std::move(left);
    int offset = e.node_count();
    for (ExprNode n : right.nodes_) {
        if (n.child0 >= 0) n.child0 += offset;
        if (n.child1 >= 0) n.child1 += offset;
        e.nodes_.push_back(std::move(n));
    }
    int left_root = e.root_;
    e.nodes_.push_back({ExprKind::disjoint_union, 0, 0, "", left_root, right.root_ + offset});
    e.root_ = e.node_count() - 1;
    std::vector<std::string> merged;
    merged.reserve(e.sorted_names_.size() + right.sorted_names_.size());
    std::merge(e.sorted_names_.begin(), e.sorted_names_.end(), right.sorted_names_.begin(),
               right.sorted_names_.end(), std::back_inserter(merged));
    auto dup = std::adjacent_find(merged.begin(), merged.end());
    if (dup != merged.end())
        throw std::invalid_argument("cwexpr: duplicate vertex name '" + *dup + "'");
    e.sorted_names_ = std::move(merged);
    return e;
}

CwExpr CwExpr::eta(int i, int j, CwExpr child) {
    require_label(i);
    require_label(j);
    require_distinct(i, j, "eta");
    CwExpr e = std::move(child);
    e.nodes_.push_back({ExprKind::eta, i, j, "", e.root_, -1});
    e.root_ = e.node_count() - 1;
    return e;
}

CwExpr CwExpr::rho(int from, int to, CwExpr child) {
    require_label(from);
    require_label(to);
    require_distinct(from, to, "rho");
    CwExpr e = std::move(child);
    e.nodes_.push_back({ExprKind::rho, from, to, "", e.root_, -1});
    e.root_ = e.node_count() - 1;
    return e;
}

int CwExpr::vertex_count() const { return static_cast<int>(sorted_names_.size()); }

// ---------------------------------------------------------------------------
// parsing

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    CwExpr parse() {
        CwExpr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    std::set<std::string> names_;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("expr:" + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        size_t start = pos_;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos_ >= text_.size() || !head(text_[pos_])) fail("expected identifier");
        ++pos_;
        while (pos_ < text_.size() && tail(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        long long v = 0;
        for (size_t i = start; i < pos_; ++i) {
            v = v * 10 + (text_[i] - '0');
            if (v > 1'000'000) fail("label too large");
        }
        if (v < 1) fail("labels must be positive");
        return static_cast<int>(v);
    }

    CwExpr parse_sum() {
        CwExpr e = parse_term();
        while (eat('+')) e = CwExpr::unite(std::move(e), parse_term());
        return e;
    }

    CwExpr parse_term() {
        skip_ws();
        if (eat('(')) {
            CwExpr e = parse_sum();
            expect(')');
            return e;
        }
        std::string kw = ident();
        if (kw == "v") {
            expect('(');
            std::string name = ident();
            if (!names_.insert(name).second) fail("duplicate vertex name '" + name + "'");
            expect(',');
            int label = integer();
            expect(')');
            return CwExpr::intro(std::move(name), label);
        }
        if (kw == "eta") {
            expect('(');
            int i = integer();
            expect(',');
            int j = integer();
            if (i == j) fail("eta requires distinct labels");
            expect(')');
            expect('{');
            CwExpr child = parse_sum();
            expect('}');
            return CwExpr::eta(i, j, std::move(child));
        }
        if (kw == "rho") {
            expect('(');
            int i = integer();
            expect('-');
            expect('>');
            int j = integer();
            if (i == j) fail("rho requires distinct labels");
            expect(')');
            expect('{');
            CwExpr child = parse_sum();
            expect('}');
            return CwExpr::rho(i, j, std::move(child));
        }
        fail("expected 'v', 'eta', 'rho' or '('");
    }
};

}  // namespace

CwExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

CwExpr parse_expr(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    return parse_expr(std::string_view(text));
}

namespace {

void render_node(const CwExpr& e, int id, std::string& out) {
    const ExprNode& n = e.node(id);
    switch (n.kind) {
        case ExprKind::intro:
            out += "v(" + n.name + "," + std::to_string(n.label_a) + ")";
            break;
        case ExprKind::disjoint_union:
            out += "(";
            render_node(e, n.child0, out);
            out += " + ";
            render_node(e, n.child1, out);
            out += ")";
            break;
        case ExprKind::eta:
            out += "eta(" + std::to_string(n.label_a) + "," + std::to_string(n.label_b) + "){";
            render_node(e, n.child0, out);
            out += "}";
            break;
        case ExprKind::rho:
            out += "rho(" + std::to_string(n.label_a) + "->" + std::to_string(n.label_b) + "){";
            render_node(e, n.child0, out);
            out += "}";
            break;
    }
}

}  // namespace

std::string render_expr(const CwExpr& e) {
    std::string out;
    render_node(e, e.root(), out);
    return out;
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

struct EvalState {
    const CwExpr* expr;
    std::vector<int> labels;               // by vertex id
    std::vector<std::string> names;        // by vertex id
    std::set<Edge> edges;
    std::vector<NicenessViolation> violations;
    long long eta_pairs = 0;
    std::map<int, int> preorder;           // node id -> preorder index

    // Returns the contiguous vertex id range [lo, hi) of the subtree.
    std::pair<int, int> eval(int id) {
        const ExprNode& n = expr->node(id);
        switch (n.kind) {
            case ExprKind::intro: {
                int vid = static_cast<int>(labels.size());
                labels.push_back(n.label_a);
                names.push_back(n.name);
                return {vid, vid + 1};
            }
            case ExprKind::disjoint_union: {
                auto [llo, lhi] = eval(n.child0);
                auto [rlo, rhi] = eval(n.child1);
                (void)lhi;
                (void)rlo;
                return {llo, rhi};
            }
            case ExprKind::rho: {
                auto [lo, hi] = eval(n.child0);
                for (int v = lo; v < hi; ++v)
                    if (labels[v] == n.label_a) labels[v] = n.label_b;
                return {lo, hi};
            }
            case ExprKind::eta: {
                auto [lo, hi] = eval(n.child0);
                std::vector<int> li, lj;
                for (int v = lo; v < hi; ++v) {
                    if (labels[v] == n.label_a) li.push_back(v);
                    if (labels[v] == n.label_b) lj.push_back(v);
                }
                eta_pairs += static_cast<long long>(li.size()) * static_cast<long long>(lj.size());
                bool reported = false;
                for (int u : li)
                    for (int v : lj) {
                        Edge e{std::min(u, v), std::max(u, v)};
                        if (!edges.insert(e).second && !reported) {
                            violations.push_back({preorder.at(id), names[e.first], names[e.second]});
                            reported = true;
                        }
                    }
                return {lo, hi};
            }
        }
        throw std::logic_error("cwexpr: bad node kind");
    }
};

void number_preorder(const CwExpr& e, int id, int& next, std::map<int, int>& out) {
    out[id] = next++;
    const ExprNode& n = e.node(id);
    if (n.child0 >= 0) number_preorder(e, n.child0, next, out);
    if (n.child1 >= 0) number_preorder(e, n.child1, next, out);
}

ExprAnalysis run_eval(const CwExpr& e) {
    if (e.root() < 0) throw std::invalid_argument("cwexpr: empty expression");
    EvalState st;
    st.expr = &e;
    int next = 0;
    number_preorder(e, e.root(), next, st.preorder);
    st.eval(e.root());
    ExprAnalysis out;
    out.value.graph = Graph(static_cast<int>(st.labels.size()),
                            std::vector<Edge>(st.edges.begin(), st.edges.end()));
    out.value.labels = std::move(st.labels);
    out.value.names = std::move(st.names);
    out.violations = std::move(st.violations);
    out.eta_pair_count = st.eta_pairs;
    return out;
}

}  // namespace

ExprAnalysis analyze_expr(const CwExpr& e) { return run_eval(e); }

LabeledGraph evaluate(const CwExpr& e) { return run_eval(e).value; }

std::vector<NicenessViolation> check_nice(const CwExpr& e) { return run_eval(e).violations; }

int width(const CwExpr& e) {
    int w = 0;
    for (int i = 0; i < e.node_count(); ++i) {
        const ExprNode& n = e.node(i);
        w = std::max(w, std::max(n.label_a, n.label_b));
    }
    return w;
}

// ---------------------------------------------------------------------------
// builders; all stay within labels {1, 2}

namespace {

std::string vname(int i) { return "v" + std::to_string(i); }

// Attach a vertex at label 2, connect it to everything at label 1, merge.
CwExpr absorb_universal(CwExpr e, const std::string& name) {
    return CwExpr::rho(2, 1, CwExpr::eta(1, 2, CwExpr::unite(std::move(e), CwExpr::intro(name, 2))));
}

}  // namespace

CwExpr clique_expr(int n) {
    if (n < 1) throw std::invalid_argument("clique_expr: need n >= 1");
    CwExpr e = CwExpr::intro(vname(0), 1);
    for (int t = 1; t < n; ++t) e = absorb_universal(std::move(e), vname(t));
    return e;
}

CwExpr complete_bipartite_expr(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite_expr: need sides >= 1");
    CwExpr left = CwExpr::intro(vname(0), 1);
    for (int t = 1; t < a; ++t) left = CwExpr::unite(std::move(left), CwExpr::intro(vname(t), 1));
    CwExpr right = CwExpr::intro(vname(a), 2);
    for (int t = 1; t < b; ++t)
        right = CwExpr::unite(std::move(right), CwExpr::intro(vname(a + t), 2));
    return CwExpr::eta(1, 2, CwExpr::unite(std::move(left), std::move(right)));
}

CwExpr cluster_expr(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("cluster_expr: empty size list");
    CwExpr e;
    int next = 0;
    bool first = true;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("cluster_expr: sizes must be positive");
        CwExpr clique = CwExpr::intro(vname(next++), 1);
        for (int t = 1; t < s; ++t) clique = absorb_universal(std::move(clique), vname(next++));
        e = first ? std::move(clique) : CwExpr::unite(std::move(e), std::move(clique));
        first = false;
    }
    return e;
}

CwExpr cocluster_expr(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("cocluster_expr: empty size list");
    CwExpr e;
    int next = 0;
    bool first = true;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("cocluster_expr: sizes must be positive");
        int part_label = first ? 1 : 2;
        CwExpr part = CwExpr::intro(vname(next++), part_label);
        for (int t = 1; t < s; ++t)
            part = CwExpr::unite(std::move(part), CwExpr::intro(vname(next++), part_label));
        if (first) {
            e = std::move(part);
            first = false;
        } else {
            e = CwExpr::rho(2, 1, CwExpr::eta(1, 2, CwExpr::unite(std::move(e), std::move(part))));
        }
    }
    return e;
}

CwExpr threshold_expr(const std::vector<ThresholdTag>& creation) {
    if (creation.empty()) throw std::invalid_argument("threshold_expr: empty creation sequence");
    CwExpr e = CwExpr::intro(vname(0), 1);
    for (size_t t = 1; t < creation.size(); ++t) {
        if (creation[t] == ThresholdTag::universal)
            e = absorb_universal(std::move(e), vname(static_cast<int>(t)));
        else
            e = CwExpr::unite(std::move(e), CwExpr::intro(vname(static_cast<int>(t)), 1));
    }
    return e;
}

namespace {

CwExpr rename_with_suffix(const CwExpr& e, const std::string& suffix) {
    // Rebuild bottom-up so arena invariants stay intact.
    std::vector<CwExpr> built(e.node_count());
    // children always precede parents in the arena by construction
    for (int id = 0; id < e.node_count(); ++id) {
        const ExprNode& n = e.node(id);
        switch (n.kind) {
            case ExprKind::intro:
                built[id] = CwExpr::intro(n.name + suffix, n.label_a);
                break;
            case ExprKind::disjoint_union:
                built[id] = CwExpr::unite(std::move(built[n.child0]), std::move(built[n.child1]));
                break;
            case ExprKind::eta:
                built[id] = CwExpr::eta(n.label_a, n.label_b, std::move(built[n.child0]));
                break;
            case ExprKind::rho:
                built[id] = CwExpr::rho(n.label_a, n.label_b, std::move(built[n.child0]));
                break;
        }
    }
    return std::move(built[e.root()]);
}

}  // namespace

CwExpr lift_join(const CwExpr& e, int w) {
    if (w < width(e))
        throw std::invalid_argument("lift_join: w smaller than the expression width");
    std::set<int> live;
    for (int l : evaluate(e).labels) live.insert(l);
    CwExpr copy1 = rename_with_suffix(e, "_1");
    for (int l : live) copy1 = CwExpr::rho(l, w + 1, std::move(copy1));
    CwExpr copy2 = rename_with_suffix(e, "_2");
    for (int l : live)
        if (l != 1) copy2 = CwExpr::rho(l, 1, std::move(copy2));
    return CwExpr::eta(w + 1, 1, CwExpr::unite(std::move(copy1), std::move(copy2)));
}

}  // namespace loadcolor
