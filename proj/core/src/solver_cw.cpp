#include "loadcolor/solver_cw.hpp"

#include <algorithm>
#include <stdexcept>

namespace loadcolor {

namespace {

int index_of(const std::vector<int>& live, int label) {
    auto it = std::lower_bound(live.begin(), live.end(), label);
    if (it == live.end() || *it != label) return -1;
    return static_cast<int>(it - live.begin());
}

}  // namespace

CwDp::CwDp(const CwExpr& e, long long k1) : expr_(e), k1_(k1) {
    if (k1 < 0) throw std::invalid_argument("solve_cw: negative red demand");
    ExprAnalysis an = analyze_expr(expr_);
    if (!an.violations.empty()) {
        const auto& v = an.violations.front();
        throw std::invalid_argument("solve_cw: expression is not nice (eta#" +
                                    std::to_string(v.eta_preorder) + " reintroduces " + v.u + "-" +
                                    v.v + ")");
    }
    graph_ = std::move(an.value);

    tables_.resize(expr_.node_count());
    live_.resize(expr_.node_count());
    intro_vid_.assign(expr_.node_count(), -1);

    // vertex ids follow the in-order walk, matching evaluate()
    int next_vid = 0;
    std::vector<int> postorder;
    {
        // iterative DFS: first visit assigns intro ids, second emits postorder
        std::vector<std::pair<int, bool>> stack{{expr_.root(), false}};
        while (!stack.empty()) {
            auto [id, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                postorder.push_back(id);
                continue;
            }
            stack.emplace_back(id, true);
            const ExprNode& n = expr_.node(id);
            if (n.kind == ExprKind::intro) intro_vid_[id] = next_vid++;
            if (n.child1 >= 0) stack.emplace_back(n.child1, false);
            if (n.child0 >= 0) stack.emplace_back(n.child0, false);
        }
    }
    for (int id : postorder) compute(id);
}

void CwDp::compute(int id) {
    const ExprNode& n = expr_.node(id);
    Table& out = tables_[id];
    switch (n.kind) {
        case ExprKind::intro: {
            live_[id] = {n.label_a};
            out[{1, 0, 0}] = 0;
            out[{0, 1, 0}] = 0;
            return;
        }
        case ExprKind::rho: {
            const auto& cl = live_[n.child0];
            int pi = index_of(cl, n.label_a);
            if (pi < 0) {  // no vertex carries the source label: no-op
                live_[id] = cl;
                out = tables_[n.child0];
                return;
            }
            std::vector<int> live = cl;
            live.erase(live.begin() + pi);
            if (index_of(live, n.label_b) < 0) {
                live.insert(std::upper_bound(live.begin(), live.end(), n.label_b), n.label_b);
            }
            live_[id] = live;
            int pj = index_of(live, n.label_b);
            StateKey key(2 * live.size() + 1);
            for (const auto& [ck, cv] : tables_[n.child0]) {
                std::fill(key.begin(), key.end(), 0);
                for (size_t t = 0; t < cl.size(); ++t) {
                    int target = static_cast<int>(t) == pi ? pj : index_of(live, cl[t]);
                    key[2 * target] += ck[2 * t];
                    key[2 * target + 1] += ck[2 * t + 1];
                }
                key.back() = ck.back();
                auto [it, inserted] = out.try_emplace(key, cv);
                if (!inserted && cv > it->second) it->second = cv;
            }
            return;
        }
        case ExprKind::eta: {
            const auto& live = live_[n.child0];
            live_[id] = live;
            int pi = index_of(live, n.label_a);
            int pj = index_of(live, n.label_b);
            for (const auto& [ck, cv] : tables_[n.child0]) {
                long long nir = pi < 0 ? 0 : ck[2 * pi];
                long long nib = pi < 0 ? 0 : ck[2 * pi + 1];
                long long njr = pj < 0 ? 0 : ck[2 * pj];
                long long njb = pj < 0 ? 0 : ck[2 * pj + 1];
                long long produced_red = nir * njr;
                long long produced_blue = nib * njb;
                long long value = cv + produced_blue;
                StateKey key = ck;
                int qc = ck.back();
                if (qc == 0) {
                    long long hi = std::min(produced_red, k1_);
                    for (long long q = 0; q <= hi; ++q) {
                        key.back() = static_cast<int>(q);
                        auto [it, inserted] = out.try_emplace(key, value);
                        if (!inserted && value > it->second) it->second = value;
                    }
                } else if (qc + produced_red <= k1_) {
                    key.back() = static_cast<int>(qc + produced_red);
                    auto [it, inserted] = out.try_emplace(key, value);
                    if (!inserted && value > it->second) it->second = value;
                }
            }
            return;
        }
        case ExprKind::disjoint_union: {
            const auto& ll = live_[n.child0];
            const auto& rl = live_[n.child1];
            std::vector<int> live;
            std::set_union(ll.begin(), ll.end(), rl.begin(), rl.end(), std::back_inserter(live));
            live_[id] = live;
            std::vector<int> lpos(ll.size()), rpos(rl.size());
            for (size_t t = 0; t < ll.size(); ++t) lpos[t] = index_of(live, ll[t]);
            for (size_t t = 0; t < rl.size(); ++t) rpos[t] = index_of(live, rl[t]);
            StateKey key(2 * live.size() + 1);
            for (const auto& [lk, lv] : tables_[n.child0]) {
                for (const auto& [rk, rv] : tables_[n.child1]) {
                    long long q = static_cast<long long>(lk.back()) + rk.back();
                    if (q > k1_) continue;
                    std::fill(key.begin(), key.end(), 0);
                    for (size_t t = 0; t < ll.size(); ++t) {
                        key[2 * lpos[t]] += lk[2 * t];
                        key[2 * lpos[t] + 1] += lk[2 * t + 1];
                    }
                    for (size_t t = 0; t < rl.size(); ++t) {
                        key[2 * rpos[t]] += rk[2 * t];
                        key[2 * rpos[t] + 1] += rk[2 * t + 1];
                    }
                    key.back() = static_cast<int>(q);
                    long long value = lv + rv;
                    auto [it, inserted] = out.try_emplace(key, value);
                    if (!inserted && value > it->second) it->second = value;
                }
            }
            return;
        }
    }
    throw std::logic_error("solve_cw: bad node kind");
}

std::optional<long long> CwDp::max_blue() const {
    const Table& root = tables_[expr_.root()];
    std::optional<long long> best;
    for (const auto& [key, value] : root) {
        if (key.back() != k1_) continue;
        if (!best || value > *best) best = value;
    }
    return best;
}

void CwDp::trace(int id, const StateKey& key, long long value, std::vector<Color>& colors) const {
    const ExprNode& n = expr_.node(id);
    switch (n.kind) {
        case ExprKind::intro:
            colors[intro_vid_[id]] = key[0] == 1 ? Color::red : Color::blue;
            return;
        case ExprKind::eta: {
            const auto& live = live_[id];
            int pi = index_of(live, n.label_a);
            int pj = index_of(live, n.label_b);
            long long produced_red =
                (pi < 0 ? 0LL : key[2 * pi]) * (pj < 0 ? 0LL : key[2 * pj]);
            long long produced_blue =
                (pi < 0 ? 0LL : key[2 * pi + 1]) * (pj < 0 ? 0LL : key[2 * pj + 1]);
            StateKey ck = key;
            ck.back() = static_cast<int>(std::max<long long>(key.back() - produced_red, 0));
            trace(n.child0, ck, value - produced_blue, colors);
            return;
        }
        case ExprKind::rho: {
            const auto& cl = live_[n.child0];
            const auto& live = live_[id];
            int pi = index_of(cl, n.label_a);
            if (pi < 0) {
                trace(n.child0, key, value, colors);
                return;
            }
            int pj = index_of(live, n.label_b);
            for (const auto& [ck, cv] : tables_[n.child0]) {
                if (cv != value || ck.back() != key.back()) continue;
                bool match = true;
                StateKey projected(key.size(), 0);
                for (size_t t = 0; t < cl.size() && match; ++t) {
                    int target = static_cast<int>(t) == pi ? pj : index_of(live, cl[t]);
                    projected[2 * target] += ck[2 * t];
                    projected[2 * target + 1] += ck[2 * t + 1];
                }
                for (size_t t = 0; t + 1 < key.size() && match; ++t)
                    if (projected[t] != key[t]) match = false;
                if (!match) continue;
                trace(n.child0, ck, cv, colors);
                return;
            }
            throw std::logic_error("solve_cw: traceback failed at rho");
        }
        case ExprKind::disjoint_union: {
            const auto& ll = live_[n.child0];
            const auto& rl = live_[n.child1];
            const auto& live = live_[id];
            for (const auto& [lk, lv] : tables_[n.child0]) {
                long long rq = static_cast<long long>(key.back()) - lk.back();
                if (rq < 0) continue;
                // residual counts must be expressible over the right child's labels
                StateKey rk(2 * rl.size() + 1);
                bool ok = true;
                std::vector<int> residual(key.begin(), key.end() - 1);
                for (size_t t = 0; t < ll.size() && ok; ++t) {
                    int p = index_of(live, ll[t]);
                    residual[2 * p] -= lk[2 * t];
                    residual[2 * p + 1] -= lk[2 * t + 1];
                    if (residual[2 * p] < 0 || residual[2 * p + 1] < 0) ok = false;
                }
                if (!ok) continue;
                for (size_t t = 0; t < rl.size(); ++t) {
                    int p = index_of(live, rl[t]);
                    rk[2 * t] = residual[2 * p];
                    rk[2 * t + 1] = residual[2 * p + 1];
                    residual[2 * p] = 0;
                    residual[2 * p + 1] = 0;
                }
                for (int x : residual)
                    if (x != 0) ok = false;
                if (!ok) continue;
                rk.back() = static_cast<int>(rq);
                auto it = tables_[n.child1].find(rk);
                if (it == tables_[n.child1].end() || lv + it->second != value) continue;
                trace(n.child0, lk, lv, colors);
                trace(n.child1, rk, it->second, colors);
                return;
            }
            throw std::logic_error("solve_cw: traceback failed at union");
        }
    }
    throw std::logic_error("solve_cw: bad node kind");
}

std::optional<Coloring> CwDp::extract(long long k2) const {
    const Table& root = tables_[expr_.root()];
    for (const auto& [key, value] : root) {
        if (key.back() != k1_ || value < k2) continue;
        std::vector<Color> colors(graph_.graph.n(), Color::blue);
        trace(expr_.root(), key, value, colors);
        return Coloring{std::move(colors)};
    }
    return std::nullopt;
}

std::optional<Coloring> solve_cw(const CwExpr& e, long long k1, long long k2) {
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("solve_cw: negative demand");
    long long m = evaluate(e).graph.m();
    if (k1 > m || k2 > m) {
        if (!check_nice(e).empty())
            throw std::invalid_argument("solve_cw: expression is not nice");
        return std::nullopt;
    }
    CwDp dp(e, k1);
    auto result = dp.extract(k2);
    if (result) {
        LoadCount lc = count_load(dp.graph().graph, *result);
        if (lc.red_edges < k1 || lc.blue_edges < k2)
            throw std::logic_error("solve_cw: traceback certificate failed verification");
    }
    return result;
}

}  // namespace loadcolor
