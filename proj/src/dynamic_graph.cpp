#include "dbgp/dynamic_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dbgp/format.hpp"

namespace dbgp {

Edge make_edge(int u, int v) {
    return u <= v ? Edge{u, v} : Edge{v, u};
}

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool edge_subset(const EdgeSet& a, const EdgeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<double> DynamicBayesianGraph::critical_times() const {
    std::vector<double> out;
    out.reserve(critical_slices.size());
    for (int k : critical_slices) out.push_back(k * delta_t);
    return out;
}

EdgeSet DynamicBayesianGraph::critical_edges(int k) const {
    return edge_union(slice_edges[k - 1], slice_edges[k]);
}

DynamicBayesianGraph build_dbg(const std::vector<std::string>& labels,
                               const StrengthTable& table, double eta, double delta_t) {
    if (!(delta_t > 0.0)) throw std::invalid_argument("build_dbg: delta_t must be positive");
    DynamicBayesianGraph dbg;
    dbg.labels = labels;
    dbg.delta_t = delta_t;
    dbg.eta = eta;
    dbg.slice_edges.resize(table.slice_count());
    for (int k = 0; k < table.slice_count(); ++k) {
        EdgeSet edges;
        for (size_t e = 0; e < table.edges.size(); ++e)
            if (table.entries[k][e] > eta)
                edges.push_back(make_edge(table.edges[e].first, table.edges[e].second));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        dbg.slice_edges[k] = std::move(edges);
    }
    for (int k = 1; k <= dbg.horizon(); ++k)
        if (dbg.slice_edges[k - 1] != dbg.slice_edges[k]) dbg.critical_slices.push_back(k);
    return dbg;
}

PiecewiseDynamicGraph to_piecewise(const DynamicBayesianGraph& dbg) {
    PiecewiseDynamicGraph g;
    g.labels = dbg.labels;
    g.t_end = dbg.t_end();
    int prev = 0;
    for (int k : dbg.critical_slices) {
        g.crit_times.push_back(k * dbg.delta_t);
        g.interval_edges.push_back(dbg.slice_edges[prev]); // slices prev..k-1 agree
        g.crit_edges.push_back(dbg.critical_edges(k));
        prev = k;
    }
    g.interval_edges.push_back(dbg.slice_edges[prev]);
    return g;
}

ExplicitDynamicGraph explicit_view(const PiecewiseDynamicGraph& g) {
    ExplicitDynamicGraph e;
    e.labels = g.labels;
    e.t_end = g.t_end;
    e.crit_times = g.crit_times;
    EdgeSet loops;
    for (int x = 0; x < g.var_count(); ++x) loops.emplace_back(x, x);
    auto with_loops = [&](const EdgeSet& s) { return edge_union(s, loops); };
    for (const auto& s : g.interval_edges) e.interval_edges.push_back(with_loops(s));
    for (const auto& s : g.crit_edges) e.crit_edges.push_back(with_loops(s));
    return e;
}

EdgeSet snapshot(const DynamicBayesianGraph& dbg, double t) {
    if (t < 0.0 || t > dbg.t_end()) throw std::out_of_range("snapshot: t outside [0, t_end]");
    const int K = dbg.horizon();
    int near = static_cast<int>(std::llround(t / dbg.delta_t));
    if (near >= 1 && near <= K && t == near * dbg.delta_t) return dbg.critical_edges(near);
    int k = std::clamp(static_cast<int>(std::floor(t / dbg.delta_t)), 0, K);
    return dbg.slice_edges[k];
}

EdgeSet snapshot(const PiecewiseDynamicGraph& g, double t) {
    if (t < 0.0 || t > g.t_end) throw std::out_of_range("snapshot: t outside [0, t_end]");
    auto it = std::lower_bound(g.crit_times.begin(), g.crit_times.end(), t);
    size_t i = static_cast<size_t>(it - g.crit_times.begin());
    if (it != g.crit_times.end() && *it == t) return g.crit_edges[i];
    return g.interval_edges[i];
}

namespace {

// Union of all snapshots over [t-eps, t+eps] clipped to [0, t_end]: an
// interval piece contributes iff the window meets its interior, a critical
// time iff it lies in the closed window.
EdgeSet window_union(const PiecewiseDynamicGraph& g, double t, double eps) {
    const double lo = t - eps, hi = t + eps;
    EdgeSet acc;
    const size_t m = g.crit_times.size();
    for (size_t i = 0; i <= m; ++i) {
        double l = i == 0 ? 0.0 : g.crit_times[i - 1];
        double r = i == m ? g.t_end : g.crit_times[i];
        bool meets = l < hi && lo < r;
        if (i == 0 && hi >= 0.0 && lo <= 0.0) meets = true;          // window touches t = 0
        if (i == m && hi >= g.t_end && lo <= g.t_end) meets = true;  // window touches t_end
        if (meets) acc = edge_union(acc, g.interval_edges[i]);
    }
    for (size_t i = 0; i < m; ++i)
        if (lo <= g.crit_times[i] && g.crit_times[i] <= hi)
            acc = edge_union(acc, g.crit_edges[i]);
    return acc;
}

} // namespace

PiecewiseDynamicGraph smooth_dbg(const PiecewiseDynamicGraph& g, double eps) {
    if (eps < 0.0) throw std::invalid_argument("smooth_dbg: eps must be nonnegative");

    std::vector<double> cand;
    for (double c : g.crit_times) {
        if (c - eps > 0.0 && c - eps < g.t_end) cand.push_back(c - eps);
        if (c + eps > 0.0 && c + eps < g.t_end) cand.push_back(c + eps);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    // Values at candidate criticals and on the intervals between them.
    std::vector<EdgeSet> at_cand, between;
    for (double c : cand) at_cand.push_back(window_union(g, c, eps));
    for (size_t i = 0; i <= cand.size(); ++i) {
        double l = i == 0 ? 0.0 : cand[i - 1];
        double r = i == cand.size() ? g.t_end : cand[i];
        between.push_back(window_union(g, 0.5 * (l + r), eps));
    }

    PiecewiseDynamicGraph out;
    out.labels = g.labels;
    out.t_end = g.t_end;
    out.interval_edges.push_back(between[0]);
    for (size_t i = 0; i < cand.size(); ++i) {
        if (between[i] == at_cand[i] && at_cand[i] == between[i + 1]) continue; // not a real change
        out.crit_times.push_back(cand[i]);
        out.crit_edges.push_back(at_cand[i]);
        out.interval_edges.push_back(between[i + 1]);
    }
    return out;
}

PiecewiseDynamicGraph smooth_dbg(const DynamicBayesianGraph& dbg, double eps) {
    return smooth_dbg(to_piecewise(dbg), eps);
}

std::vector<std::string> check_dg_axioms(const ExplicitDynamicGraph& g) {
    std::vector<std::string> v;
    const size_t m = g.crit_times.size();
    if (g.interval_edges.size() != m + 1 || g.crit_edges.size() != m) {
        v.push_back("piece counts inconsistent with critical time count");
        return v;
    }
    for (size_t i = 0; i < m; ++i) {
        if (g.crit_times[i] <= 0.0 || g.crit_times[i] >= g.t_end)
            v.push_back("critical time " + fmt_real(g.crit_times[i]) + " outside (0, t_end)");
        if (i + 1 < m && !(g.crit_times[i] < g.crit_times[i + 1]))
            v.push_back("critical times not strictly increasing");
    }

    auto check_loops = [&](const EdgeSet& edges, const std::string& where) {
        for (int x = 0; x < g.var_count(); ++x)
            if (!std::binary_search(edges.begin(), edges.end(), Edge{x, x}))
                v.push_back("missing self-loop on " + g.labels[x] + " " + where);
    };
    for (size_t i = 0; i < g.interval_edges.size(); ++i)
        check_loops(g.interval_edges[i], "in interval " + std::to_string(i));
    for (size_t i = 0; i < m; ++i)
        check_loops(g.crit_edges[i], "at critical time " + fmt_real(g.crit_times[i]));

    for (size_t i = 0; i < m; ++i) {
        if (!edge_subset(g.interval_edges[i], g.crit_edges[i]))
            v.push_back("comparability violated from the left at t = " + fmt_real(g.crit_times[i]));
        if (!edge_subset(g.interval_edges[i + 1], g.crit_edges[i]))
            v.push_back("comparability violated from the right at t = " + fmt_real(g.crit_times[i]));
    }
    return v;
}

std::vector<std::string> check_dg_axioms(const PiecewiseDynamicGraph& g) {
    return check_dg_axioms(explicit_view(g));
}

std::vector<std::string> check_dg_axioms(const DynamicBayesianGraph& dbg) {
    return check_dg_axioms(to_piecewise(dbg));
}

std::string serialize_dbg(const DynamicBayesianGraph& dbg) {
    auto edges_json = [&](const EdgeSet& edges) {
        std::vector<std::pair<std::string, std::string>> named;
        for (auto [u, v] : edges) {
            std::string a = dbg.labels[u], b = dbg.labels[v];
            if (b < a) std::swap(a, b);
            named.emplace_back(a, b);
        }
        std::sort(named.begin(), named.end());
        std::string s = "[";
        for (size_t i = 0; i < named.size(); ++i) {
            if (i) s += ", ";
            s += "[" + json_quote(named[i].first) + ", " + json_quote(named[i].second) + "]";
        }
        return s + "]";
    };
    std::string out = "{\"delta_t\": " + json_real(dbg.delta_t) + ", \"eta\": " + json_real(dbg.eta) +
                      ", \"slices\": [";
    for (size_t k = 0; k < dbg.slice_edges.size(); ++k) {
        if (k) out += ", ";
        out += edges_json(dbg.slice_edges[k]);
    }
    out += "], \"critical_times\": [";
    auto times = dbg.critical_times();
    for (size_t i = 0; i < times.size(); ++i) {
        if (i) out += ", ";
        out += json_real(times[i]);
    }
    out += "]}\n";
    return out;
}

} // namespace dbgp
