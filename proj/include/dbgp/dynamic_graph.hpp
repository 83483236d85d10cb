#ifndef DBGP_DYNAMIC_GRAPH_HPP
#define DBGP_DYNAMIC_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "dbgp/edge_strength.hpp"

namespace dbgp {

// Undirected edge as a normalized index pair (first <= second). Self-loops
// are definitional for dynamic graphs and are kept implicit everywhere
// except in ExplicitDynamicGraph.
using Edge = std::pair<int, int>;
using EdgeSet = std::vector<Edge>; // sorted, unique

Edge make_edge(int u, int v);
EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b);
bool edge_subset(const EdgeSet& a, const EdgeSet& b);

// Dynamic Bayesian graph: fixed vertex set, piecewise-constant edge function
// over [0, (K+1)*delta_t]. Slice k's edges hold on the open interval
// (k*delta_t, (k+1)*delta_t); at a transition time k*delta_t the edge set is
// the union of the two adjacent slices (maximum convention). Only genuine
// transitions (differing adjacent slices) are recorded as critical.
struct DynamicBayesianGraph {
    std::vector<std::string> labels;
    double delta_t = 1.0;
    double eta = 0.0;
    std::vector<EdgeSet> slice_edges;  // size K+1
    std::vector<int> critical_slices;  // ascending k in 1..K with slice k-1 != k

    int var_count() const { return static_cast<int>(labels.size()); }
    int horizon() const { return static_cast<int>(slice_edges.size()) - 1; }
    double t_end() const { return static_cast<double>(slice_edges.size()) * delta_t; }
    std::vector<double> critical_times() const;
    EdgeSet critical_edges(int k) const; // union of slices k-1 and k
};

// General piecewise-constant dynamic graph over a fixed vertex set; the form
// smoothing produces. crit_times lie strictly inside (0, t_end);
// interval_edges[i] holds between consecutive critical times (domain ends
// included), crit_edges[i] at crit_times[i].
struct PiecewiseDynamicGraph {
    std::vector<std::string> labels;
    double t_end = 0.0;
    std::vector<double> crit_times;
    std::vector<EdgeSet> interval_edges; // size crit_times.size() + 1
    std::vector<EdgeSet> crit_edges;     // size crit_times.size()

    int var_count() const { return static_cast<int>(labels.size()); }
};

// Low-level view with self-loops materialized; what the axiom checker
// consumes and what tests mutate to build violating graphs.
struct ExplicitDynamicGraph {
    std::vector<std::string> labels;
    double t_end = 0.0;
    std::vector<double> crit_times;
    std::vector<EdgeSet> interval_edges; // may contain self-loops
    std::vector<EdgeSet> crit_edges;

    int var_count() const { return static_cast<int>(labels.size()); }
};

// Keeps the undirected pair {j,i} at slice k iff the strength of (j,i) at k
// strictly exceeds eta (an infinite strength beats any finite eta).
DynamicBayesianGraph build_dbg(const std::vector<std::string>& labels,
                               const StrengthTable& table, double eta, double delta_t);

PiecewiseDynamicGraph to_piecewise(const DynamicBayesianGraph& dbg);
ExplicitDynamicGraph explicit_view(const PiecewiseDynamicGraph& g);

// Edge set at time t (self-loops implicit). Throws std::out_of_range outside
// [0, t_end].
EdgeSet snapshot(const DynamicBayesianGraph& dbg, double t);
EdgeSet snapshot(const PiecewiseDynamicGraph& g, double t);

// eps-smoothing: the union of all snapshots over [t-eps, t+eps] clipped to
// the domain. The result is again a dynamic graph.
PiecewiseDynamicGraph smooth_dbg(const PiecewiseDynamicGraph& g, double eps);
PiecewiseDynamicGraph smooth_dbg(const DynamicBayesianGraph& dbg, double eps);

// Dynamic-graph axiom violations: self-loops everywhere, ordered critical
// times inside the domain, and left/right comparability at every critical
// time. Empty iff the graph is a dynamic graph.
std::vector<std::string> check_dg_axioms(const ExplicitDynamicGraph& g);
std::vector<std::string> check_dg_axioms(const PiecewiseDynamicGraph& g);
std::vector<std::string> check_dg_axioms(const DynamicBayesianGraph& dbg);

std::string serialize_dbg(const DynamicBayesianGraph& dbg);

} // namespace dbgp

#endif
