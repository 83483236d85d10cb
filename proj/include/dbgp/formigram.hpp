#ifndef DBGP_FORMIGRAM_HPP
#define DBGP_FORMIGRAM_HPP

#include <string>
#include <vector>

#include "dbgp/dynamic_graph.hpp"
#include "dbgp/partition.hpp"

namespace dbgp {

// Connected components of an undirected graph over 0..n-1.
Partition path_components(int n, const EdgeSet& edges);

// Time-varying partition of a fixed ground set: piecewise constant, with the
// partition at each critical time coarsened by (at least) both neighboring
// interval partitions. Critical times record genuine changes only.
struct Formigram {
    std::vector<std::string> labels;
    double t_end = 0.0;
    std::vector<double> crit_times;         // strictly inside (0, t_end)
    std::vector<Partition> interval_parts;  // size crit_times.size() + 1
    std::vector<Partition> crit_parts;      // size crit_times.size()

    int ground_size() const { return static_cast<int>(labels.size()); }
    Partition value_at(double t) const;
};

// Axiom violations (saturation, ordering, comparability, genuine criticals);
// empty iff valid.
std::vector<std::string> check_formigram(const Formigram& fg);

// Drops critical times at which nothing changes, merging the equal intervals
// around them.
Formigram compress_formigram(Formigram fg);

// Path components of every snapshot; formigram critical times are the subset
// of graph critical times where the clustering actually changes.
Formigram formigram_of(const PiecewiseDynamicGraph& g);
Formigram formigram_of(const DynamicBayesianGraph& dbg);

struct Event {
    enum class Kind { merge, disband };
    double time = 0.0;
    Kind kind = Kind::merge;
    std::vector<std::vector<int>> blocks_before;
    std::vector<std::vector<int>> blocks_after;
};

// Every merging pair (two blocks flowing into one block at a critical time)
// and disbanding pair (mirror image on the right), in chronological order.
// Saturated formigrams have no birth or death events.
std::vector<Event> detect_events(const Formigram& fg);

// Pointwise finest common coarsening over [t-eps, t+eps] clipped to the
// domain; the result is again a formigram.
Formigram smooth_formigram(const Formigram& fg, double eps);

std::string serialize_formigram(const Formigram& fg);

} // namespace dbgp

#endif
