#ifndef DBGP_METRICS_HPP
#define DBGP_METRICS_HPP

#include <string>
#include <vector>

#include "dbgp/dynamic_graph.hpp"
#include "dbgp/formigram.hpp"
#include "dbgp/zigzag.hpp"

namespace dbgp {

// Partial matching between two barcodes. cost is the bottleneck value: the
// max over matched pair distances and unmatched half-lengths.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> unmatched_a;
    std::vector<int> unmatched_b;
    double cost = 0.0;
};

// l-inf distance on (birth, death); endpoint open/closed flags are a
// measure-zero distinction and are ignored by the metric.
double bar_distance(const BarInterval& a, const BarInterval& b);
double deletion_cost(const BarInterval& a);

// Standard persistence bottleneck distance with half-length deletion cost,
// computed by a binary search over the O(n^2) candidate values with an
// augmenting-path feasibility matching.
double bottleneck_distance(const Barcode& a, const Barcode& b);
Matching bottleneck_matching(const Barcode& a, const Barcode& b);

// Reference matcher enumerating every partial matching; for small inputs
// (guarded at 8 bars per side).
double exhaustive_bottleneck(const Barcode& a, const Barcode& b);

// Certified lower bound on the interleaving distance between the underlying
// dynamic graphs: half the bottleneck distance of their barcodes.
double interleaving_lower_bound(const Barcode& a, const Barcode& b);

struct StabilityReport {
    double eps = 0.0;
    double lhs = 0.0;   // d_B(dgm(smoothed), dgm(original))
    double bound = 0.0; // eps
    bool pass = false;
};

// Checks the smoothing bound: the barcode of the eps-smoothed formigram
// stays within eps of the original in bottleneck distance (tolerance 1e-9).
StabilityReport stability_check(const Formigram& fg, double eps);
StabilityReport stability_check(const DynamicBayesianGraph& dbg, double eps);

std::string serialize_matching(const Matching& m, const Barcode& a, const Barcode& b);

} // namespace dbgp

#endif
