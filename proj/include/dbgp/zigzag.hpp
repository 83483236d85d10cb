#ifndef DBGP_ZIGZAG_HPP
#define DBGP_ZIGZAG_HPP

#include <string>
#include <vector>

#include "dbgp/formigram.hpp"

namespace dbgp {

// Discrete index set K = C u S for a formigram on [0, t_end]: criticals are
// the formigram's critical times padded with both domain endpoints, and each
// consecutive pair is separated by one subdivision point. Its points
// alternate c_0 < s_0 < c_1 < ... < c_{M-1}.
struct IndexingSet {
    std::vector<double> criticals;
    std::vector<double> subdivisions;

    int point_count() const { return static_cast<int>(criticals.size() + subdivisions.size()); }
    // Real coordinate of the p-th point; even positions are criticals.
    double point(int p) const { return p % 2 == 0 ? criticals[p / 2] : subdivisions[p / 2]; }
};

// Endpoint of an interval in K: either critical c_index or subdivision
// s_index.
struct KIndex {
    bool is_subdivision = false;
    int index = 0;
};

struct BarInterval {
    double birth = 0.0;
    double death = 0.0;
    bool birth_closed = true;
    bool death_closed = true;
};

bool operator==(const BarInterval& a, const BarInterval& b);
bool bar_less(const BarInterval& a, const BarInterval& b);

struct Barcode {
    std::vector<BarInterval> bars; // kept sorted by bar_less

    int alive_at(double t) const; // bars whose interval contains t
};

// Subdivisions at interval midpoints (the default indexing set).
IndexingSet build_indexing_set(const Formigram& fg);
// Subdivisions at c_i + fraction * (c_{i+1} - c_i); fraction in (0,1). The
// barcode does not depend on this choice.
IndexingSet build_indexing_set(const Formigram& fg, double fraction);

// Maps an interval of K to a real interval: critical endpoints stay closed
// at their own value, subdivision endpoints open at the enclosing critical
// (left s_i opens at c_i, right s_j opens at c_{j+1}).
BarInterval psi_k(const IndexingSet& idx, KIndex lo, KIndex hi);

// H0 zigzag barcode of the formigram: the interval decomposition of the
// module of partition-spanned spaces with the canonical maps
// theta(s_i) -> theta(c_i) and theta(s_i) -> theta(c_{i+1}), pushed to real
// intervals through psi_k. Computed combinatorially: the number of summands
// covering a window of K equals the block count of the finest common
// coarsening over the window, and multiplicities follow by inclusion-
// exclusion over window extensions.
Barcode zigzag_barcode(const Formigram& fg);

// Same computation over an explicit indexing set (position p carries
// partition parts[p]); exposed for the subdivision-invariance checks.
Barcode barcode_from_positions(const IndexingSet& idx, const std::vector<Partition>& parts);

// Partition of the formigram sampled at every point of the indexing set.
std::vector<Partition> partitions_at_points(const Formigram& fg, const IndexingSet& idx);

bool barcodes_equal(const Barcode& a, const Barcode& b, double tol);

std::string serialize_barcode(const Barcode& bc);
std::string barcode_text(const Barcode& bc);
std::string barcode_svg(const Barcode& bc, double t_end);

} // namespace dbgp

#endif
