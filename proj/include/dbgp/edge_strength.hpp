#ifndef DBGP_EDGE_STRENGTH_HPP
#define DBGP_EDGE_STRENGTH_HPP

#include <string>
#include <vector>

#include "dbgp/dbn.hpp"
#include "dbgp/divergence.hpp"

namespace dbgp {

// Strength of every intra-slice edge at every slice 0..K. entries[k] is
// indexed like the Dbn's intra_edges list.
struct StrengthTable {
    std::vector<std::pair<int, int>> edges; // (parent, child), copied from the Dbn
    std::vector<std::vector<double>> entries; // entries[slice][edge]

    int slice_count() const { return static_cast<int>(entries.size()); }
    double at(int slice, int edge) const { return entries[slice][edge]; }
};

// Strength of edge (parent j -> child i) at a slice: the maximum, over
// configurations of the child's remaining parents (inter-slice parents
// included from slice 1 on), of the upper diameter of the sub-CPT whose rows
// vary only the state of j. Zero iff the child is conditionally independent
// of j given the remaining parents.
double edge_strength(const Dbn& dbn, int slice, int parent, int child, DivergenceKind kind);

StrengthTable strength_table(const Dbn& dbn, DivergenceKind kind);

// Rows "(slice, parent, child, strength)" sorted by slice, then parent and
// child name; strengths rendered as fixed decimals or "inf".
std::string strength_table_text(const Dbn& dbn, const StrengthTable& table);
std::string strength_table_json(const Dbn& dbn, const StrengthTable& table);

} // namespace dbgp

#endif
