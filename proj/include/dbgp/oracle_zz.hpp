#ifndef DBGP_ORACLE_ZZ_HPP
#define DBGP_ORACLE_ZZ_HPP

#include <cstdint>
#include <vector>

#include "dbgp/zigzag.hpp"

namespace dbgp {

// The zigzag module of partition-spanned GF(2) vector spaces: one space per
// indexing-set point with basis labeled by blocks, and one canonical map per
// adjacent pair, always directed from the subdivision point into the
// critical point. Each column of a map matrix has exactly one nonzero entry.
struct ZigzagModule {
    struct Arrow {
        int source = 0; // position of the subdivision-side space
        int target = 0; // position of the critical-side space
        std::vector<std::uint64_t> cols; // cols[j] = image bitmask of source basis j
    };
    std::vector<int> dims;     // one per position
    std::vector<Arrow> arrows; // arrows[i] joins positions i and i+1
};

ZigzagModule build_zigzag_module(const std::vector<Partition>& parts);

// Brute-force interval decomposition over GF(2) by composing the canonical
// maps as linear relations and reading summand counts off relation ranks.
// Independent of the combinatorial path in zigzag_barcode; desk-scale only
// (at most 12 elements and 31 indexing-set points).
Barcode oracle_barcode(const Formigram& fg);
Barcode oracle_barcode_from_positions(const IndexingSet& idx, const std::vector<Partition>& parts);

} // namespace dbgp

#endif
