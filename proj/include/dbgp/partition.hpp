#ifndef DBGP_PARTITION_HPP
#define DBGP_PARTITION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dbgp {

// Union-find over 0..n-1 with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1), classes_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true if the two elements were in different classes.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --classes_;
        return true;
    }

    int classes() const { return classes_; }
    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int classes_;
};

// A partition of {0..n-1} in canonical form: block_of[x] is the block id of
// element x, and block ids are assigned 0,1,2,... in order of first
// appearance. Two partitions are equal iff their block_of vectors are equal.
struct Partition {
    std::vector<int> block_of;

    int ground_size() const { return static_cast<int>(block_of.size()); }
    int block_count() const;

    // Blocks as sorted member lists, ordered by smallest member.
    std::vector<std::vector<int>> blocks() const;

    bool operator==(const Partition&) const = default;
};

Partition singleton_partition(int n);
Partition partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks);
Partition partition_from_union_find(UnionFind& uf);

// True iff fine refines coarse: every block of fine lies inside one block of
// coarse. Both must share the ground size.
bool refines(const Partition& fine, const Partition& coarse);

// Finest common coarsening: transitive closure of the union of the block
// equivalence relations. Throws std::invalid_argument on mismatched ground
// sets or an empty input list.
Partition finest_common_coarsening(const std::vector<Partition>& parts);

std::string to_string(const Partition& p, const std::vector<std::string>& labels);

} // namespace dbgp

#endif
