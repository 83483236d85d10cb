#include "dbgp/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace dbgp {

int Partition::block_count() const {
    int m = -1;
    for (int b : block_of) m = std::max(m, b);
    return m + 1;
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(block_count());
    for (int x = 0; x < ground_size(); ++x) out[block_of[x]].push_back(x);
    return out;
}

Partition singleton_partition(int n) {
    Partition p;
    p.block_of.resize(n);
    for (int i = 0; i < n; ++i) p.block_of[i] = i;
    return p;
}

Partition partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> raw(n, -1);
    int id = 0;
    for (const auto& blk : blocks) {
        for (int x : blk) {
            if (x < 0 || x >= n) throw std::invalid_argument("partition block member out of range");
            if (raw[x] != -1) throw std::invalid_argument("partition blocks overlap");
            raw[x] = id;
        }
        ++id;
    }
    for (int x = 0; x < n; ++x)
        if (raw[x] == -1) throw std::invalid_argument("partition blocks do not cover the ground set");

    // Renumber by first appearance so the representation is canonical.
    Partition p;
    p.block_of.assign(n, -1);
    std::vector<int> remap(id, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (remap[raw[x]] == -1) remap[raw[x]] = next++;
        p.block_of[x] = remap[raw[x]];
    }
    return p;
}

Partition partition_from_union_find(UnionFind& uf) {
    const int n = uf.size();
    Partition p;
    p.block_of.assign(n, -1);
    std::vector<int> remap(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        int r = uf.find(x);
        if (remap[r] == -1) remap[r] = next++;
        p.block_of[x] = remap[r];
    }
    return p;
}

bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.ground_size() != coarse.ground_size()) return false;
    // Each fine block must map into a single coarse block.
    std::vector<int> image(fine.block_count(), -1);
    for (int x = 0; x < fine.ground_size(); ++x) {
        int fb = fine.block_of[x];
        if (image[fb] == -1)
            image[fb] = coarse.block_of[x];
        else if (image[fb] != coarse.block_of[x])
            return false;
    }
    return true;
}

Partition finest_common_coarsening(const std::vector<Partition>& parts) {
    if (parts.empty()) throw std::invalid_argument("finest_common_coarsening: empty input");
    const int n = parts.front().ground_size();
    UnionFind uf(n);
    for (const auto& p : parts) {
        if (p.ground_size() != n)
            throw std::invalid_argument("finest_common_coarsening: mismatched ground sets");
        std::vector<int> first(p.block_count(), -1);
        for (int x = 0; x < n; ++x) {
            int b = p.block_of[x];
            if (first[b] == -1)
                first[b] = x;
            else
                uf.unite(first[b], x);
        }
    }
    return partition_from_union_find(uf);
}

std::string to_string(const Partition& p, const std::vector<std::string>& labels) {
    std::string out;
    for (const auto& blk : p.blocks()) {
        out += '{';
        for (size_t i = 0; i < blk.size(); ++i) {
            if (i) out += ',';
            out += labels[blk[i]];
        }
        out += '}';
    }
    return out;
}

} // namespace dbgp
