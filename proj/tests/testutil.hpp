#ifndef DBGP_TESTUTIL_HPP
#define DBGP_TESTUTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "dbgp/dbn.hpp"
#include "dbgp/formigram.hpp"
#include "dbgp/partition.hpp"
#include "dbgp/zigzag.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline dbgp::Dbn random_dbn(Rng& rng, int max_vars = 6, int max_k = 8) {
    std::uniform_int_distribution<int> nv(2, max_vars);
    std::uniform_int_distribution<int> nk(0, max_k);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> prob(0.01, 0.99);
    std::uniform_real_distribution<double> dt(0.25, 2.0);

    dbgp::Dbn dbn;
    const int n = nv(rng);
    const int K = nk(rng);
    dbn.delta_t = dt(rng);
    for (int i = 0; i < n; ++i)
        dbn.variables.push_back({"X" + std::to_string(i + 1), {"0", "1"}});

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < 0.35) dbn.intra_edges.emplace_back(order[i], order[j]);
    for (int v = 0; v < n; ++v)
        if (unit(rng) < 0.35) dbn.inter_edges.emplace_back(v, v);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && unit(rng) < 0.05) dbn.inter_edges.emplace_back(u, v);

    dbn.slices.resize(K + 1);
    for (int k = 0; k <= K; ++k) {
        dbn.slices[k].resize(n);
        for (int i = 0; i < n; ++i) {
            dbgp::Cpt cpt;
            cpt.child = i;
            cpt.parents = dbn.implied_parents(i, k);
            long rows = 1;
            for (const auto& p : cpt.parents) rows *= dbn.state_count(p.var);
            for (long r = 0; r < rows; ++r) {
                double a = prob(rng);
                cpt.rows.push_back({a, 1.0 - a});
            }
            dbn.slices[k][i] = std::move(cpt);
        }
    }
    return dbn;
}

inline dbgp::Partition random_partition(Rng& rng, int n) {
    std::uniform_int_distribution<int> count(0, n - 1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    dbgp::UnionFind uf(n);
    int unions = count(rng);
    for (int i = 0; i < unions; ++i) uf.unite(pick(rng), pick(rng));
    return dbgp::partition_from_union_find(uf);
}

// Random formigram over <= max_n elements with <= max_crit critical times:
// random interval partitions, critical partitions at least as coarse as the
// join of their neighbors.
inline dbgp::Formigram random_formigram(Rng& rng, int max_n = 8, int max_crit = 10) {
    std::uniform_int_distribution<int> nv(1, max_n);
    std::uniform_int_distribution<int> nc(0, max_crit);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = nv(rng);
    const int m = nc(rng);

    dbgp::Formigram fg;
    for (int i = 0; i < n; ++i) fg.labels.push_back("e" + std::to_string(i + 1));
    fg.t_end = m + 1.0;
    for (int i = 1; i <= m; ++i) fg.crit_times.push_back(static_cast<double>(i));
    for (int i = 0; i <= m; ++i) fg.interval_parts.push_back(random_partition(rng, n));
    for (int i = 0; i < m; ++i) {
        dbgp::Partition joint =
            dbgp::finest_common_coarsening({fg.interval_parts[i], fg.interval_parts[i + 1]});
        if (unit(rng) < 0.3 && n > 1) {
            std::uniform_int_distribution<int> pick(0, n - 1);
            dbgp::UnionFind uf(n);
            std::vector<int> first(joint.block_count(), -1);
            for (int x = 0; x < n; ++x) {
                int b = joint.block_of[x];
                if (first[b] == -1)
                    first[b] = x;
                else
                    uf.unite(first[b], x);
            }
            uf.unite(pick(rng), pick(rng));
            joint = dbgp::partition_from_union_find(uf);
        }
        fg.crit_parts.push_back(joint);
    }
    return dbgp::compress_formigram(std::move(fg));
}

inline dbgp::Barcode random_barcode(Rng& rng, int max_bars = 6) {
    std::uniform_int_distribution<int> nb(0, max_bars);
    std::uniform_real_distribution<double> birth(0.0, 10.0);
    std::uniform_real_distribution<double> len(0.0, 5.0);
    std::uniform_int_distribution<int> flag(0, 1);
    dbgp::Barcode bc;
    const int bars = nb(rng);
    for (int i = 0; i < bars; ++i) {
        dbgp::BarInterval bar;
        bar.birth = birth(rng);
        bar.death = bar.birth + len(rng);
        bar.birth_closed = flag(rng) == 1;
        bar.death_closed = flag(rng) == 1;
        bc.bars.push_back(bar);
    }
    std::sort(bc.bars.begin(), bc.bars.end(), dbgp::bar_less);
    return bc;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(DBG_FIXTURE_DIR) + "/" + name;
}

} // namespace testutil

#endif
