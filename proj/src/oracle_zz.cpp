#include "dbgp/oracle_zz.hpp"

#include <bit>
#include <stdexcept>

namespace dbgp {

namespace {

// Row space over GF(2) with one stored row per pivot bit.
class Gf2Span {
public:
    std::uint64_t reduce(std::uint64_t v) const {
        while (v) {
            int top = 63 - std::countl_zero(v);
            if (!by_pivot_[top]) break;
            v ^= by_pivot_[top];
        }
        return v;
    }

    bool insert(std::uint64_t v) {
        v = reduce(v);
        if (!v) return false;
        by_pivot_[63 - std::countl_zero(v)] = v;
        ++dim_;
        return true;
    }

    int dim() const { return dim_; }

    std::vector<std::uint64_t> rows() const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t r : by_pivot_)
            if (r) out.push_back(r);
        return out;
    }

private:
    std::uint64_t by_pivot_[64] = {};
    int dim_ = 0;
};

int gf2_rank(const std::vector<std::uint64_t>& vectors) {
    Gf2Span span;
    for (std::uint64_t v : vectors) span.insert(v);
    return span.dim();
}

// Linear relation between the space at a window's left end (na dims, low
// bits) and its right end (nb dims, next bits), stored as a row space.
struct Relation {
    Gf2Span span;
    int na = 0;
    int nb = 0;

    // Number of interval summands covering the whole window.
    int summand_count() const {
        std::vector<std::uint64_t> a_parts, b_parts;
        const std::uint64_t mask_a = (na == 64) ? ~0ull : ((1ull << na) - 1);
        for (std::uint64_t r : span.rows()) {
            a_parts.push_back(r & mask_a);
            b_parts.push_back(r >> na);
        }
        return gf2_rank(a_parts) + gf2_rank(b_parts) - span.dim();
    }
};

Relation identity_relation(int dim) {
    Relation rel;
    rel.na = dim;
    rel.nb = dim;
    for (int i = 0; i < dim; ++i)
        rel.span.insert((1ull << i) | (1ull << (dim + i)));
    return rel;
}

// Extends the relation across one arrow. Forward (source on the window's
// right end): push each pair through the map. Backward (target on the right
// end): take the preimage, i.e. the kernel of the reduction of
// (u, w) -> (u, G w) modulo the current relation.
Relation extend(const Relation& rel, const ZigzagModule::Arrow& arrow, int new_dim, bool forward) {
    Relation out;
    out.na = rel.na;
    out.nb = new_dim;
    if (forward) {
        for (std::uint64_t r : rel.span.rows()) {
            std::uint64_t u = r & ((1ull << rel.na) - 1);
            std::uint64_t v = r >> rel.na;
            std::uint64_t image = 0;
            for (int j = 0; v; ++j, v >>= 1)
                if (v & 1) image ^= arrow.cols[j];
            out.span.insert(u | (image << rel.na));
        }
        return out;
    }
    // Tracked elimination: unknowns are the coordinates of V_a + V_new; a
    // combination lies in the new relation iff its image under
    // (u, w) -> (u, G w) reduces to zero against the old relation.
    const int unknowns = rel.na + new_dim;
    std::uint64_t piv_val[64] = {};
    std::uint64_t piv_combo[64] = {};
    for (int i = 0; i < unknowns; ++i) {
        std::uint64_t value;
        if (i < rel.na)
            value = 1ull << i;
        else
            value = arrow.cols[i - rel.na] << rel.na;
        value = rel.span.reduce(value);
        std::uint64_t combo = 1ull << i;
        while (value) {
            int top = 63 - std::countl_zero(value);
            if (!piv_val[top]) {
                piv_val[top] = value;
                piv_combo[top] = combo;
                value = 0;
                combo = 0;
                break;
            }
            value ^= piv_val[top];
            combo ^= piv_combo[top];
        }
        if (combo) out.span.insert(combo);
    }
    return out;
}

} // namespace

ZigzagModule build_zigzag_module(const std::vector<Partition>& parts) {
    ZigzagModule mod;
    const int npos = static_cast<int>(parts.size());
    for (const auto& p : parts) mod.dims.push_back(p.block_count());
    for (int i = 0; i + 1 < npos; ++i) {
        ZigzagModule::Arrow arrow;
        // Even positions are criticals; the canonical map always leaves the
        // subdivision side.
        arrow.source = (i % 2 == 0) ? i + 1 : i;
        arrow.target = (i % 2 == 0) ? i : i + 1;
        const Partition& src = parts[arrow.source];
        const Partition& dst = parts[arrow.target];
        if (!refines(src, dst))
            throw std::invalid_argument("build_zigzag_module: no canonical map (not a formigram)");
        arrow.cols.resize(src.block_count(), 0);
        std::vector<int> image(src.block_count(), -1);
        for (int x = 0; x < src.ground_size(); ++x) image[src.block_of[x]] = dst.block_of[x];
        for (int j = 0; j < src.block_count(); ++j) arrow.cols[j] = 1ull << image[j];
        mod.arrows.push_back(std::move(arrow));
    }
    return mod;
}

Barcode oracle_barcode_from_positions(const IndexingSet& idx, const std::vector<Partition>& parts) {
    const int npos = static_cast<int>(parts.size());
    if (npos != idx.point_count())
        throw std::invalid_argument("oracle_barcode: wrong number of partitions");
    if (parts.front().ground_size() > 12 || npos > 31)
        throw std::invalid_argument("oracle_barcode: instance exceeds the desk-scale guard");

    ZigzagModule mod = build_zigzag_module(parts);

    std::vector<std::vector<int>> covering(npos);
    for (int a = 0; a < npos; ++a) {
        covering[a].resize(npos - a);
        Relation rel = identity_relation(mod.dims[a]);
        covering[a][0] = rel.summand_count();
        for (int b = a + 1; b < npos; ++b) {
            const auto& arrow = mod.arrows[b - 1];
            rel = extend(rel, arrow, mod.dims[b], arrow.source == b - 1);
            covering[a][b - a] = rel.summand_count();
        }
    }
    auto cov = [&](int a, int b) {
        if (a < 0 || b >= npos) return 0;
        return covering[a][b - a];
    };

    Barcode bc;
    long points_covered = 0;
    for (int a = 0; a < npos; ++a)
        for (int b = a; b < npos; ++b) {
            int mult = cov(a, b) - cov(a - 1, b) - cov(a, b + 1) + cov(a - 1, b + 1);
            if (mult < 0) throw std::logic_error("oracle_barcode: negative multiplicity");
            if (mult == 0) continue;
            points_covered += static_cast<long>(mult) * (b - a + 1);
            BarInterval bar = psi_k(idx, KIndex{a % 2 == 1, a / 2}, KIndex{b % 2 == 1, b / 2});
            for (int c = 0; c < mult; ++c) bc.bars.push_back(bar);
        }

    long dim_total = 0;
    for (int d : mod.dims) dim_total += d;
    if (points_covered != dim_total)
        throw std::logic_error("oracle_barcode: decomposition does not account for every dimension");

    std::sort(bc.bars.begin(), bc.bars.end(), bar_less);
    return bc;
}

Barcode oracle_barcode(const Formigram& fg) {
    IndexingSet idx = build_indexing_set(fg);
    return oracle_barcode_from_positions(idx, partitions_at_points(fg, idx));
}

} // namespace dbgp
