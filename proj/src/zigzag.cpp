#include "dbgp/zigzag.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dbgp/format.hpp"

namespace dbgp {

bool operator==(const BarInterval& a, const BarInterval& b) {
    return a.birth == b.birth && a.death == b.death && a.birth_closed == b.birth_closed &&
           a.death_closed == b.death_closed;
}

bool bar_less(const BarInterval& a, const BarInterval& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death != b.death) return a.death < b.death;
    if (a.birth_closed != b.birth_closed) return a.birth_closed > b.birth_closed;
    return a.death_closed > b.death_closed;
}

int Barcode::alive_at(double t) const {
    int count = 0;
    for (const auto& bar : bars) {
        bool after_birth = bar.birth_closed ? t >= bar.birth : t > bar.birth;
        bool before_death = bar.death_closed ? t <= bar.death : t < bar.death;
        if (after_birth && before_death) ++count;
    }
    return count;
}

IndexingSet build_indexing_set(const Formigram& fg) {
    return build_indexing_set(fg, 0.5);
}

IndexingSet build_indexing_set(const Formigram& fg, double fraction) {
    if (!(fraction > 0.0 && fraction < 1.0))
        throw std::invalid_argument("build_indexing_set: fraction must lie in (0,1)");
    IndexingSet idx;
    idx.criticals.push_back(0.0);
    for (double c : fg.crit_times)
        if (c > 0.0 && c < fg.t_end) idx.criticals.push_back(c);
    if (fg.t_end > 0.0) idx.criticals.push_back(fg.t_end);
    for (size_t i = 0; i + 1 < idx.criticals.size(); ++i)
        idx.subdivisions.push_back(idx.criticals[i] +
                                   fraction * (idx.criticals[i + 1] - idx.criticals[i]));
    for (size_t i = 0; i < idx.subdivisions.size(); ++i)
        if (!(idx.criticals[i] < idx.subdivisions[i] && idx.subdivisions[i] < idx.criticals[i + 1]))
            throw std::logic_error("build_indexing_set: subdivisions do not interleave");
    return idx;
}

BarInterval psi_k(const IndexingSet& idx, KIndex lo, KIndex hi) {
    const int nc = static_cast<int>(idx.criticals.size());
    const int ns = static_cast<int>(idx.subdivisions.size());
    auto position = [&](const KIndex& k) {
        if (k.is_subdivision) {
            if (k.index < 0 || k.index >= ns) throw std::invalid_argument("psi_k: subdivision index out of range");
            return 2 * k.index + 1;
        }
        if (k.index < 0 || k.index >= nc) throw std::invalid_argument("psi_k: critical index out of range");
        return 2 * k.index;
    };
    if (position(lo) > position(hi)) throw std::invalid_argument("psi_k: endpoints out of order");

    BarInterval bar;
    if (lo.is_subdivision) {
        bar.birth = idx.criticals[lo.index];
        bar.birth_closed = false;
    } else {
        bar.birth = idx.criticals[lo.index];
        bar.birth_closed = true;
    }
    if (hi.is_subdivision) {
        bar.death = idx.criticals[hi.index + 1];
        bar.death_closed = false;
    } else {
        bar.death = idx.criticals[hi.index];
        bar.death_closed = true;
    }
    return bar;
}

std::vector<Partition> partitions_at_points(const Formigram& fg, const IndexingSet& idx) {
    std::vector<Partition> parts;
    parts.reserve(idx.point_count());
    for (int p = 0; p < idx.point_count(); ++p) parts.push_back(fg.value_at(idx.point(p)));
    return parts;
}

Barcode barcode_from_positions(const IndexingSet& idx, const std::vector<Partition>& parts) {
    const int npos = static_cast<int>(parts.size());
    if (npos != idx.point_count())
        throw std::invalid_argument("barcode_from_positions: wrong number of partitions");
    const int n = parts.front().ground_size();

    // summands_over[a][b-a] = number of interval summands covering positions
    // a..b = block count of the finest common coarsening over the window.
    std::vector<std::vector<int>> summands_over(npos);
    for (int a = 0; a < npos; ++a) {
        UnionFind uf(n);
        summands_over[a].resize(npos - a);
        for (int b = a; b < npos; ++b) {
            std::vector<int> first(parts[b].block_count(), -1);
            for (int x = 0; x < n; ++x) {
                int blk = parts[b].block_of[x];
                if (first[blk] == -1)
                    first[blk] = x;
                else
                    uf.unite(first[blk], x);
            }
            summands_over[a][b - a] = uf.classes();
        }
    }
    auto covering = [&](int a, int b) {
        if (a < 0 || b >= npos) return 0;
        return summands_over[a][b - a];
    };

    Barcode bc;
    for (int a = 0; a < npos; ++a)
        for (int b = a; b < npos; ++b) {
            int mult = covering(a, b) - covering(a - 1, b) - covering(a, b + 1) + covering(a - 1, b + 1);
            if (mult < 0) throw std::logic_error("barcode_from_positions: negative multiplicity");
            if (mult == 0) continue;
            KIndex lo{a % 2 == 1, a / 2};
            KIndex hi{b % 2 == 1, b / 2};
            BarInterval bar = psi_k(idx, lo, hi);
            for (int c = 0; c < mult; ++c) bc.bars.push_back(bar);
        }
    std::sort(bc.bars.begin(), bc.bars.end(), bar_less);
    return bc;
}

Barcode zigzag_barcode(const Formigram& fg) {
    IndexingSet idx = build_indexing_set(fg);
    return barcode_from_positions(idx, partitions_at_points(fg, idx));
}

bool barcodes_equal(const Barcode& a, const Barcode& b, double tol) {
    if (a.bars.size() != b.bars.size()) return false;
    for (size_t i = 0; i < a.bars.size(); ++i) {
        const auto& x = a.bars[i];
        const auto& y = b.bars[i];
        if (std::fabs(x.birth - y.birth) > tol || std::fabs(x.death - y.death) > tol) return false;
        if (x.birth_closed != y.birth_closed || x.death_closed != y.death_closed) return false;
    }
    return true;
}

std::string serialize_barcode(const Barcode& bc) {
    std::string out = "{\"bars\": [";
    for (size_t i = 0; i < bc.bars.size(); ++i) {
        const auto& bar = bc.bars[i];
        if (i) out += ", ";
        out += "{\"birth\": " + json_real(bar.birth) + ", \"death\": " + json_real(bar.death) +
               ", \"birth_closed\": " + (bar.birth_closed ? "true" : "false") +
               ", \"death_closed\": " + (bar.death_closed ? "true" : "false") + "}";
    }
    out += "]}\n";
    return out;
}

std::string barcode_text(const Barcode& bc) {
    std::string out;
    for (const auto& bar : bc.bars) {
        out += bar.birth_closed ? '[' : '(';
        out += fmt_real(bar.birth) + ", " + fmt_real(bar.death);
        out += bar.death_closed ? ']' : ')';
        out += '\n';
    }
    return out;
}

std::string barcode_svg(const Barcode& bc, double t_end) {
    const int width = 800;
    const int height = 40 + 20 * static_cast<int>(bc.bars.size());
    const double x0 = 40.0, x1 = width - 40.0;
    auto xcoord = [&](double t) {
        double f = t_end > 0.0 ? t / t_end : 0.0;
        return x0 + f * (x1 - x0);
    };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<line x1=\"" + num(x0) + "\" y1=\"" + num(height - 20.0) + "\" x2=\"" + num(x1) +
           "\" y2=\"" + num(height - 20.0) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(x0) + "\" y=\"" + num(height - 6.0) + "\" font-size=\"10\">0</text>\n";
    svg += "<text x=\"" + num(x1 - 20.0) + "\" y=\"" + num(height - 6.0) + "\" font-size=\"10\">" +
           fmt_real(t_end) + "</text>\n";
    for (size_t i = 0; i < bc.bars.size(); ++i) {
        const auto& bar = bc.bars[i];
        double y = 20.0 + 20.0 * static_cast<double>(i);
        double bx = xcoord(bar.birth), dx = xcoord(bar.death);
        svg += "<line x1=\"" + num(bx) + "\" y1=\"" + num(y) + "\" x2=\"" + num(dx) + "\" y2=\"" +
               num(y) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        auto endpoint = [&](double x, bool closed) {
            svg += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"3\" stroke=\"black\" fill=\"" +
                   (closed ? "black" : "white") + "\"/>\n";
        };
        endpoint(bx, bar.birth_closed);
        endpoint(dx, bar.death_closed);
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace dbgp
