#include "dbgp/edge_strength.hpp"

#include <algorithm>
#include <stdexcept>

#include "dbgp/format.hpp"

namespace dbgp {

double edge_strength(const Dbn& dbn, int slice, int parent, int child, DivergenceKind kind) {
    if (slice < 0 || slice >= static_cast<int>(dbn.slices.size()))
        throw std::invalid_argument("edge_strength: slice out of range");
    if (std::find(dbn.intra_edges.begin(), dbn.intra_edges.end(),
                  std::make_pair(parent, child)) == dbn.intra_edges.end())
        throw std::invalid_argument("edge_strength: edge not in intra-slice structure");

    const Cpt& cpt = dbn.slices[slice][child];
    int jpos = -1;
    for (size_t p = 0; p < cpt.parents.size(); ++p)
        if (cpt.parents[p].var == parent && !cpt.parents[p].prev) jpos = static_cast<int>(p);
    if (jpos < 0) throw std::logic_error("edge_strength: CPT does not list the edge parent");

    std::vector<int> other; // positions of the remaining parents
    for (int p = 0; p < static_cast<int>(cpt.parents.size()); ++p)
        if (p != jpos) other.push_back(p);

    const int nj = dbn.state_count(parent);
    std::vector<int> config(cpt.parents.size(), 0);
    double best = 0.0;
    bool done = false;
    while (!done) {
        std::vector<std::vector<double>> sub;
        sub.reserve(nj);
        for (int sj = 0; sj < nj; ++sj) {
            config[jpos] = sj;
            sub.push_back(cpt.rows[cpt_row_index(dbn, cpt, config)]);
        }
        best = std::max(best, upper_diameter(kind, sub));

        // next configuration of the remaining parents
        done = true;
        for (int p = static_cast<int>(other.size()) - 1; p >= 0; --p) {
            int pos = other[p];
            if (++config[pos] < dbn.state_count(cpt.parents[pos].var)) {
                done = false;
                break;
            }
            config[pos] = 0;
        }
    }
    return best;
}

StrengthTable strength_table(const Dbn& dbn, DivergenceKind kind) {
    StrengthTable table;
    table.edges = dbn.intra_edges;
    table.entries.resize(dbn.slices.size());
    for (int k = 0; k < static_cast<int>(dbn.slices.size()); ++k) {
        table.entries[k].reserve(table.edges.size());
        for (auto [j, i] : table.edges)
            table.entries[k].push_back(edge_strength(dbn, k, j, i, kind));
    }
    return table;
}

namespace {

// (slice, parent name, child name, value) sorted for stable output
std::vector<std::tuple<int, std::string, std::string, double>>
sorted_rows(const Dbn& dbn, const StrengthTable& table) {
    std::vector<std::tuple<int, std::string, std::string, double>> rows;
    for (int k = 0; k < table.slice_count(); ++k)
        for (size_t e = 0; e < table.edges.size(); ++e)
            rows.emplace_back(k, dbn.variables[table.edges[e].first].name,
                              dbn.variables[table.edges[e].second].name, table.entries[k][e]);
    std::sort(rows.begin(), rows.end());
    return rows;
}

} // namespace

std::string strength_table_text(const Dbn& dbn, const StrengthTable& table) {
    std::string out = "slice\tparent\tchild\tstrength\n";
    for (const auto& [k, p, c, v] : sorted_rows(dbn, table))
        out += std::to_string(k) + "\t" + p + "\t" + c + "\t" + fmt_real(v) + "\n";
    return out;
}

std::string strength_table_json(const Dbn& dbn, const StrengthTable& table) {
    std::string out = "{\"rows\": [";
    bool first = true;
    for (const auto& [k, p, c, v] : sorted_rows(dbn, table)) {
        if (!first) out += ", ";
        first = false;
        out += "{\"slice\": " + std::to_string(k) + ", \"parent\": " + json_quote(p) +
               ", \"child\": " + json_quote(c) + ", \"strength\": " + json_real(v) + "}";
    }
    out += "]}\n";
    return out;
}

} // namespace dbgp
