#include "dbgp/dbn.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dbgp {

namespace {

const char* kPrevSuffix = "@prev";

std::string parent_token(const Dbn& dbn, const ParentRef& p) {
    std::string s = dbn.variables[p.var].name;
    if (p.prev) s += kPrevSuffix;
    return s;
}

// Kahn's algorithm; true iff the intra-slice structure is acyclic.
bool intra_is_dag(const Dbn& dbn) {
    const int n = dbn.var_count();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (auto [p, c] : dbn.intra_edges) {
        out[p].push_back(c);
        ++indeg[c];
    }
    std::vector<int> queue;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return seen == n;
}

} // namespace

int Dbn::find_variable(const std::string& name) const {
    for (int i = 0; i < var_count(); ++i)
        if (variables[i].name == name) return i;
    return -1;
}

std::vector<ParentRef> Dbn::implied_parents(int child, int slice) const {
    std::vector<ParentRef> out;
    for (auto [p, c] : intra_edges)
        if (c == child) out.push_back({p, false});
    if (slice >= 1)
        for (auto [p, c] : inter_edges)
            if (c == child) out.push_back({p, true});
    return out;
}

int cpt_row_index(const Dbn& dbn, const Cpt& cpt, const std::vector<int>& config) {
    if (config.size() != cpt.parents.size())
        throw std::invalid_argument("cpt_row_index: configuration arity mismatch");
    int idx = 0;
    for (size_t i = 0; i < cpt.parents.size(); ++i)
        idx = idx * dbn.state_count(cpt.parents[i].var) + config[i];
    return idx;
}

std::vector<std::string> validate_dbn(const Dbn& dbn) {
    std::vector<std::string> v;
    const int n = dbn.var_count();

    std::set<std::string> names;
    for (const auto& var : dbn.variables) {
        if (!names.insert(var.name).second)
            v.push_back("duplicate variable name: " + var.name);
        if (var.states.empty())
            v.push_back("variable " + var.name + " has no states");
        std::set<std::string> st(var.states.begin(), var.states.end());
        if (st.size() != var.states.size())
            v.push_back("duplicate state label in variable " + var.name);
    }
    if (!(dbn.delta_t > 0.0))
        v.push_back("delta_t must be positive");

    auto check_endpoints = [&](const std::vector<std::pair<int, int>>& edges, const char* kind) {
        std::set<std::pair<int, int>> seen;
        for (auto e : edges) {
            if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
                v.push_back(std::string(kind) + " edge endpoint out of range");
                continue;
            }
            if (!seen.insert(e).second)
                v.push_back(std::string("duplicate ") + kind + " edge " +
                            dbn.variables[e.first].name + " -> " + dbn.variables[e.second].name);
        }
    };
    check_endpoints(dbn.intra_edges, "intra");
    check_endpoints(dbn.inter_edges, "inter");
    for (auto e : dbn.intra_edges)
        if (e.first == e.second) v.push_back("intra self-edge on " + dbn.variables[e.first].name);
    if (!v.empty() && n == 0) return v;

    if (!intra_is_dag(dbn)) v.push_back("cyclic intra-slice structure");

    if (dbn.slices.empty()) {
        v.push_back("no slices (K must be >= 0)");
        return v;
    }

    for (int k = 0; k < static_cast<int>(dbn.slices.size()); ++k) {
        const auto& slice = dbn.slices[k];
        if (static_cast<int>(slice.size()) != n) {
            v.push_back("slice " + std::to_string(k) + " does not cover every variable");
            continue;
        }
        for (int i = 0; i < n; ++i) {
            const Cpt& cpt = slice[i];
            const std::string where = dbn.variables[i].name + " at slice " + std::to_string(k);
            if (cpt.child != i) {
                v.push_back("CPT child mismatch for " + where);
                continue;
            }
            auto implied = dbn.implied_parents(i, k);
            auto sorted_tokens = [&](const std::vector<ParentRef>& ps) {
                std::vector<std::string> t;
                for (const auto& p : ps) t.push_back(parent_token(dbn, p));
                std::sort(t.begin(), t.end());
                return t;
            };
            if (sorted_tokens(cpt.parents) != sorted_tokens(implied)) {
                v.push_back("CPT parent set mismatch for " + where);
                continue;
            }
            long expected_rows = 1;
            for (const auto& p : cpt.parents) expected_rows *= dbn.state_count(p.var);
            if (static_cast<long>(cpt.rows.size()) != expected_rows) {
                v.push_back("row count mismatch: expected " + std::to_string(expected_rows) +
                            ", got " + std::to_string(cpt.rows.size()) + " (" + where + ")");
                continue;
            }
            for (size_t r = 0; r < cpt.rows.size(); ++r) {
                const auto& row = cpt.rows[r];
                if (static_cast<int>(row.size()) != dbn.state_count(i)) {
                    v.push_back("row length mismatch in CPT of " + where + ", row " + std::to_string(r));
                    continue;
                }
                double sum = 0.0;
                bool neg = false;
                for (double x : row) {
                    if (x < 0.0 || !std::isfinite(x)) neg = true;
                    sum += x;
                }
                if (neg)
                    v.push_back("negative or non-finite entry in CPT of " + where + ", row " + std::to_string(r));
                else if (std::fabs(sum - 1.0) > 1e-9)
                    v.push_back("non-stochastic row in CPT of " + where + ", row " + std::to_string(r) +
                                " (sum " + std::to_string(sum) + ")");
            }
        }
    }
    return v;
}

namespace {

using nlohmann::json;

ParentRef parse_parent_token(const Dbn& dbn, const std::string& token) {
    ParentRef ref;
    std::string name = token;
    const std::string suffix = kPrevSuffix;
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
        ref.prev = true;
        name.resize(name.size() - suffix.size());
    }
    ref.var = dbn.find_variable(name);
    if (ref.var < 0) throw std::runtime_error("unknown parent variable: " + token);
    return ref;
}

Dbn dbn_from_json(const json& doc) {
    if (!doc.is_object()) throw std::runtime_error("malformed document: top level must be an object");
    Dbn dbn;
    dbn.delta_t = doc.at("delta_t").get<double>();
    for (const auto& jv : doc.at("variables")) {
        Variable var;
        var.name = jv.at("name").get<std::string>();
        for (const auto& s : jv.at("states")) var.states.push_back(s.get<std::string>());
        dbn.variables.push_back(std::move(var));
    }
    auto read_edges = [&](const char* key) {
        std::vector<std::pair<int, int>> edges;
        if (!doc.contains(key)) return edges;
        for (const auto& je : doc.at(key)) {
            if (!je.is_array() || je.size() != 2)
                throw std::runtime_error(std::string("malformed ") + key + " entry");
            int p = dbn.find_variable(je[0].get<std::string>());
            int c = dbn.find_variable(je[1].get<std::string>());
            if (p < 0 || c < 0)
                throw std::runtime_error(std::string("unknown variable in ") + key);
            edges.emplace_back(p, c);
        }
        return edges;
    };
    dbn.intra_edges = read_edges("intra_edges");
    dbn.inter_edges = read_edges("inter_edges");

    const auto& jslices = doc.at("slices");
    dbn.slices.resize(jslices.size());
    std::set<int> ks;
    for (const auto& js : jslices) {
        int k = js.at("k").get<int>();
        if (k < 0 || k >= static_cast<int>(jslices.size()) || !ks.insert(k).second)
            throw std::runtime_error("slice indices must be 0..K without repeats");
        auto& slice = dbn.slices[k];
        slice.resize(dbn.var_count());
        for (auto& c : slice) c.child = -1;
        for (const auto& [child_name, jcpt] : js.at("cpts").items()) {
            int child = dbn.find_variable(child_name);
            if (child < 0) throw std::runtime_error("CPT for unknown variable: " + child_name);
            Cpt cpt;
            cpt.child = child;
            for (const auto& jp : jcpt.at("parents"))
                cpt.parents.push_back(parse_parent_token(dbn, jp.get<std::string>()));
            for (const auto& jrow : jcpt.at("rows")) {
                std::vector<double> row;
                for (const auto& x : jrow) row.push_back(x.get<double>());
                cpt.rows.push_back(std::move(row));
            }
            slice[child] = std::move(cpt);
        }
        for (int i = 0; i < dbn.var_count(); ++i)
            if (slice[i].child != i)
                throw std::runtime_error("slice " + std::to_string(k) + " is missing a CPT for " +
                                         dbn.variables[i].name);
    }
    return dbn;
}

// Renormalization is skipped for rows already exact to machine precision so
// parse(serialize(parse(x))) is a fixed point.
void renormalize_rows(Dbn& dbn) {
    for (auto& slice : dbn.slices)
        for (auto& cpt : slice)
            for (auto& row : cpt.rows) {
                double sum = 0.0;
                for (double x : row) sum += x;
                if (std::fabs(sum - 1.0) > 8 * DBL_EPSILON)
                    for (double& x : row) x /= sum;
            }
}

} // namespace

Dbn parse_dbn_unvalidated(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed document: ") + e.what());
    }
    try {
        return dbn_from_json(doc);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed document: ") + e.what());
    }
}

Dbn parse_dbn(const std::string& text) {
    Dbn dbn = parse_dbn_unvalidated(text);
    auto violations = validate_dbn(dbn);
    if (!violations.empty()) {
        std::string msg = "invalid DBN:";
        for (const auto& s : violations) msg += "\n  " + s;
        throw std::runtime_error(msg);
    }
    renormalize_rows(dbn);
    return dbn;
}

Dbn load_dbn(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_dbn(ss.str());
}

std::string serialize_dbn(const Dbn& dbn) {
    auto prob = [](double x) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return std::string(buf);
    };
    std::string out = "{\n";
    out += "  \"delta_t\": " + prob(dbn.delta_t) + ",\n";
    out += "  \"variables\": [\n";
    for (int i = 0; i < dbn.var_count(); ++i) {
        out += "    {\"name\": \"" + dbn.variables[i].name + "\", \"states\": [";
        for (size_t s = 0; s < dbn.variables[i].states.size(); ++s) {
            if (s) out += ", ";
            out += "\"" + dbn.variables[i].states[s] + "\"";
        }
        out += "]}";
        out += (i + 1 < dbn.var_count()) ? ",\n" : "\n";
    }
    out += "  ],\n";
    auto edges_json = [&](const std::vector<std::pair<int, int>>& edges) {
        std::string s = "[";
        for (size_t i = 0; i < edges.size(); ++i) {
            if (i) s += ", ";
            s += "[\"" + dbn.variables[edges[i].first].name + "\", \"" +
                 dbn.variables[edges[i].second].name + "\"]";
        }
        return s + "]";
    };
    out += "  \"intra_edges\": " + edges_json(dbn.intra_edges) + ",\n";
    out += "  \"inter_edges\": " + edges_json(dbn.inter_edges) + ",\n";
    out += "  \"slices\": [\n";
    for (size_t k = 0; k < dbn.slices.size(); ++k) {
        out += "    {\"k\": " + std::to_string(k) + ", \"cpts\": {\n";
        for (int i = 0; i < dbn.var_count(); ++i) {
            const Cpt& cpt = dbn.slices[k][i];
            out += "      \"" + dbn.variables[i].name + "\": {\"parents\": [";
            for (size_t p = 0; p < cpt.parents.size(); ++p) {
                if (p) out += ", ";
                out += "\"" + parent_token(dbn, cpt.parents[p]) + "\"";
            }
            out += "], \"rows\": [";
            for (size_t r = 0; r < cpt.rows.size(); ++r) {
                if (r) out += ", ";
                out += "[";
                for (size_t x = 0; x < cpt.rows[r].size(); ++x) {
                    if (x) out += ", ";
                    out += prob(cpt.rows[r][x]);
                }
                out += "]";
            }
            out += "]}";
            out += (i + 1 < dbn.var_count()) ? ",\n" : "\n";
        }
        out += "    }}";
        out += (k + 1 < dbn.slices.size()) ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

} // namespace dbgp
