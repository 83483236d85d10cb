#include "dbgp/formigram.hpp"

#include <algorithm>
#include <stdexcept>

#include "dbgp/format.hpp"

namespace dbgp {

Partition path_components(int n, const EdgeSet& edges) {
    UnionFind uf(n);
    for (auto [u, v] : edges) uf.unite(u, v);
    return partition_from_union_find(uf);
}

Partition Formigram::value_at(double t) const {
    if (t < 0.0 || t > t_end) throw std::out_of_range("formigram value: t outside [0, t_end]");
    auto it = std::lower_bound(crit_times.begin(), crit_times.end(), t);
    size_t i = static_cast<size_t>(it - crit_times.begin());
    if (it != crit_times.end() && *it == t) return crit_parts[i];
    return interval_parts[i];
}

std::vector<std::string> check_formigram(const Formigram& fg) {
    std::vector<std::string> v;
    const size_t m = fg.crit_times.size();
    if (fg.interval_parts.size() != m + 1 || fg.crit_parts.size() != m) {
        v.push_back("piece counts inconsistent with critical time count");
        return v;
    }
    const int n = fg.ground_size();
    for (const auto& p : fg.interval_parts)
        if (p.ground_size() != n) v.push_back("interval partition does not cover the ground set");
    for (const auto& p : fg.crit_parts)
        if (p.ground_size() != n) v.push_back("critical partition does not cover the ground set");
    if (!v.empty()) return v;

    for (size_t i = 0; i < m; ++i) {
        if (fg.crit_times[i] <= 0.0 || fg.crit_times[i] >= fg.t_end)
            v.push_back("critical time " + fmt_real(fg.crit_times[i]) + " outside (0, t_end)");
        if (i + 1 < m && !(fg.crit_times[i] < fg.crit_times[i + 1]))
            v.push_back("critical times not strictly increasing");
        if (!refines(fg.interval_parts[i], fg.crit_parts[i]))
            v.push_back("left interval does not refine the partition at t = " + fmt_real(fg.crit_times[i]));
        if (!refines(fg.interval_parts[i + 1], fg.crit_parts[i]))
            v.push_back("right interval does not refine the partition at t = " + fmt_real(fg.crit_times[i]));
        if (fg.interval_parts[i] == fg.crit_parts[i] && fg.crit_parts[i] == fg.interval_parts[i + 1])
            v.push_back("critical time with no partition change at t = " + fmt_real(fg.crit_times[i]));
    }
    return v;
}

// Drops critical times where nothing changes and merges the equal intervals
// around them.
Formigram compress_formigram(Formigram fg) {
    Formigram out;
    out.labels = std::move(fg.labels);
    out.t_end = fg.t_end;
    out.interval_parts.push_back(fg.interval_parts[0]);
    for (size_t i = 0; i < fg.crit_times.size(); ++i) {
        if (fg.interval_parts[i] == fg.crit_parts[i] &&
            fg.crit_parts[i] == fg.interval_parts[i + 1])
            continue;
        out.crit_times.push_back(fg.crit_times[i]);
        out.crit_parts.push_back(fg.crit_parts[i]);
        out.interval_parts.push_back(fg.interval_parts[i + 1]);
    }
    return out;
}

Formigram formigram_of(const PiecewiseDynamicGraph& g) {
    Formigram fg;
    fg.labels = g.labels;
    fg.t_end = g.t_end;
    fg.crit_times = g.crit_times;
    const int n = g.var_count();
    for (const auto& e : g.interval_edges) fg.interval_parts.push_back(path_components(n, e));
    for (const auto& e : g.crit_edges) fg.crit_parts.push_back(path_components(n, e));
    return compress_formigram(std::move(fg));
}

Formigram formigram_of(const DynamicBayesianGraph& dbg) {
    return formigram_of(to_piecewise(dbg));
}

std::vector<Event> detect_events(const Formigram& fg) {
    std::vector<Event> events;
    auto emit = [&](double t, Event::Kind kind, const Partition& fine, const Partition& coarse) {
        // Group the fine blocks by the coarse block containing them.
        auto fine_blocks = fine.blocks();
        std::vector<std::vector<int>> grouped(coarse.block_count());
        for (int b = 0; b < static_cast<int>(fine_blocks.size()); ++b)
            grouped[coarse.block_of[fine_blocks[b].front()]].push_back(b);
        auto coarse_blocks = coarse.blocks();
        for (int c = 0; c < static_cast<int>(grouped.size()); ++c) {
            const auto& members = grouped[c];
            for (size_t x = 0; x < members.size(); ++x)
                for (size_t y = x + 1; y < members.size(); ++y) {
                    Event ev;
                    ev.time = t;
                    ev.kind = kind;
                    if (kind == Event::Kind::merge) {
                        ev.blocks_before = {fine_blocks[members[x]], fine_blocks[members[y]]};
                        ev.blocks_after = {coarse_blocks[c]};
                    } else {
                        ev.blocks_before = {coarse_blocks[c]};
                        ev.blocks_after = {fine_blocks[members[x]], fine_blocks[members[y]]};
                    }
                    events.push_back(std::move(ev));
                }
        }
    };
    for (size_t i = 0; i < fg.crit_times.size(); ++i) {
        emit(fg.crit_times[i], Event::Kind::merge, fg.interval_parts[i], fg.crit_parts[i]);
        emit(fg.crit_times[i], Event::Kind::disband, fg.interval_parts[i + 1], fg.crit_parts[i]);
    }
    return events;
}

namespace {

// Finest common coarsening over [t-eps, t+eps] clipped to the domain: an
// interval piece participates iff the window meets its interior, a critical
// partition iff its time lies in the closed window.
Partition window_join(const Formigram& fg, double t, double eps) {
    const double lo = t - eps, hi = t + eps;
    std::vector<Partition> parts;
    const size_t m = fg.crit_times.size();
    for (size_t i = 0; i <= m; ++i) {
        double l = i == 0 ? 0.0 : fg.crit_times[i - 1];
        double r = i == m ? fg.t_end : fg.crit_times[i];
        bool meets = l < hi && lo < r;
        if (i == 0 && hi >= 0.0 && lo <= 0.0) meets = true;
        if (i == m && hi >= fg.t_end && lo <= fg.t_end) meets = true;
        if (meets) parts.push_back(fg.interval_parts[i]);
    }
    for (size_t i = 0; i < m; ++i)
        if (lo <= fg.crit_times[i] && fg.crit_times[i] <= hi) parts.push_back(fg.crit_parts[i]);
    return finest_common_coarsening(parts);
}

} // namespace

Formigram smooth_formigram(const Formigram& fg, double eps) {
    if (eps < 0.0) throw std::invalid_argument("smooth_formigram: eps must be nonnegative");

    std::vector<double> cand;
    for (double c : fg.crit_times) {
        if (c - eps > 0.0 && c - eps < fg.t_end) cand.push_back(c - eps);
        if (c + eps > 0.0 && c + eps < fg.t_end) cand.push_back(c + eps);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    Formigram out;
    out.labels = fg.labels;
    out.t_end = fg.t_end;
    out.crit_times = cand;
    for (double c : cand) out.crit_parts.push_back(window_join(fg, c, eps));
    for (size_t i = 0; i <= cand.size(); ++i) {
        double l = i == 0 ? 0.0 : cand[i - 1];
        double r = i == cand.size() ? fg.t_end : cand[i];
        out.interval_parts.push_back(window_join(fg, 0.5 * (l + r), eps));
    }
    return compress_formigram(std::move(out));
}

std::string serialize_formigram(const Formigram& fg) {
    auto blocks_json = [&](const Partition& p) {
        std::vector<std::vector<std::string>> named;
        for (const auto& blk : p.blocks()) {
            std::vector<std::string> names;
            for (int x : blk) names.push_back(fg.labels[x]);
            std::sort(names.begin(), names.end());
            named.push_back(std::move(names));
        }
        std::sort(named.begin(), named.end());
        std::string s = "[";
        for (size_t b = 0; b < named.size(); ++b) {
            if (b) s += ", ";
            s += "[";
            for (size_t x = 0; x < named[b].size(); ++x) {
                if (x) s += ", ";
                s += json_quote(named[b][x]);
            }
            s += "]";
        }
        return s + "]";
    };

    std::string out = "{\"times\": [";
    for (size_t i = 0; i < fg.crit_times.size(); ++i) {
        if (i) out += ", ";
        out += json_real(fg.crit_times[i]);
    }
    out += "], \"partitions\": {";
    out += "\"interval_0\": " + blocks_json(fg.interval_parts[0]);
    for (size_t i = 0; i < fg.crit_times.size(); ++i) {
        out += ", \"crit_" + std::to_string(i + 1) + "\": " + blocks_json(fg.crit_parts[i]);
        out += ", \"interval_" + std::to_string(i + 1) + "\": " + blocks_json(fg.interval_parts[i + 1]);
    }
    out += "}}\n";
    return out;
}

} // namespace dbgp
