#include "dbgp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dbgp/format.hpp"

namespace dbgp {

double bar_distance(const BarInterval& a, const BarInterval& b) {
    return std::max(std::fabs(a.birth - b.birth), std::fabs(a.death - b.death));
}

double deletion_cost(const BarInterval& a) {
    return 0.5 * (a.death - a.birth);
}

namespace {

// Feasibility of bottleneck value lambda via a perfect matching in the
// bipartite graph augmented with one diagonal slot per opposite bar.
class FeasibilityMatcher {
public:
    FeasibilityMatcher(const Barcode& a, const Barcode& b) : a_(a), b_(b) {
        na_ = static_cast<int>(a.bars.size());
        nb_ = static_cast<int>(b.bars.size());
    }

    bool feasible(double lambda) {
        lambda_ = lambda;
        match_left_.assign(na_ + nb_, -1);
        match_right_.assign(nb_ + na_, -1);
        int matched = 0;
        for (int u = 0; u < na_ + nb_; ++u) {
            seen_.assign(nb_ + na_, false);
            if (augment(u)) ++matched;
        }
        return matched == na_ + nb_;
    }

    // Valid after a successful feasible() call.
    Matching extract() const {
        Matching m;
        m.cost = 0.0;
        for (int u = 0; u < na_; ++u) {
            int v = match_left_[u];
            if (v >= 0 && v < nb_) {
                m.pairs.emplace_back(u, v);
                m.cost = std::max(m.cost, bar_distance(a_.bars[u], b_.bars[v]));
            } else {
                m.unmatched_a.push_back(u);
                m.cost = std::max(m.cost, deletion_cost(a_.bars[u]));
            }
        }
        for (int v = 0; v < nb_; ++v)
            if (match_right_[v] < 0 || match_right_[v] >= na_) {
                m.unmatched_b.push_back(v);
                m.cost = std::max(m.cost, deletion_cost(b_.bars[v]));
            }
        return m;
    }

private:
    // Left nodes: bars of A then diagonal slots for B. Right nodes: bars of
    // B then diagonal slots for A. Diagonal-diagonal is always allowed.
    bool edge(int u, int v) const {
        const bool u_real = u < na_;
        const bool v_real = v < nb_;
        if (u_real && v_real) return bar_distance(a_.bars[u], b_.bars[v]) <= lambda_;
        if (u_real) return deletion_cost(a_.bars[u]) <= lambda_;
        if (v_real) return deletion_cost(b_.bars[v]) <= lambda_;
        return true;
    }

    bool augment(int u) {
        for (int v = 0; v < nb_ + na_; ++v) {
            if (seen_[v] || !edge(u, v)) continue;
            seen_[v] = true;
            if (match_right_[v] == -1 || augment(match_right_[v])) {
                match_right_[v] = u;
                match_left_[u] = v;
                return true;
            }
        }
        return false;
    }

    const Barcode& a_;
    const Barcode& b_;
    int na_ = 0, nb_ = 0;
    double lambda_ = 0.0;
    std::vector<int> match_left_, match_right_;
    std::vector<bool> seen_;
};

std::vector<double> candidate_values(const Barcode& a, const Barcode& b) {
    std::vector<double> cand{0.0};
    for (const auto& x : a.bars) {
        cand.push_back(deletion_cost(x));
        for (const auto& y : b.bars) cand.push_back(bar_distance(x, y));
    }
    for (const auto& y : b.bars) cand.push_back(deletion_cost(y));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    return cand;
}

} // namespace

Matching bottleneck_matching(const Barcode& a, const Barcode& b) {
    auto cand = candidate_values(a, b);
    FeasibilityMatcher matcher(a, b);
    size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) { // smallest feasible candidate; the largest always is
        size_t mid = (lo + hi) / 2;
        if (matcher.feasible(cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    matcher.feasible(cand[lo]);
    return matcher.extract();
}

double bottleneck_distance(const Barcode& a, const Barcode& b) {
    if (a.bars.empty() && b.bars.empty()) return 0.0;
    return bottleneck_matching(a, b).cost;
}

namespace {

double exhaustive_rec(const Barcode& a, const Barcode& b, size_t i, std::vector<bool>& used) {
    if (i == a.bars.size()) {
        double cost = 0.0;
        for (size_t j = 0; j < b.bars.size(); ++j)
            if (!used[j]) cost = std::max(cost, deletion_cost(b.bars[j]));
        return cost;
    }
    // delete bar i
    double best = std::max(deletion_cost(a.bars[i]), exhaustive_rec(a, b, i + 1, used));
    // or match it to any unused bar of b
    for (size_t j = 0; j < b.bars.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        best = std::min(best, std::max(bar_distance(a.bars[i], b.bars[j]),
                                       exhaustive_rec(a, b, i + 1, used)));
        used[j] = false;
    }
    return best;
}

} // namespace

double exhaustive_bottleneck(const Barcode& a, const Barcode& b) {
    if (a.bars.size() > 8 || b.bars.size() > 8)
        throw std::invalid_argument("exhaustive_bottleneck: too many bars");
    std::vector<bool> used(b.bars.size(), false);
    return exhaustive_rec(a, b, 0, used);
}

double interleaving_lower_bound(const Barcode& a, const Barcode& b) {
    return 0.5 * bottleneck_distance(a, b);
}

StabilityReport stability_check(const Formigram& fg, double eps) {
    StabilityReport report;
    report.eps = eps;
    report.bound = eps;
    Barcode base = zigzag_barcode(fg);
    Barcode smoothed = zigzag_barcode(smooth_formigram(fg, eps));
    report.lhs = bottleneck_distance(smoothed, base);
    report.pass = report.lhs <= eps + 1e-9;
    return report;
}

StabilityReport stability_check(const DynamicBayesianGraph& dbg, double eps) {
    return stability_check(formigram_of(dbg), eps);
}

std::string serialize_matching(const Matching& m, const Barcode& a, const Barcode& b) {
    std::string out = "{\"cost\": " + json_real(m.cost) + ", \"pairs\": [";
    for (size_t i = 0; i < m.pairs.size(); ++i) {
        if (i) out += ", ";
        auto [x, y] = m.pairs[i];
        out += "{\"a\": " + std::to_string(x) + ", \"b\": " + std::to_string(y) +
               ", \"cost\": " + json_real(bar_distance(a.bars[x], b.bars[y])) + "}";
    }
    out += "], \"unmatched_a\": [";
    for (size_t i = 0; i < m.unmatched_a.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(m.unmatched_a[i]);
    }
    out += "], \"unmatched_b\": [";
    for (size_t i = 0; i < m.unmatched_b.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(m.unmatched_b[i]);
    }
    out += "]}";
    return out;
}

} // namespace dbgp
