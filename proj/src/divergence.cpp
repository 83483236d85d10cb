#include "dbgp/divergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dbgp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_pair(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw std::invalid_argument("divergence: length mismatch");
    if (p.empty())
        throw std::invalid_argument("divergence: empty distributions");
    for (auto v : {p, q}) {
        double sum = 0.0;
        for (double x : v) {
            if (x < 0.0 || !std::isfinite(x))
                throw std::invalid_argument("divergence: negative entry");
            sum += x;
        }
        if (std::fabs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("divergence: input is not a probability vector");
    }
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
    return 0.5 * s;
}

// Jeffreys sum D(p||q) + D(q||p); infinite when the supports differ.
double symmetrized_kl(std::span<const double> p, std::span<const double> q) {
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            if (q[i] == 0.0) return kInf;
            s += p[i] * std::log(p[i] / q[i]);
        }
        if (q[i] > 0.0) {
            if (p[i] == 0.0) return kInf;
            s += q[i] * std::log(q[i] / p[i]);
        }
    }
    return std::max(s, 0.0);
}

double hellinger(std::span<const double> p, std::span<const double> q) {
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        double d = std::sqrt(p[i]) - std::sqrt(q[i]);
        s += d * d;
    }
    return std::sqrt(0.5 * s);
}

double bhattacharyya(std::span<const double> p, std::span<const double> q) {
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) s += std::sqrt(p[i] * q[i]);
    if (s == 0.0) return kInf;
    return std::max(-std::log(s), 0.0);
}

} // namespace

DivergenceKind divergence_from_name(const std::string& name) {
    if (name == "tv" || name == "total_variation") return DivergenceKind::total_variation;
    if (name == "kl" || name == "symmetrized_kl") return DivergenceKind::symmetrized_kl;
    if (name == "hellinger") return DivergenceKind::hellinger;
    if (name == "bhattacharyya") return DivergenceKind::bhattacharyya;
    throw std::invalid_argument("unknown divergence: " + name);
}

std::string divergence_name(DivergenceKind kind) {
    switch (kind) {
    case DivergenceKind::total_variation: return "tv";
    case DivergenceKind::symmetrized_kl: return "kl";
    case DivergenceKind::hellinger: return "hellinger";
    case DivergenceKind::bhattacharyya: return "bhattacharyya";
    }
    return "?";
}

double divergence(DivergenceKind kind, std::span<const double> p, std::span<const double> q) {
    check_pair(p, q);
    switch (kind) {
    case DivergenceKind::total_variation: return total_variation(p, q);
    case DivergenceKind::symmetrized_kl: return symmetrized_kl(p, q);
    case DivergenceKind::hellinger: return hellinger(p, q);
    case DivergenceKind::bhattacharyya: return bhattacharyya(p, q);
    }
    throw std::logic_error("unreachable");
}

double upper_diameter(DivergenceKind kind, const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("upper_diameter: empty matrix");
    double best = 0.0;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j)
            best = std::max(best, divergence(kind, rows[i], rows[j]));
    return best;
}

double lower_diameter(DivergenceKind kind, const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("lower_diameter: empty matrix");
    if (rows.size() == 1) return 0.0;
    double best = kInf;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j)
            best = std::min(best, divergence(kind, rows[i], rows[j]));
    return best;
}

double mutual_information(const std::vector<std::vector<double>>& joint) {
    if (joint.empty() || joint.front().empty())
        throw std::invalid_argument("mutual_information: empty joint");
    const size_t nx = joint.size(), ny = joint.front().size();
    double total = 0.0;
    for (const auto& row : joint) {
        if (row.size() != ny) throw std::invalid_argument("mutual_information: ragged joint");
        for (double x : row) {
            if (x < 0.0 || !std::isfinite(x))
                throw std::invalid_argument("mutual_information: negative entry");
            total += x;
        }
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("mutual_information: joint does not sum to 1");

    std::vector<double> px(nx, 0.0), py(ny, 0.0);
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j) {
            px[i] += joint[i][j];
            py[j] += joint[i][j];
        }
    double mi = 0.0;
    for (size_t i = 0; i < nx; ++i)
        for (size_t j = 0; j < ny; ++j) {
            double p = joint[i][j];
            if (p > 0.0) mi += p * std::log(p / (px[i] * py[j]));
        }
    return std::max(mi, 0.0);
}

} // namespace dbgp
