#ifndef DBGP_DIVERGENCE_HPP
#define DBGP_DIVERGENCE_HPP

#include <span>
#include <string>
#include <vector>

namespace dbgp {

// Pairwise distribution divergences. All are symmetric as implemented and
// vanish on identical inputs; symmetrized KL and Bhattacharyya may be +inf
// when supports differ.
enum class DivergenceKind {
    total_variation,
    symmetrized_kl,
    hellinger,
    bhattacharyya,
};

// Parses "tv" | "kl" | "hellinger" | "bhattacharyya"; throws on anything else.
DivergenceKind divergence_from_name(const std::string& name);
std::string divergence_name(DivergenceKind kind);

double divergence(DivergenceKind kind, std::span<const double> p, std::span<const double> q);

// Max / min divergence over distinct row pairs of a stochastic matrix;
// 0 for a single-row matrix (empty max/min). Throws on an empty matrix.
double upper_diameter(DivergenceKind kind, const std::vector<std::vector<double>>& rows);
double lower_diameter(DivergenceKind kind, const std::vector<std::vector<double>>& rows);

// Mutual information of a joint distribution over X x Y, natural log,
// 0*log 0 = 0. Throws unless entries are nonnegative and sum to 1 within 1e-9.
double mutual_information(const std::vector<std::vector<double>>& joint);

} // namespace dbgp

#endif
