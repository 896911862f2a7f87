#pragma once

#include <random>
#include <span>
#include <vector>

#include <greedyls/matcore.hpp>

namespace greedyls {

/// Random source owned by a single solve. The engine is fully specified by
/// the standard, so a seed reproduces the same stream everywhere.
using Rng = std::mt19937_64;

struct SelectionParams
{
    double theta = 0.5;

    void validate() const;
};

/// Greedy working set: strictly increasing, nonempty column indices.
class IndexSet
{
public:
    explicit IndexSet(std::vector<Index> indices);

    std::span<const Index> indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool contains(Index j) const;

    auto begin() const noexcept { return indices_.begin(); }
    auto end() const noexcept { return indices_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<Index> indices_;
};

/// Per-column greedy scores |s_j|^2 / ||A_(j)||^2 for one correlation vector.
///
/// Computed once per iteration; the threshold and the membership test both
/// read from it.
struct GreedyScores
{
    Vector ratios;
    double max_ratio = 0.0;
    Index argmax = 0;
    /// ||s||^2
    double correlation_norm_sq = 0.0;
};

/// Throws ContractViolation when s is the zero vector: a zero correlation
/// means the normal equations are solved and the caller must stop first.
GreedyScores greedy_scores(std::span<const double> s, const ColumnNormCache& norms);

/// theta * max_j(ratio_j) / ||s||^2 + (1 - theta) / ||A||_F^2
double epsilon_k(const GreedyScores& scores, double frob_sq, double theta);
double epsilon_k(std::span<const double> s, const ColumnNormCache& norms, double theta);

/// The GRCD threshold; identical to epsilon_k at theta = 1/2.
double delta_k(const GreedyScores& scores, double frob_sq);
double delta_k(std::span<const double> s, const ColumnNormCache& norms);

/// Relative slack on the membership comparison. Exact ties in real
/// arithmetic (equal scores, theta = 1) survive rounding of the threshold.
inline constexpr double membership_tie_slack = 16.0 * 2.220446049250313e-16;

/// All j with |s_j|^2 >= threshold * ||s||^2 * ||A_(j)||^2 (inclusive).
/// The argmax-score column always qualifies; an empty result raises
/// InvariantViolation.
IndexSet greedy_index_set(const GreedyScores& scores, double threshold);
IndexSet greedy_index_set(std::span<const double> s, const ColumnNormCache& norms, double threshold);

/// Draws j from the set with probability |s_j|^2 / sum_{i in set} |s_i|^2.
/// s is the full correlation vector; only entries in the set are read.
Index sample_index(const IndexSet& set, std::span<const double> s, Rng& rng);

} // namespace greedyls
