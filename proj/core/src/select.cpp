#include <greedyls/select.hpp>

#include <algorithm>
#include <string>

namespace greedyls {

void SelectionParams::validate() const
{
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw ConfigError("theta must lie in [0, 1], got " + std::to_string(theta));
    }
}

IndexSet::IndexSet(std::vector<Index> indices) : indices_(std::move(indices))
{
    if (indices_.empty()) {
        throw ConstructionError("index set must be nonempty");
    }
    for (std::size_t p = 1; p < indices_.size(); ++p) {
        if (indices_[p] <= indices_[p - 1]) {
            throw ConstructionError("index set must be strictly increasing");
        }
    }
}

bool IndexSet::contains(Index j) const
{
    return std::binary_search(indices_.begin(), indices_.end(), j);
}

GreedyScores greedy_scores(std::span<const double> s, const ColumnNormCache& norms)
{
    if (s.size() != norms.col_norms_sq.size()) {
        throw DimensionError("correlation length does not match the column count");
    }
    GreedyScores scores;
    scores.ratios.resize(s.size());
    scores.max_ratio = -1.0;
    for (Index j = 0; j < s.size(); ++j) {
        const double sj2 = s[j] * s[j];
        scores.correlation_norm_sq += sj2;
        const double ratio = sj2 / norms.col_norms_sq[j];
        scores.ratios[j] = ratio;
        if (ratio > scores.max_ratio) {
            scores.max_ratio = ratio;
            scores.argmax = j;
        }
    }
    if (!(scores.correlation_norm_sq > 0.0)) {
        throw ContractViolation("greedy selection called with A^T r = 0");
    }
    return scores;
}

double epsilon_k(const GreedyScores& scores, double frob_sq, double theta)
{
    return theta * scores.max_ratio / scores.correlation_norm_sq + (1.0 - theta) / frob_sq;
}

double epsilon_k(std::span<const double> s, const ColumnNormCache& norms, double theta)
{
    return epsilon_k(greedy_scores(s, norms), norms.frob_sq, theta);
}

double delta_k(const GreedyScores& scores, double frob_sq) { return epsilon_k(scores, frob_sq, 0.5); }

double delta_k(std::span<const double> s, const ColumnNormCache& norms)
{
    return epsilon_k(s, norms, 0.5);
}

IndexSet greedy_index_set(const GreedyScores& scores, double threshold)
{
    // ratio_j >= threshold * ||s||^2 is the membership rule divided by ||A_(j)||^2
    const double cut = threshold * scores.correlation_norm_sq * (1.0 - membership_tie_slack);
    std::vector<Index> members;
    for (Index j = 0; j < scores.ratios.size(); ++j) {
        if (scores.ratios[j] >= cut) {
            members.push_back(j);
        }
    }
    if (members.empty() ||
        !std::binary_search(members.begin(), members.end(), scores.argmax)) {
        throw InvariantViolation("greedy index set lost the argmax column " +
                                 std::to_string(scores.argmax));
    }
    return IndexSet(std::move(members));
}

IndexSet greedy_index_set(std::span<const double> s, const ColumnNormCache& norms, double threshold)
{
    return greedy_index_set(greedy_scores(s, norms), threshold);
}

Index sample_index(const IndexSet& set, std::span<const double> s, Rng& rng)
{
    double total = 0.0;
    for (Index j : set) {
        total += s[j] * s[j];
    }
    if (!(total > 0.0)) {
        throw InvariantViolation("sampling from an index set whose correlations are all zero");
    }
    std::uniform_real_distribution<double> uniform(0.0, total);
    const double u = uniform(rng);
    double cumulative = 0.0;
    Index last_positive = set.indices().front();
    for (Index j : set) {
        const double w = s[j] * s[j];
        if (w > 0.0) {
            last_positive = j;
        }
        cumulative += w;
        if (u < cumulative) {
            return j;
        }
    }
    // u landed past the rounded cumulative sum
    return last_positive;
}

} // namespace greedyls
