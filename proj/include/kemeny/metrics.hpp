#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kemeny/core.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

// Window parameter of the dynamic program: d = ceil(d_ave) where d_ave is the
// average pairwise Kendall-Tau distance between the input rankings.
struct WindowParameter {
    Rational d_ave{0};
    int d = 0;
};

// Number of unordered candidate pairs the two rankings order oppositely.
inline Score kendall_tau(const Ranking& r1, const Ranking& r2) {
    if (r1.size() != r2.size())
        throw MismatchedCandidates("sizes " + std::to_string(r1.size()) + " and " +
                                   std::to_string(r2.size()));
    const auto rank1 = r1.ranks();
    const auto rank2 = r2.ranks();
    const int m = r1.size();
    Score disagreements = 0;
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) {
            const bool u_first_1 = rank1[u] < rank1[v];
            const bool u_first_2 = rank2[u] < rank2[v];
            if (u_first_1 != u_first_2) ++disagreements;
        }
    }
    return disagreements;
}

// Sum of Kendall-Tau distances from t to every ranking in the profile.
inline Score kemeny_score(const Ranking& t, const Profile& profile) {
    if (t.size() != profile.num_candidates())
        throw MismatchedCandidates("ranking has " + std::to_string(t.size()) +
                                   " candidates, profile has " +
                                   std::to_string(profile.num_candidates()));
    Score total = 0;
    for (const auto& ranking : profile.rankings) total += kendall_tau(t, ranking);
    return total;
}

// Same score computed from the preference graph: every pair t orders (u above
// v) is contradicted by exactly weight(v, u) agents.
inline Score kemeny_score_from_graph(const Ranking& t, const PreferenceGraph& graph) {
    if (t.size() != graph.m)
        throw MismatchedCandidates("ranking has " + std::to_string(t.size()) +
                                   " candidates, graph has " + std::to_string(graph.m));
    Score total = 0;
    for (int above = 0; above < graph.m; ++above) {
        for (int below = above + 1; below < graph.m; ++below) {
            total += graph.weight(t.order[below], t.order[above]);
        }
    }
    return total;
}

inline Rational average_rank(const Profile& profile, CandidateId u) {
    if (u < 0 || u >= profile.num_candidates())
        throw UnknownCandidate("id " + std::to_string(u));
    std::int64_t rank_sum = 0;
    for (const auto& ranking : profile.rankings) rank_sum += ranking.ranks()[u];
    return Rational(rank_sum, profile.num_agents());
}

// A single ranking is trivially its own consensus, so n = 1 yields d = 0.
inline WindowParameter average_kt_distance(const Profile& profile) {
    const int n = profile.num_agents();
    if (n < 2) return {};
    std::int64_t pair_sum = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            pair_sum += kendall_tau(profile.rankings[a], profile.rankings[b]);
        }
    }
    WindowParameter param;
    param.d_ave = Rational(2 * pair_sum, static_cast<std::int64_t>(n) * (n - 1));
    param.d = static_cast<int>(ceil_rational(param.d_ave));
    return param;
}

// Partial Kemeny score pK(u, R): the number of (agent, u') pairs with u' in R
// that contradict placing u above everything in R.
inline Score partial_kemeny(const Profile& profile, CandidateId u, Mask subset) {
    const int m = profile.num_candidates();
    if (u < 0 || u >= m) throw UnknownCandidate("id " + std::to_string(u));
    if (subset & ~full_mask(m))
        throw UnknownCandidate("subset contains ids outside 0.." + std::to_string(m - 1));
    if (subset & mask_of(u)) throw CandidateInSubset(u);
    Score total = 0;
    for (const auto& ranking : profile.rankings) {
        const auto rank = ranking.ranks();
        for_each_in_mask(subset, [&](CandidateId v) {
            if (rank[v] < rank[u]) ++total;
        });
    }
    return total;
}

// All input rankings with their distance to the consensus, closest first;
// ties keep input order.
inline std::vector<std::pair<int, Score>> closest_rankings(const Profile& profile,
                                                           const Ranking& consensus) {
    std::vector<std::pair<int, Score>> result;
    result.reserve(profile.rankings.size());
    for (int a = 0; a < profile.num_agents(); ++a) {
        result.emplace_back(a, kendall_tau(consensus, profile.rankings[a]));
    }
    std::sort(result.begin(), result.end(),
              [](const auto& lhs, const auto& rhs) {
                  return lhs.second != rhs.second ? lhs.second < rhs.second
                                                  : lhs.first < rhs.first;
              });
    return result;
}

// Every ranking's Kemeny score is at least the sum over pairs of the smaller
// direction weight, whichever way the pair is ordered.
inline Score pairwise_lower_bound(const PreferenceGraph& graph) {
    Score bound = 0;
    for (int u = 0; u < graph.m; ++u) {
        for (int v = u + 1; v < graph.m; ++v) {
            bound += std::min(graph.weight(u, v), graph.weight(v, u));
        }
    }
    return bound;
}

}  // namespace kemeny
