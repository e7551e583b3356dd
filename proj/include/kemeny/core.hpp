#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "kemeny/errors.hpp"

namespace kemeny {

using CandidateId = int;
using Score = std::int64_t;

// Candidate subsets are bit sets over ids 0..m-1, so profiles are capped at
// one machine word worth of candidates.
using Mask = std::uint64_t;
inline constexpr int kMaxCandidates = 64;

inline constexpr Mask mask_of(CandidateId id) { return Mask{1} << id; }

inline constexpr Mask full_mask(int m) {
    return m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1;
}

inline int mask_size(Mask s) { return std::popcount(s); }

// Calls fn(id) for every id in the set, in increasing order.
template <typename Fn>
void for_each_in_mask(Mask s, Fn&& fn) {
    while (s != 0) {
        fn(static_cast<CandidateId>(std::countr_zero(s)));
        s &= s - 1;
    }
}

struct Candidate {
    CandidateId id = 0;
    std::string name;

    bool operator==(const Candidate&) const = default;
};

// A full ranking of all m candidates; position in `order` is the rank,
// rank 0 is best.
struct Ranking {
    std::vector<CandidateId> order;

    int size() const { return static_cast<int>(order.size()); }

    // rank_by_id[u] = rank of candidate u.
    std::vector<int> ranks() const {
        std::vector<int> rank_by_id(order.size());
        for (int r = 0; r < size(); ++r) rank_by_id[order[r]] = r;
        return rank_by_id;
    }

    bool operator==(const Ranking&) const = default;
};

struct Profile {
    std::vector<Candidate> candidates;
    std::vector<Ranking> rankings;

    int num_candidates() const { return static_cast<int>(candidates.size()); }
    int num_agents() const { return static_cast<int>(rankings.size()); }

    const std::string& name_of(CandidateId id) const {
        if (id < 0 || id >= num_candidates())
            throw UnknownCandidate("id " + std::to_string(id));
        return candidates[id].name;
    }

    bool operator==(const Profile&) const = default;
};

// weights[u][v] = number of agents ranking u above v.
struct PreferenceGraph {
    int m = 0;
    std::vector<Score> weights;  // row-major m*m

    Score weight(CandidateId u, CandidateId v) const {
        return weights[static_cast<std::size_t>(u) * m + v];
    }

    Score& weight(CandidateId u, CandidateId v) {
        return weights[static_cast<std::size_t>(u) * m + v];
    }
};

// Builds a Profile from raw name sequences. Candidate ids are assigned in
// order of first appearance in the first ranking, which keeps ids
// deterministic regardless of how the input file was produced.
inline Profile validate_profile(const std::vector<std::vector<std::string>>& raw_rankings) {
    if (raw_rankings.empty()) throw EmptyProfile();

    const auto& first = raw_rankings.front();
    std::unordered_map<std::string, CandidateId> id_by_name;
    Profile profile;
    for (const auto& name : first) {
        if (name.empty()) throw NotAPermutation("empty candidate name");
        auto [it, inserted] = id_by_name.emplace(name, static_cast<CandidateId>(profile.candidates.size()));
        if (!inserted) throw NotAPermutation("duplicate candidate \"" + name + "\"");
        profile.candidates.push_back({it->second, name});
    }
    const int m = profile.num_candidates();
    if (m > kMaxCandidates) throw TooManyCandidates(m, kMaxCandidates);

    for (const auto& raw : raw_rankings) {
        Ranking ranking;
        ranking.order.reserve(raw.size());
        Mask seen = 0;
        for (const auto& name : raw) {
            auto it = id_by_name.find(name);
            if (it == id_by_name.end())
                throw InconsistentCandidateSets("candidate \"" + name +
                                                "\" does not appear in the first ranking");
            if (seen & mask_of(it->second))
                throw NotAPermutation("duplicate candidate \"" + name + "\"");
            seen |= mask_of(it->second);
            ranking.order.push_back(it->second);
        }
        if (ranking.size() != m)
            throw InconsistentCandidateSets("ranking has " + std::to_string(ranking.size()) +
                                            " candidates, expected " + std::to_string(m));
        profile.rankings.push_back(std::move(ranking));
    }
    return profile;
}

inline PreferenceGraph build_preference_graph(const Profile& profile) {
    const int m = profile.num_candidates();
    PreferenceGraph graph;
    graph.m = m;
    graph.weights.assign(static_cast<std::size_t>(m) * m, 0);
    for (const auto& ranking : profile.rankings) {
        for (int above = 0; above < m; ++above) {
            for (int below = above + 1; below < m; ++below) {
                ++graph.weight(ranking.order[above], ranking.order[below]);
            }
        }
    }
    return graph;
}

}  // namespace kemeny
