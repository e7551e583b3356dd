#pragma once

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "kemeny/core.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/metrics.hpp"
#include "kemeny/result.hpp"
#include "kemeny/windows.hpp"

namespace kemeny {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{1} << 30;  // 1 GiB
inline constexpr int kBruteForceLimit = 10;

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

struct DpEntry {
    Score score = std::numeric_limits<Score>::max();
    std::int16_t pred = -1;
};

// pK(u, U \ {u}): agents preferring any other candidate over u.
inline Score pk_against_rest(const PreferenceGraph& graph, CandidateId u) {
    Score total = 0;
    for (CandidateId v = 0; v < graph.m; ++v) {
        if (v != u) total += graph.weight(v, u);
    }
    return total;
}

inline double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

}  // namespace detail

// Worst-case table size in bytes, O(2^{4d} * d * m) with the exponent capped
// at m and two bytes per entry. Deliberately the coarse planning figure, not
// the real per-entry footprint; dp_kemeny reports the latter separately.
inline std::uint64_t estimate_table_size(int m, std::int64_t d) {
    if (m < 1) return 0;
    if (d < 0) d = 0;
    const std::int64_t exponent = d >= m ? m : std::min<std::int64_t>(4 * d, m);
    std::uint64_t bytes = exponent >= 64 ? std::numeric_limits<std::uint64_t>::max()
                                         : std::uint64_t{1} << exponent;
    bytes = detail::saturating_mul(bytes, static_cast<std::uint64_t>(std::max<std::int64_t>(d, 1)));
    bytes = detail::saturating_mul(bytes, static_cast<std::uint64_t>(m));
    bytes = detail::saturating_mul(bytes, 2);
    return bytes;
}

// Exact Kemeny consensus via dynamic programming over rank windows.
//
// A state (i, u, mask) means: u sits at rank i, mask holds the still-eligible
// candidates placed at ranks above i, and forgotten_cum[i] | mask is the full
// above-set, which must have exactly i members. The stored score is the
// minimum sum of partial Kemeny scores over all orderings of that above-set,
// and pred is the rank-(i-1) candidate of one minimizing ordering.
inline KemenyResult dp_kemeny(const Profile& profile,
                              std::uint64_t memory_budget = kDefaultMemoryBudget) {
    const auto start = std::chrono::steady_clock::now();
    const int m = profile.num_candidates();
    if (m > kMaxCandidates) throw TooManyCandidates(m, kMaxCandidates);
    if (profile.num_agents() < 1) throw EmptyProfile();

    KemenyResult result;
    const WindowParameter param = average_kt_distance(profile);

    if (param.d == 0) {
        // d_ave = 0 means every ranking is identical; the window arithmetic
        // would be degenerate, and the shared ranking is trivially optimal.
        result.consensus = profile.rankings.front();
        result.score = 0;
        result.stats.estimated_bytes = estimate_table_size(m, 0);
        result.stats.elapsed_ms = detail::elapsed_ms_since(start);
        return result;
    }

    result.stats.estimated_bytes = estimate_table_size(m, param.d);
    if (result.stats.estimated_bytes > memory_budget)
        throw MemoryBudgetExceeded(result.stats.estimated_bytes, memory_budget);

    const PreferenceGraph graph = build_preference_graph(profile);
    const RankWindows windows = compute_rank_windows(profile, param);
    result.stats.max_rank_window = windows.max_eligible;

    std::vector<Score> pk_rest(m);
    for (CandidateId u = 0; u < m; ++u) pk_rest[u] = detail::pk_against_rest(graph, u);

    std::vector<std::vector<std::unordered_map<Mask, detail::DpEntry>>> table(
        m, std::vector<std::unordered_map<Mask, detail::DpEntry>>(m));

    // T(0, u, {}) = pK(u, U \ {u})
    for_each_in_mask(windows.eligible[0], [&](CandidateId u) {
        table[0][u][Mask{0}] = {pk_rest[u], -1};
    });

    for (int i = 1; i < m; ++i) {
        const Mask forgotten_now = windows.forgotten[i];
        for_each_in_mask(windows.eligible[i - 1], [&](CandidateId prev) {
            for (const auto& [prev_mask, prev_entry] : table[i - 1][prev]) {
                const Mask placed =
                    windows.forgotten_cum[i - 1] | prev_mask | mask_of(prev);
                // Candidates leaving the window at rank i must already be
                // placed, otherwise this state cannot be extended.
                if (forgotten_now & ~placed) continue;
                const Mask mask = (prev_mask | mask_of(prev)) & ~forgotten_now;
                assert((windows.forgotten_cum[i] | mask) == placed);
                assert(mask_size(placed) == i);
                for_each_in_mask(windows.eligible[i] & ~placed, [&](CandidateId u) {
                    // pK(u, below) = pK(u, U \ {u}) - pK(u, placed)
                    Score cost = prev_entry.score + pk_rest[u];
                    for_each_in_mask(placed, [&](CandidateId v) {
                        cost -= graph.weight(v, u);
                    });
                    auto& entry = table[i][u][mask];
                    if (cost < entry.score ||
                        (cost == entry.score && prev < entry.pred)) {
                        entry = {cost, static_cast<std::int16_t>(prev)};
                    }
                });
            }
        });
    }

    // K-score = min over u in R_{m-1} of T(m-1, u, R_{m-1} \ {u}); ties go to
    // the smallest candidate id for a deterministic consensus.
    Score best_score = std::numeric_limits<Score>::max();
    CandidateId best_u = -1;
    for_each_in_mask(windows.eligible[m - 1], [&](CandidateId u) {
        const Mask final_mask = windows.eligible[m - 1] & ~mask_of(u);
        const auto it = table[m - 1][u].find(final_mask);
        if (it != table[m - 1][u].end() && it->second.score < best_score) {
            best_score = it->second.score;
            best_u = u;
        }
    });
    if (best_u < 0) throw std::logic_error("rank windows admit no complete ranking");

    // Traceback through the stored predecessors.
    std::vector<CandidateId> order(m);
    CandidateId u = best_u;
    Mask mask = windows.eligible[m - 1] & ~mask_of(best_u);
    for (int i = m - 1; i > 0; --i) {
        order[i] = u;
        const detail::DpEntry entry = table[i][u].at(mask);
        assert(entry.pred >= 0);
        mask = (mask | windows.forgotten[i]) & ~mask_of(entry.pred);
        u = entry.pred;
    }
    order[0] = u;
    result.consensus.order = std::move(order);
    result.score = best_score;

    std::size_t entries = 0;
    for (const auto& stage : table)
        for (const auto& per_candidate : stage) entries += per_candidate.size();
    result.stats.table_entries = entries;
    result.stats.table_bytes = entries * (sizeof(Mask) + sizeof(detail::DpEntry));

    if (kemeny_score(result.consensus, profile) != result.score)
        throw std::logic_error("traceback produced a consensus that does not re-score");

    result.stats.elapsed_ms = detail::elapsed_ms_since(start);
    return result;
}

// Exhaustive oracle: evaluates all m! rankings in lexicographic candidate-id
// order and keeps the first minimum.
inline KemenyResult brute_force_kemeny(const Profile& profile) {
    const auto start = std::chrono::steady_clock::now();
    const int m = profile.num_candidates();
    if (m > kBruteForceLimit) throw InstanceTooLarge(m, kBruteForceLimit);
    if (profile.num_agents() < 1) throw EmptyProfile();

    const PreferenceGraph graph = build_preference_graph(profile);
    Ranking current;
    current.order.resize(m);
    std::iota(current.order.begin(), current.order.end(), 0);

    KemenyResult result;
    result.score = std::numeric_limits<Score>::max();
    do {
        const Score score = kemeny_score_from_graph(current, graph);
        if (score < result.score) {
            result.score = score;
            result.consensus = current;
        }
    } while (std::next_permutation(current.order.begin(), current.order.end()));

    result.stats.elapsed_ms = detail::elapsed_ms_since(start);
    return result;
}

}  // namespace kemeny
