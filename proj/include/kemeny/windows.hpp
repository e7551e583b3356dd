#pragma once

#include <cassert>
#include <vector>

#include "kemeny/core.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/metrics.hpp"

namespace kemeny {

// Per-rank candidate sets of the dynamic program. eligible[i] holds every
// candidate whose average rank lies within the open window (i - d, i + d);
// inserted[i] / forgotten[i] are the candidates entering and leaving the
// window at rank i.
struct RankWindows {
    WindowParameter param;
    std::vector<Mask> eligible;       // R_i
    std::vector<Mask> inserted;       // I(i) = R_i \ R_{i-1}
    std::vector<Mask> forgotten;      // F(i) = R_{i-1} \ R_i
    std::vector<Mask> forgotten_cum;  // union of F(0..i)
    int max_eligible = 0;
};

inline RankWindows compute_rank_windows(const Profile& profile,
                                        const WindowParameter& param) {
    const int m = profile.num_candidates();
    const std::int64_t n = profile.num_agents();
    const std::int64_t d = param.d;

    std::vector<std::int64_t> rank_sums(m, 0);
    for (const auto& ranking : profile.rankings) {
        for (int r = 0; r < m; ++r) rank_sums[ranking.order[r]] += r;
    }

    RankWindows windows;
    windows.param = param;
    windows.eligible.assign(m, 0);
    windows.inserted.assign(m, 0);
    windows.forgotten.assign(m, 0);
    windows.forgotten_cum.assign(m, 0);

    for (int i = 0; i < m; ++i) {
        Mask eligible = 0;
        for (CandidateId u = 0; u < m; ++u) {
            // r_ave(u) - d < i < r_ave(u) + d, scaled by n to stay integral.
            if (rank_sums[u] - d * n < i * n && i * n < rank_sums[u] + d * n)
                eligible |= mask_of(u);
        }
        if (eligible == 0) throw InfeasibleWindows(i);
        windows.eligible[i] = eligible;
        windows.max_eligible = std::max(windows.max_eligible, mask_size(eligible));
    }

    windows.inserted[0] = windows.eligible[0];
    for (int i = 1; i < m; ++i) {
        windows.inserted[i] = windows.eligible[i] & ~windows.eligible[i - 1];
        windows.forgotten[i] = windows.eligible[i - 1] & ~windows.eligible[i];
        windows.forgotten_cum[i] = windows.forgotten_cum[i - 1] | windows.forgotten[i];
    }

#ifndef NDEBUG
    // Forgotten, eligible, and not-yet-inserted must partition the candidates
    // at every rank.
    Mask future_inserted = 0;
    for (int i = m - 1; i >= 0; --i) {
        const Mask forgotten = windows.forgotten_cum[i];
        const Mask eligible = windows.eligible[i];
        assert((forgotten & eligible) == 0);
        assert((forgotten & future_inserted) == 0);
        assert((eligible & future_inserted) == 0);
        assert((forgotten | eligible | future_inserted) == full_mask(m));
        future_inserted |= windows.inserted[i];
    }
#endif
    return windows;
}

inline RankWindows compute_rank_windows(const Profile& profile) {
    return compute_rank_windows(profile, average_kt_distance(profile));
}

}  // namespace kemeny
