#pragma once

#include <cstddef>
#include <cstdint>

#include "kemeny/core.hpp"

namespace kemeny {

struct SolverStats {
    std::size_t table_entries = 0;    // DP entries actually created
    std::uint64_t estimated_bytes = 0;  // pre-flight estimate (paper formula)
    std::uint64_t table_bytes = 0;      // entries * per-entry footprint
    int max_rank_window = 0;            // largest |R_i| observed
    double elapsed_ms = 0.0;
};

struct KemenyResult {
    Ranking consensus;
    Score score = 0;
    SolverStats stats;
};

}  // namespace kemeny
