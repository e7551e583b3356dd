#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kemeny {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyProfile : Error {
    EmptyProfile() : Error("profile contains no rankings") {}
};

struct NotAPermutation : Error {
    explicit NotAPermutation(const std::string& detail)
        : Error("ranking is not a permutation: " + detail) {}
};

struct InconsistentCandidateSets : Error {
    explicit InconsistentCandidateSets(const std::string& detail)
        : Error("rankings disagree on the candidate set: " + detail) {}
};

struct TooManyCandidates : Error {
    TooManyCandidates(int m, int limit)
        : Error("profile has " + std::to_string(m) + " candidates, limit is " +
                std::to_string(limit)) {}
};

struct IoError : Error {
    using Error::Error;
};

struct MismatchedCandidates : Error {
    explicit MismatchedCandidates(const std::string& detail)
        : Error("rankings are over different candidate sets: " + detail) {}
};

struct UnknownCandidate : Error {
    explicit UnknownCandidate(const std::string& detail)
        : Error("unknown candidate: " + detail) {}
};

struct CandidateInSubset : Error {
    explicit CandidateInSubset(int id)
        : Error("candidate " + std::to_string(id) +
                " must not be a member of the subset it is scored against") {}
};

struct InfeasibleWindows : Error {
    explicit InfeasibleWindows(int rank)
        : Error("no candidate is eligible for rank " + std::to_string(rank)) {}
};

struct MemoryBudgetExceeded : Error {
    std::uint64_t estimated_bytes;
    std::uint64_t budget_bytes;

    MemoryBudgetExceeded(std::uint64_t estimated, std::uint64_t budget)
        : Error("estimated table size " + std::to_string(estimated) +
                " bytes exceeds the memory budget of " + std::to_string(budget) +
                " bytes"),
          estimated_bytes(estimated),
          budget_bytes(budget) {}
};

struct InstanceTooLarge : Error {
    InstanceTooLarge(int m, int limit)
        : Error("exhaustive search over " + std::to_string(m) +
                "! rankings refused, limit is m <= " + std::to_string(limit)) {}
};

struct SubsetTooLarge : Error {
    SubsetTooLarge(int requested, int available)
        : Error("cannot subsample " + std::to_string(requested) +
                " candidates from a profile of " + std::to_string(available)) {}
};

}  // namespace kemeny
