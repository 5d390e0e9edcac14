#pragma once

#include "fjsp/evaluator.hpp"
#include "fjsp/model.hpp"

#include <cstdint>
#include <stdexcept>

namespace fjsp {

/// search_space_size saturates here and sets `saturated`.
inline constexpr std::uint64_t kSearchSpaceCap = 1'000'000'000'000'000'000ULL;

inline constexpr std::uint64_t kDefaultOracleLimit = 10'000'000ULL;

struct SearchSpace {
    std::uint64_t size = 0; // product over genes of (bound + 1), capped
    bool saturated = false;
};

[[nodiscard]] SearchSpace search_space_size(const ProblemInstance &instance);

class InstanceTooLarge : public std::runtime_error {
public:
    InstanceTooLarge(SearchSpace space, std::uint64_t limit);
    SearchSpace space;
    std::uint64_t limit;
};

/// No feasible assignment exists within the gene bounds.
class NoFeasibleSchedule : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    double optimum = 0.0;
    Schedule schedule;
    std::uint64_t states_visited = 0; // search-tree nodes entered, leaves included
};

/// Exhaustive depth-first search over every gene assignment within bounds,
/// in gene-map order. Branches are cut as soon as a machine exceeds capacity;
/// flow and demand are checked at the leaves. Among maximizers the
/// lexicographically smallest gene vector wins.
[[nodiscard]] OracleResult enumerate_optimal(const ProblemInstance &instance,
                                             std::uint64_t limit = kDefaultOracleLimit,
                                             EvaluationOptions options = {});

} // namespace fjsp
