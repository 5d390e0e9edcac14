#pragma once

#include "fjsp/evaluator.hpp"
#include "fjsp/gene_map.hpp"
#include "fjsp/model.hpp"
#include "fjsp/random.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fjsp {

/// Direct-value encoding: gene p holds the production quantity of gene_map.tuple(p).
struct Chromosome {
    std::vector<Quantity> genes;
    std::optional<double> cached_fitness;

    bool operator==(const Chromosome &other) const { return genes == other.genes; }
};

using Population = std::vector<Chromosome>;

class EncodingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

[[nodiscard]] Chromosome encode(const Schedule &schedule, const GeneMap &map);
[[nodiscard]] Schedule decode(const Chromosome &chromosome, const GeneMap &map, const ProblemInstance &instance);

struct GaConfig {
    std::size_t population_size = 100;
    double crossover_rate = 0.9;
    double mutation_rate = 0.05;
    std::size_t tournament_size = 3;
    std::size_t elitism_count = 2;
    std::size_t max_generations = 5000;
    std::size_t stall_limit = 500;
    std::uint64_t seed = 0;
    PenaltyWeights penalty;
    EvaluationOptions evaluation;
    /// Worker threads for fitness evaluation; 0 lets OpenMP decide. Never
    /// changes results.
    int threads = 0;
};

/// Throws std::invalid_argument when a GaConfig invariant is broken.
void validate(const GaConfig &config);

enum class StopReason { max_generations, stalled };

[[nodiscard]] const char *to_string(StopReason reason);

struct GenerationStats {
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
};

struct GaResult {
    Schedule best_schedule;
    EvaluationReport best_report;
    double best_fitness = 0.0;
    std::vector<GenerationStats> history;
    std::size_t generations_run = 0;
    StopReason stop_reason = StopReason::max_generations;
};

// -- operators -------------------------------------------------------------

/// Every gene uniform in [0, bound], then repaired.
[[nodiscard]] Population init_population(const GeneMap &map, std::size_t size, Rng &rng);

/// Samples `tournament_size` distinct indices and returns the fittest;
/// ties go to the lowest index.
[[nodiscard]] std::size_t tournament_select(std::span<const double> fitnesses, std::size_t tournament_size,
                                            Rng &rng);

/// Two-point crossover at 1-based cut points m < n: positions <= m and > n
/// come from `first`, positions m+1..n from `second`.
[[nodiscard]] Chromosome crossover_at(const Chromosome &first, const Chromosome &second, std::size_t m,
                                      std::size_t n);

/// With probability `rate` draws m < n uniformly in [1, length] and calls
/// crossover_at; otherwise returns a copy of `first`.
[[nodiscard]] Chromosome crossover(const Chromosome &first, const Chromosome &second, double rate, Rng &rng);

/// Each gene is redrawn uniformly in [0, bound] when u <= rate, u ~ U[0, 1).
void mutate(Chromosome &chromosome, double rate, const GeneMap &map, Rng &rng);

/// Scales every operation of each (part, period) down to the smallest
/// operation total, so flow residuals become zero. Idempotent.
void repair(Chromosome &chromosome, const GeneMap &map);

// -- population evaluation -------------------------------------------------

/// Penalized fitness of every chromosome, evaluated in parallel with OpenMP.
/// Results are identical to evaluate_population_serial for any thread count.
[[nodiscard]] std::vector<double> evaluate_population(const ProblemInstance &instance, const GeneMap &map,
                                                      std::span<const Chromosome> population,
                                                      const PenaltyWeights &weights,
                                                      EvaluationOptions options, int threads = 0);

/// Reference implementation of evaluate_population.
[[nodiscard]] std::vector<double> evaluate_population_serial(const ProblemInstance &instance,
                                                             const GeneMap &map,
                                                             std::span<const Chromosome> population,
                                                             const PenaltyWeights &weights,
                                                             EvaluationOptions options);

[[nodiscard]] double chromosome_fitness(const ProblemInstance &instance, const GeneMap &map,
                                        const Chromosome &chromosome, const PenaltyWeights &weights,
                                        EvaluationOptions options);

// -- driver ----------------------------------------------------------------

/// Generational GA with elitism, stopping at max_generations or after
/// stall_limit generations without improvement of the best fitness.
///
/// RNG stream order (one mt19937_64 seeded with config.seed): population
/// initialization gene by gene, chromosome by chromosome; then for each
/// generation and each non-elite child in position order: tournament draws
/// for the first parent, for the second parent, the crossover draws, and one
/// mutation draw per gene. Fitness evaluation consumes no draws, so worker
/// count cannot perturb the stream.
[[nodiscard]] GaResult evolve(const ProblemInstance &instance, const GaConfig &config);

} // namespace fjsp
