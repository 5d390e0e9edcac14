#include "fjsp/ga.hpp"

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fjsp {

double chromosome_fitness(const ProblemInstance &instance, const GeneMap &map, const Chromosome &chromosome,
                          const PenaltyWeights &weights, EvaluationOptions options) {
    return fitness(instance, decode(chromosome, map, instance), weights, options);
}

std::vector<double> evaluate_population_serial(const ProblemInstance &instance, const GeneMap &map,
                                               std::span<const Chromosome> population,
                                               const PenaltyWeights &weights, EvaluationOptions options) {
    std::vector<double> out(population.size());
    for (std::size_t c = 0; c < population.size(); ++c) {
        out[c] = chromosome_fitness(instance, map, population[c], weights, options);
    }
    return out;
}

std::vector<double> evaluate_population(const ProblemInstance &instance, const GeneMap &map,
                                        std::span<const Chromosome> population, const PenaltyWeights &weights,
                                        EvaluationOptions options, int threads) {
    std::vector<double> out(population.size());
    const auto count = static_cast<std::ptrdiff_t>(population.size());
#ifdef _OPENMP
    const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(workers)
#else
    (void)threads;
#endif
    for (std::ptrdiff_t c = 0; c < count; ++c) {
        const auto &chromosome = population[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(c)] = chromosome.cached_fitness
                                               ? *chromosome.cached_fitness
                                               : chromosome_fitness(instance, map, chromosome, weights, options);
    }
    return out;
}

} // namespace fjsp
