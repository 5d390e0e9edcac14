#include "fjsp/ga.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace fjsp {

const char *to_string(StopReason reason) {
    return reason == StopReason::max_generations ? "max_generations" : "stalled";
}

void validate(const GaConfig &config) {
    auto fail = [](const std::string &message) { throw std::invalid_argument(message); };
    if (config.population_size < 1) fail("population_size must be >= 1");
    if (!(config.crossover_rate >= 0.0 && config.crossover_rate <= 1.0)) {
        fail(fmt::format("crossover_rate must lie in [0, 1] (got {})", config.crossover_rate));
    }
    if (!(config.mutation_rate >= 0.0 && config.mutation_rate <= 1.0)) {
        fail(fmt::format("mutation_rate must lie in [0, 1] (got {})", config.mutation_rate));
    }
    if (config.tournament_size < 1 || config.tournament_size > config.population_size) {
        fail(fmt::format("tournament_size must lie in [1, population_size] (got {})", config.tournament_size));
    }
    if (config.elitism_count >= config.population_size) {
        fail(fmt::format("elitism_count must be < population_size (got {})", config.elitism_count));
    }
    if (config.max_generations < 1) fail("max_generations must be >= 1");
    if (!(config.penalty.shortage_weight >= 0.0) || !(config.penalty.overload_weight >= 0.0)) {
        fail("penalty weights must be >= 0");
    }
    if (config.threads < 0) fail("threads must be >= 0");
}

namespace {

// Population indices sorted by fitness, best first; ties keep the lower index.
std::vector<std::size_t> ranking(const std::vector<double> &fitnesses) {
    std::vector<std::size_t> order(fitnesses.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fitnesses[a] > fitnesses[b]; });
    return order;
}

} // namespace

GaResult evolve(const ProblemInstance &instance, const GaConfig &config) {
    validate(config);

    const GeneMap map(instance);
    Rng rng(config.seed);

    Population population = init_population(map, config.population_size, rng);
    auto evaluate_all = [&] {
        auto fitnesses = evaluate_population(instance, map, population, config.penalty, config.evaluation,
                                             config.threads);
        for (std::size_t c = 0; c < population.size(); ++c) population[c].cached_fitness = fitnesses[c];
        return fitnesses;
    };
    std::vector<double> fitnesses = evaluate_all();

    Chromosome best;
    double best_fitness = 0.0;
    std::size_t stall = 0;
    std::vector<GenerationStats> history;
    history.reserve(std::min<std::size_t>(config.max_generations, 1u << 16));
    StopReason reason = StopReason::max_generations;

    for (std::size_t generation = 0;; ++generation) {
        const auto order = ranking(fitnesses);
        const double generation_best = fitnesses[order.front()];
        const double mean = std::accumulate(fitnesses.begin(), fitnesses.end(), 0.0) /
                            static_cast<double>(fitnesses.size());
        history.push_back({generation_best, mean});

        if (generation == 0 || generation_best > best_fitness) {
            best = population[order.front()];
            best_fitness = generation_best;
            stall = 0;
        } else {
            ++stall;
        }

        if (history.size() >= config.max_generations) {
            reason = StopReason::max_generations;
            break;
        }
        if (config.stall_limit > 0 && stall >= config.stall_limit) {
            reason = StopReason::stalled;
            break;
        }

        Population next;
        next.reserve(config.population_size);
        for (std::size_t e = 0; e < config.elitism_count; ++e) next.push_back(population[order[e]]);
        while (next.size() < config.population_size) {
            const auto first = tournament_select(fitnesses, config.tournament_size, rng);
            const auto second = tournament_select(fitnesses, config.tournament_size, rng);
            Chromosome child = crossover(population[first], population[second], config.crossover_rate, rng);
            mutate(child, config.mutation_rate, map, rng);
            repair(child, map);
            child.cached_fitness.reset();
            next.push_back(std::move(child));
        }
        population = std::move(next);
        fitnesses = evaluate_all();
    }

    Schedule schedule = decode(best, map, instance);
    EvaluationReport report = evaluate(instance, schedule, config.evaluation);
    const auto generations = history.size();
    return GaResult{
        .best_schedule = std::move(schedule),
        .best_report = std::move(report),
        .best_fitness = best_fitness,
        .history = std::move(history),
        .generations_run = generations,
        .stop_reason = reason,
    };
}

} // namespace fjsp
