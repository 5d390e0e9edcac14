#include "fjsp/ga.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace fjsp {

Chromosome encode(const Schedule &schedule, const GeneMap &map) {
    if (schedule.slot_count() != map.slot_count()) {
        throw EncodingError(fmt::format("schedule has {} slots, gene map expects {}", schedule.slot_count(),
                                        map.slot_count()));
    }
    Chromosome chromosome;
    chromosome.genes.resize(map.size());
    const auto slots = schedule.slots();
    for (std::size_t p = 0; p < map.size(); ++p) chromosome.genes[p] = slots[map.schedule_slot(p)];
    return chromosome;
}

Schedule decode(const Chromosome &chromosome, const GeneMap &map, const ProblemInstance &instance) {
    if (chromosome.genes.size() != map.size()) {
        throw EncodingError(fmt::format("chromosome has {} genes, gene map expects {}", chromosome.genes.size(),
                                        map.size()));
    }
    Schedule schedule(instance);
    if (schedule.slot_count() != map.slot_count()) {
        throw EncodingError("gene map was built for a different instance");
    }
    auto slots = schedule.slots();
    for (std::size_t p = 0; p < map.size(); ++p) slots[map.schedule_slot(p)] = chromosome.genes[p];
    return schedule;
}

Population init_population(const GeneMap &map, std::size_t size, Rng &rng) {
    Population population(size);
    for (auto &chromosome : population) {
        chromosome.genes.resize(map.size());
        for (std::size_t p = 0; p < map.size(); ++p) {
            chromosome.genes[p] = uniform_int(rng, 0, map.upper_bound(p));
        }
        repair(chromosome, map);
    }
    return population;
}

std::size_t tournament_select(std::span<const double> fitnesses, std::size_t tournament_size, Rng &rng) {
    const auto n = fitnesses.size();
    const auto k = std::clamp<std::size_t>(tournament_size, 1, n);

    // partial Fisher-Yates: the first k entries end up a uniform k-subset
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::size_t winner = n;
    for (std::size_t s = 0; s < k; ++s) {
        const auto pick = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(s),
                                                               static_cast<std::int64_t>(n - 1)));
        std::swap(pool[s], pool[pick]);
        const auto candidate = pool[s];
        if (winner == n || fitnesses[candidate] > fitnesses[winner] ||
            (fitnesses[candidate] == fitnesses[winner] && candidate < winner)) {
            winner = candidate;
        }
    }
    return winner;
}

Chromosome crossover_at(const Chromosome &first, const Chromosome &second, std::size_t m, std::size_t n) {
    Chromosome child;
    child.genes = first.genes;
    const auto last = std::min(n, second.genes.size());
    for (std::size_t p = m; p < last; ++p) child.genes[p] = second.genes[p]; // 1-based m+1..n
    return child;
}

Chromosome crossover(const Chromosome &first, const Chromosome &second, double rate, Rng &rng) {
    const double u = uniform_unit(rng);
    const auto length = static_cast<std::int64_t>(first.genes.size());
    if (u >= rate || length < 2) {
        Chromosome copy;
        copy.genes = first.genes;
        return copy;
    }
    std::int64_t m = uniform_int(rng, 1, length);
    std::int64_t n = uniform_int(rng, 1, length);
    while (m == n) {
        m = uniform_int(rng, 1, length);
        n = uniform_int(rng, 1, length);
    }
    if (m > n) std::swap(m, n);
    return crossover_at(first, second, static_cast<std::size_t>(m), static_cast<std::size_t>(n));
}

void mutate(Chromosome &chromosome, double rate, const GeneMap &map, Rng &rng) {
    for (std::size_t p = 0; p < chromosome.genes.size(); ++p) {
        const double u = uniform_unit(rng);
        if (rate > 0.0 && u <= rate) {
            chromosome.genes[p] = uniform_int(rng, 0, map.upper_bound(p));
            chromosome.cached_fitness.reset();
        }
    }
}

void repair(Chromosome &chromosome, const GeneMap &map) {
    auto &genes = chromosome.genes;
    std::vector<Quantity> totals;
    std::vector<Quantity> remainders;
    std::vector<std::size_t> order;

    for (const auto &group : map.flow_groups()) {
        totals.clear();
        for (const auto &positions : group.operations) {
            Quantity total = 0;
            for (const auto p : positions) total += genes[p];
            totals.push_back(total);
        }
        const Quantity target = *std::min_element(totals.begin(), totals.end());

        for (std::size_t k = 0; k < group.operations.size(); ++k) {
            const auto total = totals[k];
            if (total == target) continue;
            const auto &positions = group.operations[k];

            // largest-remainder rounding of genes * target / total
            remainders.assign(positions.size(), 0);
            Quantity assigned = 0;
            for (std::size_t g = 0; g < positions.size(); ++g) {
                const Quantity scaled = genes[positions[g]] * target;
                genes[positions[g]] = scaled / total;
                remainders[g] = scaled % total;
                assigned += genes[positions[g]];
            }
            order.resize(positions.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
            for (Quantity left = target - assigned, g = 0; left > 0; --left, ++g) {
                ++genes[positions[order[static_cast<std::size_t>(g)]]];
            }
            chromosome.cached_fitness.reset();
        }
    }
}

} // namespace fjsp
