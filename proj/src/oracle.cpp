#include "fjsp/oracle.hpp"

#include "fjsp/gene_map.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include <fmt/format.h>

namespace fjsp {

SearchSpace search_space_size(const ProblemInstance &instance) {
    const GeneMap map(instance);
    SearchSpace space{.size = 1, .saturated = false};
    for (const auto bound : map.upper_bounds()) {
        const auto choices = static_cast<std::uint64_t>(bound) + 1;
        if (space.size > kSearchSpaceCap / choices) {
            return SearchSpace{.size = kSearchSpaceCap, .saturated = true};
        }
        space.size *= choices;
    }
    return space;
}

InstanceTooLarge::InstanceTooLarge(SearchSpace s, std::uint64_t lim)
    : std::runtime_error(s.saturated ? fmt::format("search space too large (exceeds {}, limit {})", s.size, lim)
                                     : fmt::format("search space too large ({} > limit {})", s.size, lim)),
      space(s), limit(lim) {}

namespace {

// Objective and constraint checks written straight from the model over the
// gene vector, without going through the evaluator.
class LeafScorer {
public:
    LeafScorer(const ProblemInstance &instance, const GeneMap &map, EvaluationOptions options)
        : instance_(instance), map_(map), options_(options) {}

    // nullopt when flow or demand is violated
    std::optional<double> score(const std::vector<Quantity> &genes) const {
        const auto horizon = instance_.horizon();
        const auto &parts = instance_.parts();

        double z = 0.0;
        for (std::size_t p = 0; p < genes.size(); ++p) {
            const auto &tuple = map_.tuple(p);
            const auto &route = instance_.routes()[tuple.route];
            const double rate = tuple.shift == Shift::normal ? route.normal_rate : route.overtime_rate;
            z -= static_cast<double>(genes[p]) * route.process_time * rate;
        }

        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto &part = parts[i];
            const auto ops = part.operations.size();
            double cumulative_made = 0.0;
            double cumulative_demand = 0.0;
            double surplus = 0.0;
            for (std::size_t t = 0; t < horizon; ++t) {
                const auto &group = map_.flow_groups()[i * horizon + t];
                Quantity first_total = -1;
                Quantity all_ops = 0;
                for (std::size_t k = 0; k < ops; ++k) {
                    Quantity total = 0;
                    for (const auto p : group.operations[k]) total += genes[p];
                    if (k == 0) first_total = total;
                    if (total != first_total) return std::nullopt;
                    all_ops += total;
                }
                const double made = static_cast<double>(all_ops) / static_cast<double>(ops);
                cumulative_made += made;
                cumulative_demand += part.demand[t];
                const double required =
                    options_.demand == DemandMode::cumulative ? cumulative_demand : part.demand[t];
                if (required - cumulative_made > 1e-9) return std::nullopt;

                z += part.demand[t] * part.price[t];
                z -= made * part.weight * part.raw_cost[t];
                surplus += made - part.demand[t];
                if (options_.holding == HoldingMode::cumulative) {
                    z -= part.holding_cost * (cumulative_made - cumulative_demand);
                }
            }
            z += part.salvage_price * surplus;
            if (options_.holding == HoldingMode::literal) z -= part.holding_cost * surplus;
        }
        return z;
    }

private:
    const ProblemInstance &instance_;
    const GeneMap &map_;
    EvaluationOptions options_;
};

} // namespace

OracleResult enumerate_optimal(const ProblemInstance &instance, std::uint64_t limit, EvaluationOptions options) {
    const auto space = search_space_size(instance);
    if (space.saturated || space.size > limit) throw InstanceTooLarge(space, limit);

    const GeneMap map(instance);
    const LeafScorer scorer(instance, map, options);
    const auto horizon = instance.horizon();

    // load[(machine * horizon + period) * 2 + shift], minutes
    std::vector<double> load(instance.machine_count() * horizon * kShiftCount, 0.0);
    auto load_index = [&](const GeneTuple &tuple) {
        const auto machine = instance.routes()[tuple.route].machine;
        return (machine * horizon + tuple.period) * kShiftCount + static_cast<std::size_t>(tuple.shift);
    };

    std::vector<Quantity> genes(map.size(), 0);
    std::vector<Quantity> best_genes;
    double best = 0.0;
    bool found = false;
    std::uint64_t visited = 0;

    std::function<void(std::size_t)> descend = [&](std::size_t depth) {
        ++visited;
        if (depth == map.size()) {
            if (const auto z = scorer.score(genes); z && (!found || *z > best)) {
                best = *z;
                best_genes = genes;
                found = true;
            }
            return;
        }
        const auto &tuple = map.tuple(depth);
        const auto slot = load_index(tuple);
        const double time = instance.routes()[tuple.route].process_time;
        const double cap = instance.capacity(instance.routes()[tuple.route].machine, tuple.period, tuple.shift);
        const double slack = kCapacityTolerance * std::max(1.0, cap);
        const double base = load[slot];
        for (Quantity v = 0; v <= map.upper_bound(depth); ++v) {
            const double with = base + static_cast<double>(v) * time;
            if (with > cap + slack) break;
            genes[depth] = v;
            load[slot] = with;
            descend(depth + 1);
        }
        genes[depth] = 0;
        load[slot] = base;
    };
    descend(0);

    if (!found) throw NoFeasibleSchedule("no feasible schedule exists within the capacity bounds");

    Schedule schedule(instance);
    auto slots = schedule.slots();
    for (std::size_t p = 0; p < map.size(); ++p) slots[map.schedule_slot(p)] = best_genes[p];
    return OracleResult{.optimum = best, .schedule = std::move(schedule), .states_visited = visited};
}

} // namespace fjsp
