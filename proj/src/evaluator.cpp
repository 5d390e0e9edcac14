#include "fjsp/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace fjsp {

namespace {

// Shortages below this are rounding noise from fractional averages.
constexpr double kShortageTolerance = 1e-9;

double over_capacity(double load, double capacity) {
    const double slack = kCapacityTolerance * std::max(1.0, capacity);
    return load > capacity + slack ? load - capacity : 0.0;
}

ObjectiveTerms breakdown_from(const ProblemInstance &instance, const Schedule &schedule,
                              const PartPeriodMatrix &production, HoldingMode holding) {
    ObjectiveTerms terms;
    const auto horizon = instance.horizon();
    const auto &parts = instance.parts();

    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto &part = parts[i];
        double surplus = 0.0;
        double inventory = 0.0;
        for (std::size_t t = 0; t < horizon; ++t) {
            const double made = production[i][t];
            terms.gross_revenue += part.demand[t] * part.price[t];
            surplus += made - part.demand[t];
            terms.raw_material_cost += made * part.weight * part.raw_cost[t];
            inventory += made - part.demand[t];
            if (holding == HoldingMode::cumulative) terms.holding_cost += part.holding_cost * inventory;
        }
        terms.salvage_revenue += part.salvage_price * surplus;
        if (holding == HoldingMode::literal) terms.holding_cost += part.holding_cost * surplus;
    }

    const auto routes = instance.routes();
    for (std::size_t r = 0; r < routes.size(); ++r) {
        const auto &route = routes[r];
        for (std::size_t t = 0; t < horizon; ++t) {
            const auto normal = static_cast<double>(schedule.by_route(r, t, Shift::normal));
            const auto overtime = static_cast<double>(schedule.by_route(r, t, Shift::overtime));
            terms.normal_op_cost += normal * route.process_time * route.normal_rate;
            terms.overtime_op_cost += overtime * route.process_time * route.overtime_rate;
        }
    }
    return terms;
}

PartPeriodMatrix ledger_from(const ProblemInstance &instance, const PartPeriodMatrix &production) {
    PartPeriodMatrix ledger(instance.part_count(), std::vector<double>(instance.horizon(), 0.0));
    for (std::size_t i = 0; i < instance.part_count(); ++i) {
        double carried = 0.0;
        for (std::size_t t = 0; t < instance.horizon(); ++t) {
            carried += production[i][t] - instance.parts()[i].demand[t];
            ledger[i][t] = carried;
        }
    }
    return ledger;
}

PartPeriodMatrix shortage_from(const ProblemInstance &instance, const PartPeriodMatrix &production,
                               DemandMode mode) {
    PartPeriodMatrix shortage(instance.part_count(), std::vector<double>(instance.horizon(), 0.0));
    for (std::size_t i = 0; i < instance.part_count(); ++i) {
        const auto &demand = instance.parts()[i].demand;
        double made = 0.0;
        double needed = 0.0;
        for (std::size_t t = 0; t < instance.horizon(); ++t) {
            made += production[i][t];
            needed = mode == DemandMode::cumulative ? needed + demand[t] : demand[t];
            const double gap = needed - made;
            shortage[i][t] = gap > kShortageTolerance ? gap : 0.0;
        }
    }
    return shortage;
}

} // namespace

double avg_production(const ProblemInstance &instance, const Schedule &schedule, std::size_t part,
                      std::size_t period) {
    Quantity total = 0;
    const auto ops = instance.operation_count(part);
    for (std::size_t k = 0; k < ops; ++k) total += schedule.operation_total(part, k, period);
    return static_cast<double>(total) / static_cast<double>(ops);
}

PartPeriodMatrix production_matrix(const ProblemInstance &instance, const Schedule &schedule) {
    PartPeriodMatrix production(instance.part_count(), std::vector<double>(instance.horizon(), 0.0));
    for (std::size_t i = 0; i < instance.part_count(); ++i) {
        for (std::size_t t = 0; t < instance.horizon(); ++t) {
            production[i][t] = avg_production(instance, schedule, i, t);
        }
    }
    return production;
}

ObjectiveTerms objective_breakdown(const ProblemInstance &instance, const Schedule &schedule,
                                   HoldingMode holding) {
    return breakdown_from(instance, schedule, production_matrix(instance, schedule), holding);
}

std::vector<FlowResidual> check_flow(const ProblemInstance &instance, const Schedule &schedule) {
    std::vector<FlowResidual> residuals;
    for (std::size_t i = 0; i < instance.part_count(); ++i) {
        const auto ops = instance.operation_count(i);
        for (std::size_t t = 0; t < instance.horizon(); ++t) {
            for (std::size_t k = 0; k + 1 < ops; ++k) {
                residuals.push_back(FlowResidual{
                    .part = i,
                    .operation = k,
                    .period = t,
                    .residual = schedule.operation_total(i, k, t) - schedule.operation_total(i, k + 1, t),
                });
            }
        }
    }
    return residuals;
}

PartPeriodMatrix inventory_ledger(const ProblemInstance &instance, const Schedule &schedule) {
    return ledger_from(instance, production_matrix(instance, schedule));
}

PartPeriodMatrix check_demand(const ProblemInstance &instance, const Schedule &schedule, DemandMode mode) {
    return shortage_from(instance, production_matrix(instance, schedule), mode);
}

CapacityCheck check_capacity(const ProblemInstance &instance, const Schedule &schedule, Shift shift) {
    const auto horizon = instance.horizon();
    CapacityCheck check{
        .load = MachinePeriodMatrix(instance.machine_count(), std::vector<double>(horizon, 0.0)),
        .overload = MachinePeriodMatrix(instance.machine_count(), std::vector<double>(horizon, 0.0)),
    };
    const auto routes = instance.routes();
    for (std::size_t r = 0; r < routes.size(); ++r) {
        for (std::size_t t = 0; t < horizon; ++t) {
            check.load[routes[r].machine][t] +=
                static_cast<double>(schedule.by_route(r, t, shift)) * routes[r].process_time;
        }
    }
    for (std::size_t j = 0; j < instance.machine_count(); ++j) {
        for (std::size_t t = 0; t < horizon; ++t) {
            check.overload[j][t] = over_capacity(check.load[j][t], instance.capacity(j, t, shift));
        }
    }
    return check;
}

EvaluationReport evaluate(const ProblemInstance &instance, const Schedule &schedule, EvaluationOptions options) {
    const auto production = production_matrix(instance, schedule);

    EvaluationReport report;
    report.terms = breakdown_from(instance, schedule, production, options.holding);
    report.objective = report.terms.objective();
    report.flow_residuals = check_flow(instance, schedule);
    report.demand_shortage = shortage_from(instance, production, options.demand);
    for (const Shift shift : kShifts) {
        report.capacity[static_cast<std::size_t>(shift)] = check_capacity(instance, schedule, shift);
    }
    report.inventory = ledger_from(instance, production);
    report.feasible = report.total_abs_flow_residual() == 0 && report.total_shortage() == 0.0 &&
                      report.total_overload(Shift::normal) == 0.0 &&
                      report.total_overload(Shift::overtime) == 0.0;
    return report;
}

double EvaluationReport::total_shortage() const {
    double total = 0.0;
    for (const auto &row : demand_shortage) {
        for (const double v : row) total += v;
    }
    return total;
}

double EvaluationReport::total_overload(Shift shift) const {
    double total = 0.0;
    for (const auto &row : capacity_for(shift).overload) {
        for (const double v : row) total += v;
    }
    return total;
}

Quantity EvaluationReport::total_abs_flow_residual() const {
    Quantity total = 0;
    for (const auto &r : flow_residuals) total += std::llabs(r.residual);
    return total;
}

double fitness(const EvaluationReport &report, const PenaltyWeights &weights) {
    return report.objective - weights.shortage_weight * report.total_shortage() -
           weights.overload_weight * report.total_overload(Shift::normal) -
           weights.overload_weight * report.total_overload(Shift::overtime) -
           weights.shortage_weight * static_cast<double>(report.total_abs_flow_residual());
}

double fitness(const ProblemInstance &instance, const Schedule &schedule, const PenaltyWeights &weights,
               EvaluationOptions options) {
    return fitness(evaluate(instance, schedule, options), weights);
}

} // namespace fjsp
