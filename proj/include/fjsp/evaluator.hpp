#pragma once

#include "fjsp/model.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace fjsp {

/// How the holding-cost term is charged.
enum class HoldingMode {
    cumulative, ///< sum over periods of H_i * I_it (end-of-period inventory)
    literal,    ///< sum over periods of H_i * (avg production - demand), as the objective prints it
};

/// Right-hand side of the demand constraint.
enum class DemandMode {
    cumulative, ///< cumulative production must cover cumulative demand (no backorder)
    literal,    ///< cumulative production must cover the single-period demand
};

struct EvaluationOptions {
    HoldingMode holding = HoldingMode::cumulative;
    DemandMode demand = DemandMode::cumulative;
};

struct PenaltyWeights {
    double shortage_weight = 1000.0; // $ per unit of unmet demand (and per unit of flow residual)
    double overload_weight = 100.0;  // $ per minute over capacity
};

/// Loads above capacity by less than this fraction of the capacity (or this
/// many minutes, whichever is larger) count as within capacity.
inline constexpr double kCapacityTolerance = 1e-9;

using PartPeriodMatrix = std::vector<std::vector<double>>;    // [part][period]
using MachinePeriodMatrix = std::vector<std::vector<double>>; // [machine][period]

struct FlowResidual {
    std::size_t part = 0;
    std::size_t operation = 0; // residual between this operation and the next
    std::size_t period = 0;
    Quantity residual = 0;

    bool operator==(const FlowResidual &) const = default;
};

struct CapacityCheck {
    MachinePeriodMatrix load;     // minutes
    MachinePeriodMatrix overload; // max(0, load - capacity)

    bool operator==(const CapacityCheck &) const = default;
};

struct ObjectiveTerms {
    double gross_revenue = 0.0;
    double salvage_revenue = 0.0;
    double normal_op_cost = 0.0;
    double overtime_op_cost = 0.0;
    double raw_material_cost = 0.0;
    double holding_cost = 0.0;

    [[nodiscard]] double objective() const {
        return gross_revenue + salvage_revenue - normal_op_cost - overtime_op_cost - raw_material_cost -
               holding_cost;
    }

    bool operator==(const ObjectiveTerms &) const = default;
};

struct EvaluationReport {
    ObjectiveTerms terms;
    double objective = 0.0;

    std::vector<FlowResidual> flow_residuals;
    PartPeriodMatrix demand_shortage;
    std::array<CapacityCheck, kShiftCount> capacity;
    PartPeriodMatrix inventory;
    bool feasible = false;

    [[nodiscard]] const CapacityCheck &capacity_for(Shift shift) const {
        return capacity[static_cast<std::size_t>(shift)];
    }
    [[nodiscard]] double total_shortage() const;
    [[nodiscard]] double total_overload(Shift shift) const;
    [[nodiscard]] Quantity total_abs_flow_residual() const;

    bool operator==(const EvaluationReport &) const = default;
};

/// (1/K_i) * sum over operations and machines of normal + overtime quantity.
[[nodiscard]] double avg_production(const ProblemInstance &instance, const Schedule &schedule,
                                    std::size_t part, std::size_t period);

/// avg_production for every (part, period).
[[nodiscard]] PartPeriodMatrix production_matrix(const ProblemInstance &instance, const Schedule &schedule);

[[nodiscard]] ObjectiveTerms objective_breakdown(const ProblemInstance &instance, const Schedule &schedule,
                                                 HoldingMode holding);

/// One entry per (part, operation k < K_i - 1, period), zeros included.
[[nodiscard]] std::vector<FlowResidual> check_flow(const ProblemInstance &instance, const Schedule &schedule);

/// I_i0 = 0, I_it = I_i(t-1) + avg_production(i, t) - D_it. Negative entries are backorders.
[[nodiscard]] PartPeriodMatrix inventory_ledger(const ProblemInstance &instance, const Schedule &schedule);

[[nodiscard]] PartPeriodMatrix check_demand(const ProblemInstance &instance, const Schedule &schedule,
                                            DemandMode mode);

[[nodiscard]] CapacityCheck check_capacity(const ProblemInstance &instance, const Schedule &schedule,
                                           Shift shift);

/// Full report: economics, residuals, ledger and verdict. Never throws on
/// infeasible schedules.
[[nodiscard]] EvaluationReport evaluate(const ProblemInstance &instance, const Schedule &schedule,
                                        EvaluationOptions options = {});

/// Penalized objective used to rank schedules.
[[nodiscard]] double fitness(const EvaluationReport &report, const PenaltyWeights &weights);

[[nodiscard]] double fitness(const ProblemInstance &instance, const Schedule &schedule,
                             const PenaltyWeights &weights, EvaluationOptions options = {});

} // namespace fjsp
