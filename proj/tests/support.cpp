#include "support.hpp"

#include <algorithm>
#include <set>

namespace fjsp::testing {

ProblemDescription t1_description() {
    ProblemDescription d;
    d.horizon = 1;
    d.machines = {Machine{
        .id = "M1",
        .label = "toy",
        .normal_capacity = {100},
        .overtime_capacity = {10},
        .normal_rate = 1.0,
        .overtime_rate = 2.0,
    }};
    d.parts = {Part{
        .id = "P1",
        .weight = 1.0,
        .holding_cost = 0.1,
        .demand = {2},
        .price = {10},
        .salvage_price = 1.0,
        .raw_cost = {1.0},
        .operations = {OperationSpec{{RouteOption{.machine = "M1", .process_time = 1.0}}}},
    }};
    return d;
}

ProblemDescription random_description(Rng &rng, const RandomShape &shape) {
    auto pick = [&](int lo, int hi) { return static_cast<int>(uniform_int(rng, lo, hi)); };
    auto tenths = [&](int lo, int hi) { return pick(lo, hi) / 10.0; };

    ProblemDescription d;
    d.horizon = pick(1, shape.max_horizon);
    const auto horizon = static_cast<std::size_t>(d.horizon);

    const int machines = pick(1, shape.max_machines);
    for (int j = 0; j < machines; ++j) {
        Machine m;
        m.id = "M" + std::to_string(j + 1);
        m.label = "random";
        for (std::size_t t = 0; t < horizon; ++t) {
            m.normal_capacity.push_back(pick(0, static_cast<int>(shape.max_capacity)));
            m.overtime_capacity.push_back(pick(0, static_cast<int>(shape.max_capacity / 2)));
        }
        m.normal_rate = tenths(1, 5);
        m.overtime_rate = m.normal_rate * 1.5;
        d.machines.push_back(std::move(m));
    }

    const int parts = pick(1, shape.max_parts);
    for (int i = 0; i < parts; ++i) {
        Part p;
        p.id = "P" + std::to_string(i + 1);
        p.weight = tenths(5, 10);
        p.holding_cost = 0.1;
        p.salvage_price = tenths(0, 10);
        for (std::size_t t = 0; t < horizon; ++t) {
            p.demand.push_back(pick(0, static_cast<int>(shape.max_demand)));
            p.price.push_back(pick(5, 10));
            p.raw_cost.push_back(tenths(5, 15));
        }
        const int ops = pick(1, shape.max_operations);
        for (int k = 0; k < ops; ++k) {
            OperationSpec op;
            const int alts = pick(1, std::min(shape.max_alternatives, machines));
            std::set<int> used;
            while (static_cast<int>(used.size()) < alts) used.insert(pick(1, machines));
            for (const int j : used) {
                RouteOption option{.machine = "M" + std::to_string(j), .process_time = tenths(5, 20)};
                if (pick(0, 4) == 0) option.normal_rate = tenths(1, 5);
                op.alternatives.push_back(std::move(option));
            }
            p.operations.push_back(std::move(op));
        }
        d.parts.push_back(std::move(p));
    }
    return d;
}

Schedule random_schedule(const ProblemInstance &instance, Rng &rng, Quantity max_quantity) {
    Schedule schedule(instance);
    for (auto &q : schedule.slots()) q = uniform_int(rng, 0, max_quantity);
    return schedule;
}

std::filesystem::path data_dir() {
    return FJSP_DATA_DIR;
}

} // namespace fjsp::testing
