#include "fjsp/io.hpp"

#include <array>
#include <string>
#include <vector>

namespace fjsp {

namespace {

constexpr double kHoldingCost = 0.1; // $/unit/month, all parts

struct Routing {
    std::vector<int> machines; // 1-based machine numbers
    std::vector<double> times; // min/unit, same order
};

Machine machine(int number, const char *label, double normal, double overtime, double rate, double overtime_rate) {
    return Machine{
        .id = "M" + std::to_string(number),
        .label = label,
        .normal_capacity = {normal, normal, normal},
        .overtime_capacity = {overtime, overtime, overtime},
        .normal_rate = rate,
        .overtime_rate = overtime_rate,
    };
}

std::vector<OperationSpec> operations(const std::vector<Routing> &routings) {
    std::vector<OperationSpec> out;
    for (const auto &routing : routings) {
        OperationSpec op;
        for (std::size_t a = 0; a < routing.machines.size(); ++a) {
            op.alternatives.push_back(RouteOption{
                .machine = "M" + std::to_string(routing.machines[a]),
                .process_time = routing.times[a],
                .normal_rate = std::nullopt,
                .overtime_rate = std::nullopt,
            });
        }
        out.push_back(std::move(op));
    }
    return out;
}

// Published plan, indexed [period][part][operation] -> (normal, overtime) per
// alternative machine in routing order.
struct OperationPlan {
    std::vector<Quantity> normal;
    std::vector<Quantity> overtime;
};
using PeriodPlan = std::vector<std::vector<OperationPlan>>;

const std::array<PeriodPlan, 3> &published_plan() {
    static const std::array<PeriodPlan, 3> plan = {{
        // period 1
        {
            {{{1304, 1404, 654}, {511, 430, 414}},
             {{1587, 1004, 489, 555}, {211, 157, 352, 362}},
             {{1377, 1340}, {707, 1293}}},
            {{{765, 461, 434, 695}, {158, 433, 137, 417}}, {{1463, 1531}, {280, 226}}},
            {{{1312, 1468}, {269, 111}},
             {{767, 442, 266, 230}, {730, 122, 135, 468}},
             {{608, 949, 506, 297}, {417, 210, 151, 22}}},
        },
        // period 2
        {
            {{{613, 601, 931}, {621, 674, 723}},
             {{428, 744, 986, 388}, {892, 405, 4, 316}},
             {{1088, 1355}, {370, 1350}}},
            {{{650, 50, 85, 201}, {278, 584, 403, 249}}, {{1560, 766}, {89, 85}}},
            {{{721, 1151}, {790, 27}},
             {{119, 432, 10, 496}, {274, 245, 504, 609}},
             {{425, 737, 769, 245}, {196, 47, 58, 212}}},
        },
        // period 3
        {
            {{{146, 891, 357}, {967, 730, 1031}},
             {{1037, 582, 187, 432}, {543, 788, 365, 188}},
             {{1431, 926}, {1003, 762}}},
            {{{518, 219, 41, 500}, {109, 537, 646, 183}}, {{1363, 1317}, {73, 0}}},
            {{{936, 1492}, {27, 496}},
             {{165, 351, 1306, 66}, {38, 247, 470, 308}},
             {{598, 133, 161, 73}, {450, 340, 156, 1040}}},
        },
    }};
    return plan;
}

} // namespace

ProblemDescription case_study_description() {
    ProblemDescription d;
    d.horizon = 3;

    d.machines = {
        machine(1, "Shot Blast", 9240, 2700, 0.1, 0.15),
        machine(2, "Shot Blast", 9240, 2700, 0.1, 0.15),
        machine(3, "Shot Blast", 9240, 2700, 0.12, 0.18),
        machine(4, "CNC", 21600, 5280, 0.3, 0.45),
        machine(5, "CNC", 21600, 5280, 0.25, 0.375),
        machine(6, "CNC", 21600, 5280, 0.2, 0.3),
        machine(7, "CNC", 21600, 5280, 0.33, 0.495),
        machine(8, "Assembly", 21600, 5280, 0.05, 0.075),
        machine(9, "Assembly", 21600, 5280, 0.08, 0.12),
    };

    d.parts = {
        Part{
            .id = "P1",
            .weight = 0.168,
            .holding_cost = kHoldingCost,
            .demand = {4200, 4500, 4300},
            .price = {1.6, 1.65, 1.65},
            .salvage_price = 0.206,
            .raw_cost = {2.23, 2.35, 2.45},
            .operations = operations({
                {{1, 2, 3}, {0.5, 0.5, 0.3}},
                {{4, 5, 6, 7}, {1.2, 1.4, 1.5, 1.0}},
                {{8, 9}, {1.5, 1.0}},
            }),
        },
        Part{
            .id = "P2",
            .weight = 0.207,
            .holding_cost = kHoldingCost,
            .demand = {3500, 2500, 2750},
            .price = {1.7, 1.75, 1.7},
            .salvage_price = 0.279,
            .raw_cost = {2.5, 2.5, 2.7},
            .operations = operations({
                {{4, 5, 6, 7}, {1.3, 1.5, 1.6, 1.1}},
                {{8, 9}, {2.5, 2.0}},
            }),
        },
        Part{
            .id = "P3",
            .weight = 0.5,
            .holding_cost = kHoldingCost,
            .demand = {3000, 2800, 3000},
            .price = {2.98, 3.0, 3.1},
            .salvage_price = 0.675,
            .raw_cost = {2.6, 2.6, 2.7},
            .operations = operations({
                {{8, 9}, {1.0, 2.0}},
                {{4, 5, 6, 7}, {0.6, 0.8, 0.9, 0.4}},
                {{4, 5, 6, 7}, {0.8, 0.9, 1.0, 0.7}},
            }),
        },
    };
    return d;
}

ProblemInstance embedded_case_study() {
    return build_instance(case_study_description());
}

Schedule published_case_study_solution(const ProblemInstance &case_study) {
    Schedule schedule(case_study);
    const auto &plan = published_plan();
    for (std::size_t t = 0; t < plan.size(); ++t) {
        for (std::size_t i = 0; i < plan[t].size(); ++i) {
            for (std::size_t k = 0; k < plan[t][i].size(); ++k) {
                const auto &op = plan[t][i][k];
                for (std::size_t a = 0; a < op.normal.size(); ++a) {
                    schedule.at(i, k, a, t, Shift::normal) = op.normal[a];
                    schedule.at(i, k, a, t, Shift::overtime) = op.overtime[a];
                }
            }
        }
    }
    return schedule;
}

} // namespace fjsp
