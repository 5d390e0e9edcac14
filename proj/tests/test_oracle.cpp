#include "fjsp/ga.hpp"
#include "fjsp/io.hpp"
#include "fjsp/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace fjsp {
namespace {

using testing::random_description;
using testing::t1_description;

TEST(SearchSpace, ToyT1) {
    const auto space = search_space_size(build_instance(t1_description()));
    EXPECT_FALSE(space.saturated);
    EXPECT_EQ(space.size, 101u * 11u);
}

TEST(SearchSpace, ZeroCapacityIsSinglePoint) {
    auto d = t1_description();
    d.machines[0].normal_capacity = {0};
    d.machines[0].overtime_capacity = {0};
    EXPECT_EQ(search_space_size(build_instance(d)).size, 1u);
}

TEST(SearchSpace, CaseStudySaturates) {
    const auto instance = embedded_case_study();
    EXPECT_TRUE(search_space_size(instance).saturated);
    EXPECT_THROW((void)enumerate_optimal(instance), InstanceTooLarge);
}

TEST(Oracle, ToyT1Optimum) {
    const auto instance = build_instance(t1_description());
    const auto result = enumerate_optimal(instance);
    EXPECT_DOUBLE_EQ(result.optimum, 16.0);
    EXPECT_EQ(result.schedule.at(0, 0, 0, 0, Shift::normal), 2);
    EXPECT_EQ(result.schedule.at(0, 0, 0, 0, Shift::overtime), 0);
    EXPECT_GT(result.states_visited, 1111u);
}

TEST(Oracle, ToyWithoutDemandProducesNothing) {
    auto d = t1_description();
    d.parts[0].demand = {0};
    const auto instance = build_instance(d);
    const auto result = enumerate_optimal(instance);
    EXPECT_DOUBLE_EQ(result.optimum, 0.0);
    EXPECT_TRUE(result.schedule.is_zero());
}

TEST(Oracle, ToyOvertimeOnly) {
    auto d = t1_description();
    d.machines[0].normal_capacity = {0};
    const auto instance = build_instance(d);
    const auto result = enumerate_optimal(instance);
    EXPECT_DOUBLE_EQ(result.optimum, 14.0); // 20 - 2*1*2 - 2
    EXPECT_EQ(result.schedule.at(0, 0, 0, 0, Shift::overtime), 2);
}

TEST(Oracle, RespectsLimit) {
    const auto instance = build_instance(t1_description());
    try {
        (void)enumerate_optimal(instance, 1000);
        FAIL();
    } catch (const InstanceTooLarge &e) {
        EXPECT_EQ(e.space.size, 1111u);
        EXPECT_FALSE(e.space.saturated);
    }
}

TEST(Oracle, NoFeasibleScheduleReported) {
    auto d = t1_description();
    d.machines[0].normal_capacity = {1};
    d.machines[0].overtime_capacity = {0};
    EXPECT_THROW((void)enumerate_optimal(build_instance(d)), NoFeasibleSchedule);
}

// The oracle's own leaf objective and the evaluator must agree, and the
// optimum must pass every evaluator check; GA never beats it.
TEST(OracleProperty, AgreesWithEvaluatorAndBoundsGa) {
    Rng rng(2024);
    int solved = 0;
    for (int trial = 0; trial < 200 && solved < 30; ++trial) {
        const auto instance = build_instance(random_description(rng));
        const auto space = search_space_size(instance);
        if (space.saturated || space.size > 200'000) continue;
        for (const auto holding : {HoldingMode::cumulative, HoldingMode::literal}) {
            const EvaluationOptions options{.holding = holding};
            OracleResult result{.optimum = 0, .schedule = Schedule(instance), .states_visited = 0};
            try {
                result = enumerate_optimal(instance, kDefaultOracleLimit, options);
            } catch (const NoFeasibleSchedule &) {
                continue;
            }
            const auto report = evaluate(instance, result.schedule, options);
            ASSERT_TRUE(report.feasible);
            ASSERT_NEAR(report.objective, result.optimum, 1e-9);

            GaConfig config;
            config.seed = rng();
            config.population_size = 30;
            config.max_generations = 80;
            config.evaluation = options;
            const auto ga = evolve(instance, config);
            ASSERT_LE(ga.best_fitness, result.optimum + 1e-9);
        }
        ++solved;
    }
    EXPECT_GE(solved, 10);
}

} // namespace
} // namespace fjsp
