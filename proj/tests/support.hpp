#pragma once

#include "fjsp/model.hpp"
#include "fjsp/random.hpp"

#include <filesystem>
#include <string>

namespace fjsp::testing {

/// Single-part toy: 1 operation on 1 machine, 1 period. D=2, S=10, S'=1,
/// P=1 min, C=1 $/min, C+=2 $/min, W=1 kg, RP=1 $/kg, H=0.1, B=100, B+=10.
ProblemDescription t1_description();

struct RandomShape {
    int max_horizon = 2;
    int max_parts = 2;
    int max_machines = 3;
    int max_operations = 2;
    int max_alternatives = 2;
    double max_capacity = 4.0; // minutes; keeps the oracle's search space small
    double max_demand = 3.0;
};

/// Random small instance; all values are integers or short decimals.
ProblemDescription random_description(Rng &rng, const RandomShape &shape = {});

/// Uniform quantities in [0, max_quantity] on every eligible tuple.
Schedule random_schedule(const ProblemInstance &instance, Rng &rng, Quantity max_quantity);

std::filesystem::path data_dir();

} // namespace fjsp::testing
