#include "fjsp/gene_map.hpp"

namespace fjsp {

GeneMap::GeneMap(const ProblemInstance &instance) {
    const auto horizon = instance.horizon();
    const Schedule shape(instance);
    slot_count_ = shape.slot_count();

    // group index = part * horizon + period
    groups_.resize(instance.part_count() * horizon);
    for (std::size_t i = 0; i < instance.part_count(); ++i) {
        for (std::size_t t = 0; t < horizon; ++t) {
            auto &group = groups_[i * horizon + t];
            group.part = i;
            group.period = t;
            group.operations.resize(instance.operation_count(i));
        }
    }

    for (const Shift shift : kShifts) {
        for (std::size_t i = 0; i < instance.part_count(); ++i) {
            for (std::size_t t = 0; t < horizon; ++t) {
                auto &group = groups_[i * horizon + t];
                for (std::size_t k = 0; k < instance.operation_count(i); ++k) {
                    for (std::size_t a = 0; a < instance.alternative_count(i, k); ++a) {
                        const auto route = instance.route_table()->offsets[i][k] + a;
                        group.operations[k].push_back(tuples_.size());
                        tuples_.push_back(GeneTuple{
                            .part = i,
                            .operation = k,
                            .alternative = a,
                            .route = route,
                            .period = t,
                            .shift = shift,
                        });
                        bounds_.push_back(instance.upper_bound(i, k, a, t, shift));
                        slots_.push_back(shape.slot(route, t, shift));
                    }
                }
            }
        }
    }
}

} // namespace fjsp
