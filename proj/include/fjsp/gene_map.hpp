#pragma once

#include "fjsp/model.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fjsp {

/// The (part, operation, alternative, period, shift) tuple behind one gene.
struct GeneTuple {
    std::size_t part = 0;
    std::size_t operation = 0;
    std::size_t alternative = 0;
    std::size_t route = 0;
    std::size_t period = 0;
    Shift shift = Shift::normal;
};

/// Bijection between gene positions and eligible schedule tuples.
///
/// Canonical order: shift-major (every normal gene before every overtime
/// gene), then part, then period, then operation, then alternative in
/// routing order. For one part and one period this reproduces the layout of
/// the chromosome figure: per-operation sub-chromosomes of alternative
/// machines, normal block followed by the overtime block.
class GeneMap {
public:
    explicit GeneMap(const ProblemInstance &instance);

    [[nodiscard]] std::size_t size() const { return tuples_.size(); }
    [[nodiscard]] const GeneTuple &tuple(std::size_t position) const { return tuples_[position]; }
    [[nodiscard]] std::span<const GeneTuple> tuples() const { return tuples_; }

    /// Largest admissible value of each gene (see ProblemInstance::upper_bound).
    [[nodiscard]] Quantity upper_bound(std::size_t position) const { return bounds_[position]; }
    [[nodiscard]] std::span<const Quantity> upper_bounds() const { return bounds_; }

    /// Schedule slot index of each gene position.
    [[nodiscard]] std::size_t schedule_slot(std::size_t position) const { return slots_[position]; }

    /// Gene positions of every operation of one (part, period), ascending
    /// within each operation. Repair and the flow checks work group by group.
    struct FlowGroup {
        std::size_t part = 0;
        std::size_t period = 0;
        std::vector<std::vector<std::size_t>> operations;
    };
    [[nodiscard]] std::span<const FlowGroup> flow_groups() const { return groups_; }

    [[nodiscard]] std::size_t slot_count() const { return slot_count_; }

private:
    std::vector<GeneTuple> tuples_;
    std::vector<Quantity> bounds_;
    std::vector<std::size_t> slots_;
    std::vector<FlowGroup> groups_;
    std::size_t slot_count_ = 0;
};

} // namespace fjsp
