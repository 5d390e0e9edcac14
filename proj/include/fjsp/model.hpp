#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fjsp {

/// Production quantity of one (part, operation, machine, period, shift) tuple.
using Quantity = std::int64_t;

enum class Shift : std::uint8_t { normal = 0, overtime = 1 };

inline constexpr std::size_t kShiftCount = 2;
inline constexpr Shift kShifts[kShiftCount] = {Shift::normal, Shift::overtime};

[[nodiscard]] const char *to_string(Shift shift);

/// Raised by build_instance; the message names the offending coordinates.
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RouteOption {
    std::string machine;
    double process_time = 0.0; // min/unit
    std::optional<double> normal_rate;   // $/min, overrides the machine rate
    std::optional<double> overtime_rate; // $/min, overrides the machine rate

    bool operator==(const RouteOption &) const = default;
};

struct OperationSpec {
    std::vector<RouteOption> alternatives;

    bool operator==(const OperationSpec &) const = default;
};

struct Part {
    std::string id;
    double weight = 0.0;       // kg
    double holding_cost = 0.0; // $/unit/period
    std::vector<double> demand;
    std::vector<double> price;
    double salvage_price = 0.0;
    std::vector<double> raw_cost; // $/kg per period
    std::vector<OperationSpec> operations;

    bool operator==(const Part &) const = default;
};

struct Machine {
    std::string id;
    std::string label;
    std::vector<double> normal_capacity;   // min per period
    std::vector<double> overtime_capacity; // min per period
    double normal_rate = 0.0;              // $/min
    double overtime_rate = 0.0;            // $/min

    bool operator==(const Machine &) const = default;
};

/// Unvalidated problem data, as read from a document or assembled in code.
struct ProblemDescription {
    int horizon = 0;
    std::vector<Part> parts;
    std::vector<Machine> machines;

    bool operator==(const ProblemDescription &) const = default;
};

/// One eligible (part, operation, alternative) route with rates resolved.
struct Route {
    std::size_t part = 0;
    std::size_t operation = 0;
    std::size_t alternative = 0;
    std::size_t machine = 0; // index into ProblemInstance::machines()
    double process_time = 0.0;
    double normal_rate = 0.0;
    double overtime_rate = 0.0;
};

/// Flat table of eligible routes, ordered by part, operation, alternative.
struct RouteTable {
    std::vector<Route> routes;
    // first route id of (part, operation); offsets[i][k] + a is the route id
    std::vector<std::vector<std::size_t>> offsets;
};

class ProblemInstance;

[[nodiscard]] ProblemInstance build_instance(ProblemDescription description);

/// Validated, immutable problem instance. Only build_instance creates one.
class ProblemInstance {
public:
    [[nodiscard]] std::size_t horizon() const { return static_cast<std::size_t>(desc_.horizon); }
    [[nodiscard]] const std::vector<Part> &parts() const { return desc_.parts; }
    [[nodiscard]] const std::vector<Machine> &machines() const { return desc_.machines; }
    [[nodiscard]] const ProblemDescription &description() const { return desc_; }

    [[nodiscard]] std::size_t part_count() const { return desc_.parts.size(); }
    [[nodiscard]] std::size_t machine_count() const { return desc_.machines.size(); }
    [[nodiscard]] std::size_t operation_count(std::size_t part) const {
        return desc_.parts[part].operations.size();
    }
    [[nodiscard]] std::size_t alternative_count(std::size_t part, std::size_t op) const {
        return desc_.parts[part].operations[op].alternatives.size();
    }

    [[nodiscard]] const Route &route(std::size_t part, std::size_t op, std::size_t alt) const {
        return routes_->routes[routes_->offsets[part][op] + alt];
    }
    [[nodiscard]] std::span<const Route> routes() const { return routes_->routes; }
    [[nodiscard]] const std::shared_ptr<const RouteTable> &route_table() const { return routes_; }

    [[nodiscard]] double capacity(std::size_t machine, std::size_t period, Shift shift) const;

    /// floor(capacity / process_time): what the route's machine could make alone in that shift.
    [[nodiscard]] Quantity upper_bound(std::size_t part, std::size_t op, std::size_t alt,
                                       std::size_t period, Shift shift) const;

    [[nodiscard]] std::optional<std::size_t> find_machine(const std::string &id) const;

    bool operator==(const ProblemInstance &other) const { return desc_ == other.desc_; }

private:
    friend ProblemInstance build_instance(ProblemDescription description);
    explicit ProblemInstance(ProblemDescription desc) : desc_(std::move(desc)) {}

    ProblemDescription desc_;
    std::shared_ptr<const RouteTable> routes_;
};

/// Integer production plan over the eligible tuples of one instance.
///
/// Storage is indexed by route id (see RouteTable), shift and period, so
/// ineligible tuples cannot be represented at all.
class Schedule {
public:
    explicit Schedule(const ProblemInstance &instance);

    [[nodiscard]] Quantity at(std::size_t part, std::size_t op, std::size_t alt, std::size_t period,
                              Shift shift) const {
        return data_[slot(routes_->offsets[part][op] + alt, period, shift)];
    }
    Quantity &at(std::size_t part, std::size_t op, std::size_t alt, std::size_t period, Shift shift) {
        return data_[slot(routes_->offsets[part][op] + alt, period, shift)];
    }

    [[nodiscard]] Quantity by_route(std::size_t route, std::size_t period, Shift shift) const {
        return data_[slot(route, period, shift)];
    }

    /// Normal plus overtime quantity of operation `op` of `part` in `period`.
    [[nodiscard]] Quantity operation_total(std::size_t part, std::size_t op, std::size_t period) const;

    [[nodiscard]] std::size_t horizon() const { return horizon_; }
    [[nodiscard]] std::size_t slot_count() const { return data_.size(); }
    [[nodiscard]] std::size_t slot(std::size_t route, std::size_t period, Shift shift) const {
        return (route * kShiftCount + static_cast<std::size_t>(shift)) * horizon_ + period;
    }
    [[nodiscard]] std::span<const Quantity> slots() const { return data_; }
    [[nodiscard]] std::span<Quantity> slots() { return data_; }

    [[nodiscard]] bool is_zero() const;

    bool operator==(const Schedule &other) const {
        return horizon_ == other.horizon_ && data_ == other.data_;
    }

private:
    std::shared_ptr<const RouteTable> routes_;
    std::size_t horizon_ = 0;
    std::vector<Quantity> data_;
};

} // namespace fjsp
