#include "fjsp/model.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <fmt/format.h>

namespace fjsp {

const char *to_string(Shift shift) {
    return shift == Shift::normal ? "normal" : "overtime";
}

namespace {

// Capacity / process-time ratios such as 9240 / 0.3 land a hair below the
// integer in binary floating point.
constexpr double kBoundSlack = 1e-9;

[[noreturn]] void fail(const std::string &message) {
    throw InstanceError(message);
}

void check_series(const std::vector<double> &values, std::size_t horizon, const std::string &owner,
                  const char *field) {
    if (values.size() != horizon) {
        fail(fmt::format("{}: {} has {} entries, expected {}", owner, field, values.size(), horizon));
    }
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (!std::isfinite(values[t]) || values[t] < 0.0) {
            fail(fmt::format("{} period {}: {} must be a finite value >= 0 (got {})", owner, t + 1,
                             field, values[t]));
        }
    }
}

void check_non_negative(double value, const std::string &owner, const char *field) {
    if (!std::isfinite(value) || value < 0.0) {
        fail(fmt::format("{}: {} must be a finite value >= 0 (got {})", owner, field, value));
    }
}

} // namespace

ProblemInstance build_instance(ProblemDescription description) {
    if (description.horizon < 1) {
        fail(fmt::format("horizon must be >= 1 (got {})", description.horizon));
    }
    if (description.parts.empty()) fail("instance has no parts");
    if (description.machines.empty()) fail("instance has no machines");

    const auto horizon = static_cast<std::size_t>(description.horizon);

    std::unordered_set<std::string> machine_ids;
    for (const auto &machine : description.machines) {
        const auto owner = fmt::format("machine {}", machine.id);
        if (!machine_ids.insert(machine.id).second) fail(fmt::format("duplicate machine id '{}'", machine.id));
        check_series(machine.normal_capacity, horizon, owner, "normal_capacity");
        check_series(machine.overtime_capacity, horizon, owner, "overtime_capacity");
        check_non_negative(machine.normal_rate, owner, "normal_rate");
        check_non_negative(machine.overtime_rate, owner, "overtime_rate");
    }

    std::unordered_set<std::string> part_ids;
    for (const auto &part : description.parts) {
        const auto owner = fmt::format("part {}", part.id);
        if (!part_ids.insert(part.id).second) fail(fmt::format("duplicate part id '{}'", part.id));
        if (!std::isfinite(part.weight) || part.weight <= 0.0) {
            fail(fmt::format("{}: weight must be > 0 (got {})", owner, part.weight));
        }
        check_non_negative(part.holding_cost, owner, "holding_cost");
        check_non_negative(part.salvage_price, owner, "salvage_price");
        check_series(part.demand, horizon, owner, "demand");
        check_series(part.price, horizon, owner, "price");
        check_series(part.raw_cost, horizon, owner, "raw_cost");
        if (part.operations.empty()) fail(fmt::format("{}: has no operations", owner));

        for (std::size_t k = 0; k < part.operations.size(); ++k) {
            const auto &alternatives = part.operations[k].alternatives;
            const auto op_owner = fmt::format("{} operation {}", owner, k + 1);
            if (alternatives.empty()) fail(fmt::format("{}: no alternative machines", op_owner));
            std::unordered_set<std::string> seen;
            for (const auto &option : alternatives) {
                const auto route_owner = fmt::format("{} machine {}", op_owner, option.machine);
                if (!machine_ids.contains(option.machine)) {
                    fail(fmt::format("{}: unknown machine '{}'", op_owner, option.machine));
                }
                if (!seen.insert(option.machine).second) {
                    fail(fmt::format("{}: machine '{}' listed twice", op_owner, option.machine));
                }
                if (!std::isfinite(option.process_time) || option.process_time <= 0.0) {
                    fail(fmt::format("{}: process_time must be > 0 (got {})", route_owner,
                                     option.process_time));
                }
                if (option.normal_rate) check_non_negative(*option.normal_rate, route_owner, "normal_rate");
                if (option.overtime_rate) {
                    check_non_negative(*option.overtime_rate, route_owner, "overtime_rate");
                }
            }
        }
    }

    ProblemInstance instance(std::move(description));

    auto table = std::make_shared<RouteTable>();
    const auto &parts = instance.parts();
    table->offsets.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t k = 0; k < parts[i].operations.size(); ++k) {
            table->offsets[i].push_back(table->routes.size());
            const auto &alternatives = parts[i].operations[k].alternatives;
            for (std::size_t a = 0; a < alternatives.size(); ++a) {
                const auto &option = alternatives[a];
                const auto j = *instance.find_machine(option.machine);
                const auto &machine = instance.machines()[j];
                table->routes.push_back(Route{
                    .part = i,
                    .operation = k,
                    .alternative = a,
                    .machine = j,
                    .process_time = option.process_time,
                    .normal_rate = option.normal_rate.value_or(machine.normal_rate),
                    .overtime_rate = option.overtime_rate.value_or(machine.overtime_rate),
                });
            }
        }
    }
    instance.routes_ = std::move(table);
    return instance;
}

double ProblemInstance::capacity(std::size_t machine, std::size_t period, Shift shift) const {
    const auto &m = desc_.machines[machine];
    return shift == Shift::normal ? m.normal_capacity[period] : m.overtime_capacity[period];
}

Quantity ProblemInstance::upper_bound(std::size_t part, std::size_t op, std::size_t alt,
                                      std::size_t period, Shift shift) const {
    const auto &r = route(part, op, alt);
    const double cap = capacity(r.machine, period, shift);
    return static_cast<Quantity>(std::floor(cap / r.process_time + kBoundSlack));
}

std::optional<std::size_t> ProblemInstance::find_machine(const std::string &id) const {
    const auto &ms = desc_.machines;
    const auto it = std::find_if(ms.begin(), ms.end(), [&](const Machine &m) { return m.id == id; });
    if (it == ms.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ms.begin());
}

Schedule::Schedule(const ProblemInstance &instance)
    : routes_(instance.route_table()), horizon_(instance.horizon()),
      data_(instance.routes().size() * kShiftCount * instance.horizon(), 0) {}

Quantity Schedule::operation_total(std::size_t part, std::size_t op, std::size_t period) const {
    const auto first = routes_->offsets[part][op];
    const auto last = op + 1 < routes_->offsets[part].size() ? routes_->offsets[part][op + 1]
                      : part + 1 < routes_->offsets.size()   ? routes_->offsets[part + 1][0]
                                                              : routes_->routes.size();
    Quantity total = 0;
    for (auto r = first; r < last; ++r) {
        total += data_[slot(r, period, Shift::normal)] + data_[slot(r, period, Shift::overtime)];
    }
    return total;
}

bool Schedule::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Quantity q) { return q == 0; });
}

} // namespace fjsp
