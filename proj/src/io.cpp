#include "fjsp/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

namespace fjsp {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string &path, const std::string &what) {
    throw FormatError(fmt::format("schema error at '{}': {}", path, what));
}

json parse_json(std::string_view document) {
    try {
        return json::parse(document.begin(), document.end());
    } catch (const json::parse_error &e) {
        throw FormatError(fmt::format("syntax error: {}", e.what()));
    }
}

std::string join(const std::string &path, const std::string &key) {
    return path.empty() ? key : path + "." + key;
}

std::string index(const std::string &path, std::size_t i) {
    return fmt::format("{}[{}]", path, i);
}

const json &field(const json &object, const std::string &key, const std::string &path) {
    if (!object.is_object()) schema_error(path.empty() ? "<root>" : path, "expected an object");
    const auto it = object.find(key);
    if (it == object.end()) schema_error(join(path, key), "missing required field");
    return *it;
}

const json &array_field(const json &object, const std::string &key, const std::string &path) {
    const auto &value = field(object, key, path);
    if (!value.is_array()) schema_error(join(path, key), "expected an array");
    return value;
}

double number(const json &value, const std::string &path) {
    if (!value.is_number()) schema_error(path, "expected a number");
    return value.get<double>();
}

double number_field(const json &object, const std::string &key, const std::string &path) {
    return number(field(object, key, path), join(path, key));
}

std::int64_t integer_field(const json &object, const std::string &key, const std::string &path) {
    const auto &value = field(object, key, path);
    if (!value.is_number_integer()) schema_error(join(path, key), "expected an integer");
    return value.get<std::int64_t>();
}

std::string string_field(const json &object, const std::string &key, const std::string &path) {
    const auto &value = field(object, key, path);
    if (!value.is_string()) schema_error(join(path, key), "expected a string");
    return value.get<std::string>();
}

std::vector<double> series_field(const json &object, const std::string &key, const std::string &path) {
    const auto &values = array_field(object, key, path);
    std::vector<double> out;
    out.reserve(values.size());
    for (std::size_t t = 0; t < values.size(); ++t) out.push_back(number(values[t], index(join(path, key), t)));
    return out;
}

std::string quantities_cell(const std::vector<Quantity> &values) {
    return fmt::format("{}", fmt::join(values, ";"));
}

std::string units(double value) {
    if (value == std::floor(value) && std::abs(value) < 1e15) {
        return fmt::format("{}", static_cast<long long>(value));
    }
    return fmt::format("{}", value);
}

} // namespace

ProblemDescription parse_problem_description(std::string_view document) {
    const json root = parse_json(document);
    if (!root.is_object()) schema_error("<root>", "expected an object");

    ProblemDescription description;
    const auto horizon = integer_field(root, "horizon", "");
    if (horizon < 1 || horizon > std::numeric_limits<int>::max()) schema_error("horizon", "must be >= 1");
    description.horizon = static_cast<int>(horizon);

    const auto &machines = array_field(root, "machines", "");
    for (std::size_t j = 0; j < machines.size(); ++j) {
        const auto path = index("machines", j);
        const auto &m = machines[j];
        description.machines.push_back(Machine{
            .id = string_field(m, "id", path),
            .label = string_field(m, "label", path),
            .normal_capacity = series_field(m, "normal_capacity", path),
            .overtime_capacity = series_field(m, "overtime_capacity", path),
            .normal_rate = number_field(m, "normal_rate", path),
            .overtime_rate = number_field(m, "overtime_rate", path),
        });
    }

    const auto &parts = array_field(root, "parts", "");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto path = index("parts", i);
        const auto &p = parts[i];
        Part part{
            .id = string_field(p, "id", path),
            .weight = number_field(p, "weight", path),
            .holding_cost = number_field(p, "holding_cost", path),
            .demand = series_field(p, "demand", path),
            .price = series_field(p, "price", path),
            .salvage_price = number_field(p, "salvage_price", path),
            .raw_cost = series_field(p, "raw_cost", path),
            .operations = {},
        };
        const auto &operations = array_field(p, "operations", path);
        for (std::size_t k = 0; k < operations.size(); ++k) {
            const auto op_path = index(join(path, "operations"), k);
            const auto &alternatives = array_field(operations[k], "alternatives", op_path);
            OperationSpec op;
            for (std::size_t a = 0; a < alternatives.size(); ++a) {
                const auto alt_path = index(join(op_path, "alternatives"), a);
                const auto &alt = alternatives[a];
                RouteOption option{
                    .machine = string_field(alt, "machine", alt_path),
                    .process_time = number_field(alt, "process_time", alt_path),
                    .normal_rate = std::nullopt,
                    .overtime_rate = std::nullopt,
                };
                if (alt.contains("normal_rate")) option.normal_rate = number_field(alt, "normal_rate", alt_path);
                if (alt.contains("overtime_rate")) {
                    option.overtime_rate = number_field(alt, "overtime_rate", alt_path);
                }
                op.alternatives.push_back(std::move(option));
            }
            part.operations.push_back(std::move(op));
        }
        description.parts.push_back(std::move(part));
    }
    return description;
}

ProblemInstance parse_problem(std::string_view document) {
    return build_instance(parse_problem_description(document));
}

std::string write_problem(const ProblemDescription &description) {
    json root = json::object();
    root["horizon"] = description.horizon;
    root["machines"] = json::array();
    for (const auto &m : description.machines) {
        root["machines"].push_back({
            {"id", m.id},
            {"label", m.label},
            {"normal_capacity", m.normal_capacity},
            {"overtime_capacity", m.overtime_capacity},
            {"normal_rate", m.normal_rate},
            {"overtime_rate", m.overtime_rate},
        });
    }
    root["parts"] = json::array();
    for (const auto &p : description.parts) {
        json operations = json::array();
        for (const auto &op : p.operations) {
            json alternatives = json::array();
            for (const auto &alt : op.alternatives) {
                json entry = {{"machine", alt.machine}, {"process_time", alt.process_time}};
                if (alt.normal_rate) entry["normal_rate"] = *alt.normal_rate;
                if (alt.overtime_rate) entry["overtime_rate"] = *alt.overtime_rate;
                alternatives.push_back(std::move(entry));
            }
            operations.push_back({{"alternatives", std::move(alternatives)}});
        }
        root["parts"].push_back({
            {"id", p.id},
            {"weight", p.weight},
            {"holding_cost", p.holding_cost},
            {"demand", p.demand},
            {"price", p.price},
            {"salvage_price", p.salvage_price},
            {"raw_cost", p.raw_cost},
            {"operations", std::move(operations)},
        });
    }
    return root.dump();
}

std::string write_solution(const ProblemInstance &instance, const Schedule &schedule) {
    json entries = json::array();
    const auto &parts = instance.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t k = 0; k < parts[i].operations.size(); ++k) {
            const auto &alternatives = parts[i].operations[k].alternatives;
            for (std::size_t a = 0; a < alternatives.size(); ++a) {
                for (std::size_t t = 0; t < instance.horizon(); ++t) {
                    for (const Shift shift : kShifts) {
                        const auto qty = schedule.at(i, k, a, t, shift);
                        if (qty == 0) continue;
                        entries.push_back({
                            {"part", parts[i].id},
                            {"operation", k + 1},
                            {"machine", alternatives[a].machine},
                            {"period", t + 1},
                            {"shift", to_string(shift)},
                            {"qty", qty},
                        });
                    }
                }
            }
        }
    }
    return json{{"entries", std::move(entries)}}.dump();
}

Schedule read_solution(std::string_view document, const ProblemInstance &instance) {
    const json root = parse_json(document);
    const auto &entries = array_field(root, "entries", "");
    Schedule schedule(instance);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, int>> seen;

    for (std::size_t e = 0; e < entries.size(); ++e) {
        const auto path = index("entries", e);
        const auto &entry = entries[e];
        const auto part_id = string_field(entry, "part", path);
        const auto op_number = integer_field(entry, "operation", path);
        const auto machine_id = string_field(entry, "machine", path);
        const auto period = integer_field(entry, "period", path);
        const auto shift_name = string_field(entry, "shift", path);
        const auto qty = integer_field(entry, "qty", path);
        const auto tuple = fmt::format("(part {}, operation {}, machine {}, period {}, {})", part_id, op_number,
                                       machine_id, period, shift_name);

        const auto &parts = instance.parts();
        const auto part_it =
            std::find_if(parts.begin(), parts.end(), [&](const Part &p) { return p.id == part_id; });
        if (part_it == parts.end()) throw FormatError(fmt::format("{}: unknown tuple {}: no such part", path, tuple));
        const auto i = static_cast<std::size_t>(part_it - parts.begin());
        if (op_number < 1 || static_cast<std::size_t>(op_number) > part_it->operations.size()) {
            throw FormatError(fmt::format("{}: unknown tuple {}: no such operation", path, tuple));
        }
        const auto k = static_cast<std::size_t>(op_number - 1);
        const auto &alternatives = part_it->operations[k].alternatives;
        const auto alt_it = std::find_if(alternatives.begin(), alternatives.end(),
                                         [&](const RouteOption &o) { return o.machine == machine_id; });
        if (alt_it == alternatives.end()) {
            throw FormatError(fmt::format("{}: unknown tuple {}: machine not eligible", path, tuple));
        }
        const auto a = static_cast<std::size_t>(alt_it - alternatives.begin());
        if (period < 1 || static_cast<std::size_t>(period) > instance.horizon()) {
            throw FormatError(fmt::format("{}: unknown tuple {}: period out of range", path, tuple));
        }
        const auto t = static_cast<std::size_t>(period - 1);
        Shift shift;
        if (shift_name == "normal") {
            shift = Shift::normal;
        } else if (shift_name == "overtime") {
            shift = Shift::overtime;
        } else {
            throw FormatError(fmt::format("{}: shift must be \"normal\" or \"overtime\"", join(path, "shift")));
        }
        if (qty < 0) throw FormatError(fmt::format("{}: negative quantity {} for {}", path, qty, tuple));
        if (!seen.emplace(i, k, a, t, static_cast<int>(shift)).second) {
            throw FormatError(fmt::format("{}: duplicate entry for {}", path, tuple));
        }
        schedule.at(i, k, a, t, shift) = qty;
    }
    return schedule;
}

ReportCsv write_report_csv(const ProblemInstance &instance, const Schedule &schedule,
                           const EvaluationReport &report) {
    ReportCsv csv;
    const auto &parts = instance.parts();
    for (std::size_t t = 0; t < instance.horizon(); ++t) {
        std::string out(kReportHeader);
        out += '\n';
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const double inventory_in = t == 0 ? 0.0 : report.inventory[i][t - 1];
            for (std::size_t k = 0; k < parts[i].operations.size(); ++k) {
                const auto &alternatives = parts[i].operations[k].alternatives;
                std::vector<std::string> machines;
                std::vector<Quantity> normal;
                std::vector<Quantity> overtime;
                for (std::size_t a = 0; a < alternatives.size(); ++a) {
                    machines.push_back(alternatives[a].machine);
                    normal.push_back(schedule.at(i, k, a, t, Shift::normal));
                    overtime.push_back(schedule.at(i, k, a, t, Shift::overtime));
                }
                out += fmt::format("{},{},{},{},{},{},{},{},{}\n", parts[i].id, k + 1, fmt::join(machines, ";"),
                                   quantities_cell(normal), quantities_cell(overtime),
                                   schedule.operation_total(i, k, t), units(inventory_in),
                                   units(parts[i].demand[t]), units(report.inventory[i][t]));
            }
        }
        csv.periods.push_back(std::move(out));
    }

    const auto &terms = report.terms;
    csv.summary = fmt::format(
        "term,value\ngross_revenue,{:.2f}\nsalvage_revenue,{:.2f}\nnormal_op_cost,{:.2f}\n"
        "overtime_op_cost,{:.2f}\nraw_material_cost,{:.2f}\nholding_cost,{:.2f}\nobjective,{:.2f}\n",
        terms.gross_revenue, terms.salvage_revenue, terms.normal_op_cost, terms.overtime_op_cost,
        terms.raw_material_cost, terms.holding_cost, report.objective);
    return csv;
}

std::string ReportCsv::combined() const {
    std::string out;
    for (std::size_t t = 0; t < periods.size(); ++t) {
        out += fmt::format("# period {}\n", t + 1);
        out += periods[t];
        out += '\n';
    }
    out += "# summary\n";
    out += summary;
    return out;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(fmt::format("{}: file not found", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError(fmt::format("{}: cannot open for writing", path.string()));
    out << text;
    if (!out) throw FormatError(fmt::format("{}: write failed", path.string()));
}

} // namespace fjsp
