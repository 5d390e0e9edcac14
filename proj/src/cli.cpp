#include "fjsp/cli.hpp"

#include "fjsp/evaluator.hpp"
#include "fjsp/ga.hpp"
#include "fjsp/gene_map.hpp"
#include "fjsp/io.hpp"
#include "fjsp/oracle.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

namespace fjsp::cli {

namespace {

const std::map<std::string, HoldingMode> kHoldingModes = {{"cumulative", HoldingMode::cumulative},
                                                          {"literal", HoldingMode::literal}};
const std::map<std::string, DemandMode> kDemandModes = {{"cumulative", DemandMode::cumulative},
                                                        {"literal", DemandMode::literal}};

struct ModelFlags {
    HoldingMode holding = HoldingMode::cumulative;
    DemandMode demand = DemandMode::cumulative;
    PenaltyWeights penalty;

    void attach(CLI::App &cmd) {
        cmd.add_option("--holding", holding, "Holding-cost reading: cumulative|literal")
            ->transform(CLI::CheckedTransformer(kHoldingModes, CLI::ignore_case))
            ->default_str("cumulative");
        cmd.add_option("--demand", demand, "Demand constraint: cumulative|literal")
            ->transform(CLI::CheckedTransformer(kDemandModes, CLI::ignore_case))
            ->default_str("cumulative");
        cmd.add_option("--shortage-weight", penalty.shortage_weight, "Penalty $ per unit of unmet demand")
            ->capture_default_str()
            ->check(CLI::NonNegativeNumber);
        cmd.add_option("--overload-weight", penalty.overload_weight, "Penalty $ per minute over capacity")
            ->capture_default_str()
            ->check(CLI::NonNegativeNumber);
    }
    [[nodiscard]] EvaluationOptions options() const { return {.holding = holding, .demand = demand}; }
};

const char *holding_name(HoldingMode mode) { return mode == HoldingMode::cumulative ? "cumulative" : "literal"; }

void print_terms(std::ostream &out, const EvaluationReport &report) {
    const auto &t = report.terms;
    fmt::print(out, "objective={:.2f}\n", report.objective);
    fmt::print(out, "gross_revenue={:.2f}\nsalvage_revenue={:.2f}\nnormal_op_cost={:.2f}\n", t.gross_revenue,
               t.salvage_revenue, t.normal_op_cost);
    fmt::print(out, "overtime_op_cost={:.2f}\nraw_material_cost={:.2f}\nholding_cost={:.2f}\n", t.overtime_op_cost,
               t.raw_material_cost, t.holding_cost);
}

void print_violations(std::ostream &out, const ProblemInstance &instance, const EvaluationReport &report) {
    const auto &parts = instance.parts();
    for (const auto &r : report.flow_residuals) {
        if (r.residual == 0) continue;
        fmt::print(out, "flow_residual.{}.op{}.period{}={}\n", parts[r.part].id, r.operation + 1, r.period + 1,
                   r.residual);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t t = 0; t < instance.horizon(); ++t) {
            if (report.demand_shortage[i][t] > 0.0) {
                fmt::print(out, "shortage.{}.period{}={}\n", parts[i].id, t + 1, report.demand_shortage[i][t]);
            }
        }
    }
    for (const Shift shift : kShifts) {
        const auto &overload = report.capacity_for(shift).overload;
        for (std::size_t j = 0; j < instance.machine_count(); ++j) {
            for (std::size_t t = 0; t < instance.horizon(); ++t) {
                if (overload[j][t] > 0.0) {
                    fmt::print(out, "overload.{}.period{}.{}={:.4f}\n", instance.machines()[j].id, t + 1,
                               to_string(shift), overload[j][t]);
                }
            }
        }
    }
    fmt::print(out, "total_shortage={}\n", report.total_shortage());
    fmt::print(out, "total_overload_normal={:.4f}\ntotal_overload_overtime={:.4f}\n",
               report.total_overload(Shift::normal), report.total_overload(Shift::overtime));
}

int run_solve(const std::string &problem_path, GaConfig config, const std::string &solution_path,
              const std::string &report_path, std::ostream &out) {
    const auto instance = parse_problem(read_text_file(problem_path));
    config.threads = threads_from_env();

    const auto start = std::chrono::steady_clock::now();
    const auto result = evolve(instance, config);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    write_text_file(solution_path, write_solution(instance, result.best_schedule));
    write_text_file(report_path, write_report_csv(instance, result.best_schedule, result.best_report).combined());

    fmt::print(out, "status={}\n", result.best_report.feasible ? "feasible" : "infeasible");
    print_terms(out, result.best_report);
    fmt::print(out, "fitness={:.2f}\n", result.best_fitness);
    fmt::print(out, "stop_reason={}\ngenerations={}\n", to_string(result.stop_reason), result.generations_run);
    fmt::print(out, "wall_time_s={:.3f}\nsolution={}\nreport={}\n", elapsed.count(), solution_path, report_path);
    if (!result.best_report.feasible) print_violations(out, instance, result.best_report);
    return result.best_report.feasible ? kOk : kInfeasible;
}

int run_evaluate(const std::string &problem_path, const std::string &solution_path, const ModelFlags &flags,
                 std::ostream &out) {
    const auto instance = parse_problem(read_text_file(problem_path));
    const auto schedule = read_solution(read_text_file(solution_path), instance);
    const auto report = evaluate(instance, schedule, flags.options());

    fmt::print(out, "feasible={}\n", report.feasible ? "true" : "false");
    fmt::print(out, "holding_mode={}\n", holding_name(flags.holding));
    print_terms(out, report);
    for (const auto mode : {HoldingMode::cumulative, HoldingMode::literal}) {
        fmt::print(out, "objective_{}={:.2f}\n", holding_name(mode),
                   objective_breakdown(instance, schedule, mode).objective());
    }
    fmt::print(out, "fitness={:.2f}\n", fitness(report, flags.penalty));
    print_violations(out, instance, report);
    return report.feasible ? kOk : kInfeasible;
}

int run_validate(const std::string &problem_path, std::ostream &out) {
    const auto instance = parse_problem(read_text_file(problem_path));
    const GeneMap map(instance);
    fmt::print(out, "P={} M={} T={} genes={}\n", instance.part_count(), instance.machine_count(), instance.horizon(),
               map.size());
    return kOk;
}

int run_oracle(const std::string &problem_path, std::uint64_t limit, const ModelFlags &flags,
               const std::string &solution_path, std::ostream &out, std::ostream &err) {
    const auto instance = parse_problem(read_text_file(problem_path));
    try {
        const auto result = enumerate_optimal(instance, limit, flags.options());
        fmt::print(out, "optimum={:.2f}\nstates_visited={}\n", result.optimum, result.states_visited);
        if (!solution_path.empty()) {
            write_text_file(solution_path, write_solution(instance, result.schedule));
            fmt::print(out, "solution={}\n", solution_path);
        } else {
            fmt::print(out, "solution_json={}\n", write_solution(instance, result.schedule));
        }
        return kOk;
    } catch (const InstanceTooLarge &e) {
        fmt::print(out, "status=too_large\n");
        if (e.space.saturated) {
            fmt::print(out, "search_space=saturated\n");
        } else {
            fmt::print(out, "search_space={}\n", e.space.size);
        }
        fmt::print(err, "{}\n", e.what());
        return kTooLarge;
    } catch (const NoFeasibleSchedule &e) {
        fmt::print(out, "status=infeasible\n");
        fmt::print(err, "{}\n", e.what());
        return kInfeasible;
    }
}

int run_casestudy(const std::string &directory, std::ostream &out) {
    const std::filesystem::path dir(directory);
    std::filesystem::create_directories(dir);
    const auto description = case_study_description();
    const auto instance = build_instance(description);
    const auto problem = dir / "casestudy.json";
    const auto solution = dir / "published_solution.json";
    write_text_file(problem, write_problem(description));
    write_text_file(solution, write_solution(instance, published_case_study_solution(instance)));
    fmt::print(out, "problem={}\nsolution={}\n", problem.string(), solution.string());
    return kOk;
}

} // namespace

int threads_from_env() {
    const char *raw = std::getenv("FJSP_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    char *end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 0 || value > 4096) {
        throw std::invalid_argument(fmt::format("FJSP_THREADS must be a non-negative integer (got '{}')", raw));
    }
    return static_cast<int>(value);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Profit-maximizing flexible job-shop planner (genetic algorithm + exact oracle)", "fjsp"};
    app.require_subcommand(1);

    GaConfig config;
    ModelFlags solve_flags;
    std::string problem_path;
    std::string solution_path;
    std::string solve_out = "solution.json";
    std::string solve_report = "report.csv";
    auto *solve = app.add_subcommand("solve", "Run the genetic algorithm on a problem document");
    solve->add_option("problem", problem_path, "Problem JSON")->required();
    solve->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    solve->add_option("--pop-size", config.population_size, "Population size")->capture_default_str();
    solve->add_option("--generations", config.max_generations, "Maximum generations")->capture_default_str();
    solve->add_option("--crossover-rate", config.crossover_rate, "Crossover probability")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    solve->add_option("--mutation-rate", config.mutation_rate, "Per-gene mutation probability")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    solve->add_option("--tournament", config.tournament_size, "Tournament size")->capture_default_str();
    solve->add_option("--elitism", config.elitism_count, "Elite individuals copied unchanged")
        ->capture_default_str();
    solve->add_option("--stall", config.stall_limit, "Stop after this many generations without improvement")
        ->capture_default_str();
    solve->add_option("--out", solve_out, "Solution JSON output")->capture_default_str();
    solve->add_option("--report", solve_report, "Report CSV output")->capture_default_str();
    solve_flags.attach(*solve);

    ModelFlags eval_flags;
    auto *eval = app.add_subcommand("evaluate", "Evaluate a solution against a problem");
    eval->add_option("problem", problem_path, "Problem JSON")->required();
    eval->add_option("solution", solution_path, "Solution JSON")->required();
    eval_flags.attach(*eval);

    auto *validate_cmd = app.add_subcommand("validate", "Validate a problem document and summarize it");
    validate_cmd->add_option("problem", problem_path, "Problem JSON")->required();

    ModelFlags oracle_flags;
    std::uint64_t limit = kDefaultOracleLimit;
    std::string oracle_out;
    auto *oracle = app.add_subcommand("oracle", "Exhaustive exact optimum for tiny instances");
    oracle->add_option("problem", problem_path, "Problem JSON")->required();
    oracle->add_option("--limit", limit, "Largest search space to enumerate")->capture_default_str();
    oracle->add_option("--out", oracle_out, "Write the optimal solution JSON here");
    oracle_flags.attach(*oracle);

    std::string casestudy_dir = ".";
    auto *casestudy = app.add_subcommand("casestudy", "Write the built-in case study and its published plan");
    casestudy->add_option("--out", casestudy_dir, "Output directory")->capture_default_str();

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kError;
    }

    try {
        if (solve->parsed()) {
            config.penalty = solve_flags.penalty;
            config.evaluation = solve_flags.options();
            return run_solve(problem_path, config, solve_out, solve_report, out);
        }
        if (eval->parsed()) return run_evaluate(problem_path, solution_path, eval_flags, out);
        if (validate_cmd->parsed()) return run_validate(problem_path, out);
        if (oracle->parsed()) return run_oracle(problem_path, limit, oracle_flags, oracle_out, out, err);
        if (casestudy->parsed()) return run_casestudy(casestudy_dir, out);
    } catch (const std::exception &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kError;
    }
    return kError;
}

} // namespace fjsp::cli
