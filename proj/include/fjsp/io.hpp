#pragma once

#include "fjsp/evaluator.hpp"
#include "fjsp/model.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fjsp {

/// Malformed or schema-violating document. The message carries the
/// line/column of syntax errors or the offending field path.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// -- problem documents -----------------------------------------------------

[[nodiscard]] ProblemDescription parse_problem_description(std::string_view document);

/// parse_problem_description followed by build_instance.
[[nodiscard]] ProblemInstance parse_problem(std::string_view document);

/// Canonical form: sorted keys, no whitespace, optional route rates omitted
/// when unset.
[[nodiscard]] std::string write_problem(const ProblemDescription &description);

// -- solution documents ----------------------------------------------------

/// Canonical form listing every non-zero quantity in part, operation,
/// alternative, period, shift order.
[[nodiscard]] std::string write_solution(const ProblemInstance &instance, const Schedule &schedule);

/// Entries not listed are zero. Rejects ineligible tuples, duplicates and
/// negative quantities.
[[nodiscard]] Schedule read_solution(std::string_view document, const ProblemInstance &instance);

// -- reports ---------------------------------------------------------------

inline constexpr std::string_view kReportHeader =
    "part,operation,machines,normal,overtime,total,inventory_in,demand,inventory_out";

struct ReportCsv {
    std::vector<std::string> periods; // one CSV document per period
    std::string summary;              // term,value rows for the six terms and z

    /// All blocks in one text, each period introduced by a "# period N" line
    /// and the summary by "# summary".
    [[nodiscard]] std::string combined() const;
};

[[nodiscard]] ReportCsv write_report_csv(const ProblemInstance &instance, const Schedule &schedule,
                                         const EvaluationReport &report);

// -- case study ------------------------------------------------------------

/// Gas-valve shop: 3 parts, 9 machines, 3 monthly periods.
[[nodiscard]] ProblemDescription case_study_description();
[[nodiscard]] ProblemInstance embedded_case_study();

/// The published three-period production plan for the case study.
[[nodiscard]] Schedule published_case_study_solution(const ProblemInstance &case_study);

// -- files -----------------------------------------------------------------

[[nodiscard]] std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace fjsp
