#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "randwave/experiment/config.hpp"

namespace randwave::experiment
{

//! A checked identity failed during a run (CLI exit code 2).
class InvariantFailure : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int schema_version = 1;

//! One CSV line: metric,param1,param2,value,ci_lo,ci_hi.
struct Row
{
    std::string metric;
    std::string param1;
    std::string param2;
    double value = 0;
    double ci_lo = 0;
    double ci_hi = 0;
};

using SummaryValue = std::variant<bool, std::int64_t, double, std::string>;

struct ResultRecord
{
    ExperimentConfig config;
    std::vector<Row> rows;
    std::map<std::string, SummaryValue> summary;
    std::vector<std::string> notes;
    //! identities that failed; a non-empty list makes the run fail
    std::vector<std::string> failures;
    double wall_seconds = 0;
    unsigned workers = 1;
};

//! "%.17g", with nan and +-inf spelled out.
std::string format_number(double v);

//! Runs the configured experiment without touching the filesystem.
ResultRecord run_experiment(ExperimentConfig const& config);

std::string format_csv(ResultRecord const& record);
std::string format_json(ResultRecord const& record);

/*!
 * Writes <root>/<kind>-<seed>/result.{json,csv} through a temporary
 * directory that is renamed into place. Returns the final directory.
 * Throws InvariantFailure, writing nothing, when the record carries failures.
 */
std::filesystem::path write_result(ResultRecord const& record, std::filesystem::path const& root);

/*!
 * run_experiment followed by write_result.
 */
std::filesystem::path run(ExperimentConfig const& config);

}  // namespace randwave::experiment
