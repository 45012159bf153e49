#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace randwave::experiment
{

//! Malformed or inconsistent configuration (CLI exit code 1).
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum class ParamType
{
    Int,
    Double,
    DoubleList,
    IntList,
    Word,
    Bool
};

struct ParamSpec
{
    std::string key;
    ParamType type;
    std::string default_value;
    std::vector<std::string> choices;  //!< allowed words, Word only
};

struct KindInfo
{
    std::string name;
    std::uint64_t default_trials;
    std::vector<ParamSpec> params;
};

std::vector<KindInfo> const& experiment_kinds();
KindInfo const& kind_info(std::string const& kind);

/*!
 * Parsed experiment configuration. `params` holds every key of the kind
 * in canonical text form, defaults included.
 */
struct ExperimentConfig
{
    std::string kind;
    std::uint64_t seed = 1;
    std::uint64_t trials = 0;
    std::string out = "results";
    unsigned workers = 0;  //!< 0 picks the environment default
    std::map<std::string, std::string> params;

    std::string const& text(std::string const& key) const;
    double number(std::string const& key) const;
    std::int64_t integer(std::string const& key) const;
    bool flag(std::string const& key) const;
    std::vector<double> numbers(std::string const& key) const;
    std::vector<std::int64_t> integers(std::string const& key) const;

    friend bool operator==(ExperimentConfig const&, ExperimentConfig const&) = default;
};

//! All defaults for a kind.
ExperimentConfig default_config(std::string const& kind);

/*!
 * INI text: `[section]` headers, `key = value` lines, `#` comments.
 * A section named after a kind selects it and holds its parameters;
 * `[run]` holds kind, seed, trials, out and workers.
 */
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(std::string const& path);

std::string serialize(ExperimentConfig const& config);

}  // namespace randwave::experiment
