#include "randwave/experiment/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "kinds.hpp"
#include "randwave/common/parallel.hpp"
#include "randwave/common/types.hpp"

namespace randwave::experiment
{
namespace fs = std::filesystem;

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ResultRecord run_experiment(ExperimentConfig const& config)
{
    kind_info(config.kind);
    if (config.trials == 0)
        throw ConfigError("trials must be positive");
    ResultRecord rec;
    rec.config = config;
    rec.workers = config.workers > 0 ? config.workers : default_worker_count();
    auto const start = std::chrono::steady_clock::now();
    try
    {
        detail::run_kind(config, rec.workers, rec);
    }
    catch (InvalidArgument const& e)
    {
        throw ConfigError(e.what());
    }
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

namespace
{
std::string csv_field(std::string const& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

nlohmann::ordered_json number_json(double v)
{
    if (std::isfinite(v))
        return v;
    return format_number(v);
}
}  // namespace

std::string format_csv(ResultRecord const& record)
{
    std::string out = "metric,param1,param2,value,ci_lo,ci_hi\n";
    for (auto const& r : record.rows)
        out += csv_field(r.metric) + "," + csv_field(r.param1) + "," + csv_field(r.param2) + ","
               + format_number(r.value) + "," + format_number(r.ci_lo) + "," + format_number(r.ci_hi) + "\n";
    return out;
}

std::string format_json(ResultRecord const& record)
{
    using json = nlohmann::ordered_json;
    json j;
    j["schema_version"] = schema_version;
    auto const& c = record.config;
    json params = json::object();
    for (auto const& [k, v] : c.params)
        params[k] = v;
    j["config"] = {{"kind", c.kind}, {"seed", c.seed}, {"trials", c.trials}, {"out", c.out},
                   {"workers", c.workers}, {"params", params}};
    json summary = json::object();
    for (auto const& [k, v] : record.summary)
        std::visit(
            [&](auto const& x) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>)
                    summary[k] = number_json(x);
                else
                    summary[k] = x;
            },
            v);
    j["summary"] = summary;
    json rows = json::array();
    for (auto const& r : record.rows)
        rows.push_back({{"metric", r.metric}, {"param1", r.param1}, {"param2", r.param2},
                        {"value", number_json(r.value)}, {"ci_lo", number_json(r.ci_lo)},
                        {"ci_hi", number_json(r.ci_hi)}});
    j["rows"] = rows;
    j["notes"] = record.notes;
    j["failures"] = record.failures;
    j["metadata"] = {{"wall_seconds", record.wall_seconds}, {"workers", record.workers}};
    return j.dump(2) + "\n";
}

fs::path write_result(ResultRecord const& record, fs::path const& root)
{
    if (!record.failures.empty())
    {
        std::string msg = "invariant failure";
        for (auto const& f : record.failures)
            msg += "\n  " + f;
        throw InvariantFailure(msg);
    }
    auto const name = record.config.kind + "-" + std::to_string(record.config.seed);
    fs::path const final_dir = root / name;
    fs::path const tmp = root / ("." + name + ".tmp-" + std::to_string(::getpid()));
    try
    {
        fs::create_directories(root);
        fs::remove_all(tmp);
        fs::create_directories(tmp);
        auto write = [&](char const* file, std::string const& text) {
            std::ofstream out(tmp / file, std::ios::binary);
            out << text;
            if (!out.flush())
                throw std::runtime_error(std::string("failed to write ") + file);
        };
        write("result.json", format_json(record));
        write("result.csv", format_csv(record));
        fs::remove_all(final_dir);
        fs::rename(tmp, final_dir);
    }
    catch (...)
    {
        std::error_code ec;
        fs::remove_all(tmp, ec);
        throw;
    }
    return final_dir;
}

fs::path run(ExperimentConfig const& config)
{
    return write_result(run_experiment(config), config.out);
}

}  // namespace randwave::experiment
