#include "randwave/experiment/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace randwave::experiment
{
namespace
{
using P = ParamType;

std::vector<ParamSpec> block_params()
{
    return {{"manifold", P::Word, "sphere", {"sphere", "torus"}},
            {"degree", P::Int, "10", {}},
            {"d", P::Int, "2", {}},
            {"h", P::Double, "0.125", {}},
            {"a", P::Double, "1", {}},
            {"b", P::Double, "2", {}},
            {"field", P::Word, "complex", {"real", "complex"}}};
}

std::vector<ParamSpec> damping_params()
{
    return {{"damping", P::Word, "strip", {"strip", "constant", "zero"}},
            {"a0", P::Double, "1", {}},
            {"power", P::Int, "1", {}}};
}

template <class... Lists>
std::vector<ParamSpec> join(std::vector<ParamSpec> first, Lists... rest)
{
    (first.insert(first.end(), rest.begin(), rest.end()), ...);
    return first;
}

std::vector<KindInfo> build_kinds()
{
    std::vector<KindInfo> k;
    k.push_back({"tails",
                 10000,
                 join(block_params(),
                      std::vector<ParamSpec>{
                          {"statistic", P::Word, "norm", {"norm", "point"}},
                          {"q", P::Double, "inf", {}},
                          {"mode", P::Word, "median", {"median", "absolute"}},
                          {"point", P::DoubleList, "0.7, 1.3", {}},
                          {"thresholds", P::DoubleList, "", {}}})});
    k.push_back({"medians",
                 2000,
                 join(block_params(),
                      std::vector<ParamSpec>{{"degrees", P::IntList, "10", {}},
                                             {"hs", P::DoubleList, "0.125", {}},
                                             {"q", P::Double, "4", {}}})});
    k.push_back({"defect",
                 2000,
                 std::vector<ParamSpec>{{"observable", P::Word, "cos", {"cos", "radial"}},
                                        {"d", P::Int, "2", {}},
                                        {"hs", P::DoubleList, "0.0625, 0.03125", {}},
                                        {"a", P::Double, "1", {}},
                                        {"b", P::Double, "2", {}},
                                        {"field", P::Word, "complex", {"real", "complex"}}}});
    k.push_back({"sphere-basis",
                 4,
                 std::vector<ParamSpec>{{"degrees", P::IntList, "5, 10, 20, 50", {}},
                                        {"points", P::Int, "1000", {}},
                                        {"field", P::Word, "real", {"real", "complex"}}}});
    k.push_back({"torus-growth",
                 1,
                 std::vector<ParamSpec>{{"d", P::Int, "2", {}},
                                        {"ks", P::IntList, "5, 25, 65, 325, 1105", {}},
                                        {"r", P::DoubleList, "4, 6", {}}}});
    k.push_back({"kakutani",
                 1000,
                 std::vector<ParamSpec>{{"scenario", P::Word, "identical", {"identical", "ratio", "doubled"}},
                                        {"K", P::Int, "100", {}},
                                        {"law", P::Word, "gaussian", {"gaussian", "dirac"}},
                                        {"support_target", P::Word, "zero", {"zero", "outside"}},
                                        {"support_radius", P::Double, "1", {}},
                                        {"support_alpha", P::Double, "0.1", {}},
                                        {"moment_checks", P::Bool, "false", {}},
                                        {"moment_trials", P::Int, "1000000", {}}}});
    k.push_back({"wave-decay",
                 500,
                 join(std::vector<ParamSpec>{{"hs", P::DoubleList, "0.125, 0.0625, 0.03125", {}},
                                             {"a", P::Double, "1", {}},
                                             {"b", P::Double, "2", {}},
                                             {"eps", P::Double, "0.3", {}},
                                             {"alpha", P::Double, "0.2", {}},
                                             {"T", P::Double, "0", {}},
                                             {"pilot_trials", P::Int, "100", {}},
                                             {"pilot_target", P::Double, "0.95", {}},
                                             {"frame_dt", P::Double, "0.25", {}},
                                             {"max_frames", P::Int, "80", {}}},
                      damping_params())});
    k.push_back({"leakage",
                 16,
                 join(std::vector<ParamSpec>{{"h_primes", P::DoubleList, "0.5, 0.25, 0.125", {}},
                                             {"ratio", P::Double, "4", {}},
                                             {"a", P::Double, "1", {}},
                                             {"b", P::Double, "2", {}},
                                             {"t", P::Double, "2", {}}},
                      damping_params())});
    k.push_back({"rate-builder",
                 200,
                 join(std::vector<ParamSpec>{{"hs", P::DoubleList, "0.125, 0.0625", {}},
                                             {"a", P::Double, "1", {}},
                                             {"b", P::Double, "2", {}},
                                             {"J", P::Int, "4", {}},
                                             {"frame_dt", P::Double, "0.25", {}},
                                             {"max_frames", P::Int, "80", {}}},
                      damping_params())});
    k.push_back({"spacetime-tails",
                 2000,
                 std::vector<ParamSpec>{{"d", P::Int, "1", {}},
                                        {"K", P::Int, "6", {}},
                                        {"alpha_decay", P::Double, "1", {}},
                                        {"law", P::Word, "gaussian", {"gaussian", "dirac"}},
                                        {"delta", P::Double, "2", {}},
                                        {"p", P::Double, "2", {}},
                                        {"thresholds", P::Int, "24", {}},
                                        {"field", P::Word, "real", {"real", "complex"}}}});
    return k;
}

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string const& s)
{
    std::vector<std::string> out;
    if (trim(s).empty())
        return out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        out.push_back(trim(item));
    return out;
}

bool parse_double(std::string const& s, double& v)
{
    if (s == "inf" || s == "+inf")
    {
        v = std::numeric_limits<double>::infinity();
        return true;
    }
    auto const* end = s.data() + s.size();
    auto r = std::from_chars(s.data(), end, v);
    return r.ec == std::errc{} && r.ptr == end && std::isfinite(v);
}

bool parse_int(std::string const& s, std::int64_t& v)
{
    auto const* end = s.data() + s.size();
    auto r = std::from_chars(s.data(), end, v);
    return r.ec == std::errc{} && r.ptr == end;
}

std::string format_double(double v)
{
    if (std::isinf(v))
        return "inf";
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

ParamSpec const* find_param(KindInfo const& info, std::string const& key)
{
    for (auto const& p : info.params)
        if (p.key == key)
            return &p;
    return nullptr;
}

std::string canonical(ParamSpec const& p, std::string const& raw, std::string const& where)
{
    auto fail = [&](char const* what) -> ConfigError {
        return ConfigError(where + ": '" + p.key + "' " + what + ", got '" + raw + "'");
    };
    switch (p.type)
    {
    case P::Int:
    {
        std::int64_t v;
        if (!parse_int(raw, v))
            throw fail("expects an integer");
        return std::to_string(v);
    }
    case P::Double:
    {
        double v;
        if (!parse_double(raw, v))
            throw fail("expects a number");
        return format_double(v);
    }
    case P::DoubleList:
    case P::IntList:
    {
        std::string out;
        for (auto const& item : split_list(raw))
        {
            std::string c;
            if (p.type == P::IntList)
            {
                std::int64_t v;
                if (!parse_int(item, v))
                    throw fail("expects a comma-separated list of integers");
                c = std::to_string(v);
            }
            else
            {
                double v;
                if (!parse_double(item, v))
                    throw fail("expects a comma-separated list of numbers");
                c = format_double(v);
            }
            out += out.empty() ? c : ", " + c;
        }
        return out;
    }
    case P::Word:
        if (std::find(p.choices.begin(), p.choices.end(), raw) == p.choices.end())
        {
            std::string allowed;
            for (auto const& c : p.choices)
                allowed += (allowed.empty() ? "" : "|") + c;
            throw fail(("expects one of " + allowed).c_str());
        }
        return raw;
    case P::Bool:
        if (raw == "true" || raw == "yes" || raw == "1")
            return "true";
        if (raw == "false" || raw == "no" || raw == "0")
            return "false";
        throw fail("expects true or false");
    }
    return raw;
}

struct Entry
{
    std::string key;
    std::string value;
    int line;
};

std::uint64_t positive(std::string const& key, std::string const& raw, int line, bool allow_zero)
{
    std::int64_t v;
    std::string const where = "line " + std::to_string(line);
    if (!parse_int(raw, v))
        throw ConfigError(where + ": '" + key + "' expects an integer, got '" + raw + "'");
    if (v < 0 || (v == 0 && !allow_zero))
        throw ConfigError(where + ": " + key + (allow_zero ? " must be non-negative" : " must be positive"));
    return static_cast<std::uint64_t>(v);
}
}  // namespace

std::vector<KindInfo> const& experiment_kinds()
{
    static std::vector<KindInfo> const kinds = build_kinds();
    return kinds;
}

KindInfo const& kind_info(std::string const& kind)
{
    for (auto const& k : experiment_kinds())
        if (k.name == kind)
            return k;
    throw ConfigError("unknown experiment kind '" + kind + "'");
}

std::string const& ExperimentConfig::text(std::string const& key) const
{
    auto it = params.find(key);
    if (it == params.end())
        throw ConfigError("kind '" + kind + "' has no parameter '" + key + "'");
    return it->second;
}

double ExperimentConfig::number(std::string const& key) const
{
    double v = 0;
    parse_double(text(key), v);
    return v;
}

std::int64_t ExperimentConfig::integer(std::string const& key) const
{
    std::int64_t v = 0;
    parse_int(text(key), v);
    return v;
}

bool ExperimentConfig::flag(std::string const& key) const
{
    return text(key) == "true";
}

std::vector<double> ExperimentConfig::numbers(std::string const& key) const
{
    std::vector<double> out;
    for (auto const& s : split_list(text(key)))
    {
        double v = 0;
        parse_double(s, v);
        out.push_back(v);
    }
    return out;
}

std::vector<std::int64_t> ExperimentConfig::integers(std::string const& key) const
{
    std::vector<std::int64_t> out;
    for (auto const& s : split_list(text(key)))
    {
        std::int64_t v = 0;
        parse_int(s, v);
        out.push_back(v);
    }
    return out;
}

ExperimentConfig default_config(std::string const& kind)
{
    auto const& info = kind_info(kind);
    ExperimentConfig c;
    c.kind = kind;
    c.trials = info.default_trials;
    for (auto const& p : info.params)
        c.params[p.key] = canonical(p, p.default_value, "default");
    return c;
}

ExperimentConfig parse_config(std::string_view text)
{
    std::string section;
    std::string kind_from_section;
    int kind_section_line = 0;
    std::vector<Entry> run_entries, kind_entries;
    std::map<std::string, int> seen;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw))
    {
        ++line_no;
        std::string const where = "line " + std::to_string(line_no);
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw ConfigError(where + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "run")
            {
                kind_info(section);  // validates the name
                if (!kind_from_section.empty() && kind_from_section != section)
                    throw ConfigError(where + ": second experiment section [" + section + "]");
                kind_from_section = section;
            }
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(where + ": empty key");
        if (section.empty())
            throw ConfigError(where + ": key '" + key + "' outside any section");
        if (!seen.emplace(section + "." + key, line_no).second)
            throw ConfigError(where + ": duplicate key '" + key + "'");
        (section == "run" ? run_entries : kind_entries).push_back({key, value, line_no});
    }

    std::string kind = kind_from_section;
    for (auto const& e : run_entries)
        if (e.key == "kind")
        {
            kind_info(e.value);
            if (!kind.empty() && kind != e.value)
                throw ConfigError("line " + std::to_string(e.line) + ": kind '" + e.value
                                  + "' conflicts with section [" + kind + "] on line "
                                  + std::to_string(kind_section_line));
            kind = e.value;
        }
    if (kind.empty())
        throw ConfigError("missing experiment kind: add a [<kind>] section or 'kind' under [run]");

    ExperimentConfig c = default_config(kind);
    for (auto const& e : run_entries)
    {
        if (e.key == "kind")
            continue;
        if (e.key == "seed")
            c.seed = positive("seed", e.value, e.line, true);
        else if (e.key == "trials")
            c.trials = positive("trials", e.value, e.line, false);
        else if (e.key == "workers")
            c.workers = static_cast<unsigned>(positive("workers", e.value, e.line, true));
        else if (e.key == "out")
        {
            if (e.value.empty())
                throw ConfigError("line " + std::to_string(e.line) + ": out must not be empty");
            c.out = e.value;
        }
        else
            throw ConfigError("line " + std::to_string(e.line) + ": unknown key '" + e.key + "' in [run]");
    }
    auto const& info = kind_info(kind);
    for (auto const& e : kind_entries)
    {
        auto const* p = find_param(info, e.key);
        if (!p)
            throw ConfigError("line " + std::to_string(e.line) + ": unknown key '" + e.key + "' for kind "
                              + kind);
        c.params[e.key] = canonical(*p, e.value, "line " + std::to_string(e.line));
    }
    return c;
}

ExperimentConfig load_config(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize(ExperimentConfig const& config)
{
    std::ostringstream out;
    out << "[run]\n"
        << "seed = " << config.seed << "\n"
        << "trials = " << config.trials << "\n"
        << "out = " << config.out << "\n"
        << "workers = " << config.workers << "\n\n"
        << "[" << config.kind << "]\n";
    for (auto const& [k, v] : config.params)
        out << k << " = " << v << "\n";
    return out.str();
}

}  // namespace randwave::experiment
