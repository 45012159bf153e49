#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "randwave/ensembles/measure.hpp"
#include "randwave/ensembles/rng_stream.hpp"
#include "randwave/experiment/config.hpp"
#include "randwave/experiment/runner.hpp"
#include "randwave/experiment/support.hpp"

using namespace randwave;
using namespace randwave::experiment;
namespace fs = std::filesystem;

namespace
{
std::string slurp(fs::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool has_metric(std::string const& csv, std::string const& metric)
{
    return csv.find("\n" + metric + ",") != std::string::npos;
}

std::string error_of(std::string const& text)
{
    try
    {
        parse_config(text);
    }
    catch (ConfigError const& e)
    {
        return e.what();
    }
    return {};
}

fs::path scratch(std::string const& name)
{
    auto p = fs::temp_directory_path() / ("randwave-test-" + name);
    fs::remove_all(p);
    return p;
}
}  // namespace

TEST_CASE("empty kind section takes the defaults")
{
    auto c = parse_config("[tails]\n");
    CHECK(c.kind == "tails");
    CHECK(c == default_config("tails"));
    CHECK(c.trials == kind_info("tails").default_trials);
    CHECK(c.text("statistic") == "norm");
    CHECK(c.number("q") == INFINITY);
}

TEST_CASE("config errors")
{
    CHECK(error_of("[tails]\n[run]\ntrials = -5\n").find("trials must be positive") != std::string::npos);
    CHECK(error_of("[run]\ntrials = 0\n[tails]\n").find("trials must be positive") != std::string::npos);
    auto unknown = error_of("# header\n[tails]\nq = 4\nbogus = 1\n");
    CHECK(unknown.find("bogus") != std::string::npos);
    CHECK(unknown.find("line 4") != std::string::npos);
    CHECK(error_of("[run]\nseed = 3\n").find("kind") != std::string::npos);
    CHECK(error_of("[tails]\nthis is not a pair\n").find("line 2") != std::string::npos);
    CHECK_FALSE(error_of("[medians]\nq = four\n").empty());
    CHECK_FALSE(error_of("[tails]\n[medians]\n").empty());
    CHECK_FALSE(error_of("[nonsense]\n").empty());
    CHECK_THROWS_AS(load_config("/nonexistent/randwave.ini"), ConfigError);
}

TEST_CASE("run section selects the kind")
{
    auto c = parse_config("[run]\nkind = kakutani\nseed = 9\n");
    CHECK(c.kind == "kakutani");
    CHECK(c.seed == 9);
}

TEST_CASE("wave-decay config round trip")
{
    auto c = parse_config(
        "[run]\nseed = 11\ntrials = 64\nout = somewhere\nworkers = 3\n"
        "[wave-decay]\nhs = 0.25, 0.125\neps = 0.1\nalpha = 0.05\nT = 3.5\n"
        "damping = strip\na0 = 0.75\npower = 2\nframe_dt = 0.1\nmax_frames = 40\n");
    CHECK(c.numbers("hs") == std::vector<double>{0.25, 0.125});
    CHECK(c.integer("power") == 2);
    auto again = parse_config(serialize(c));
    CHECK(again == c);
    CHECK(serialize(again) == serialize(c));
}

TEST_CASE("medians rows and determinism")
{
    auto c = parse_config("[run]\nseed = 7\ntrials = 2000\n[medians]\ndegrees = 10\nq = 4\n");
    std::string reference;
    for (unsigned workers : {1u, 4u, 8u})
    {
        c.workers = workers;
        auto rec = run_experiment(c);
        CHECK(rec.failures.empty());
        auto csv = format_csv(rec);
        CHECK(csv.rfind("metric,param1,param2,value,ci_lo,ci_hi\n", 0) == 0);
        CHECK(has_metric(csv, "closed_form_A_qh"));
        CHECK(has_metric(csv, "mc_median"));
        if (reference.empty())
            reference = csv;
        else
            CHECK(csv == reference);
    }
}

TEST_CASE("golden csv")
{
    fs::path const dir = RANDWAVE_GOLDEN_DIR;
    auto c = load_config((dir / "medians_small.ini").string());
    auto csv = format_csv(run_experiment(c));
    CHECK(csv == slurp(dir / "medians_small.csv"));
}

TEST_CASE("kakutani identical specs")
{
    auto c = parse_config("[run]\ntrials = 200\n[kakutani]\nscenario = identical\n");
    auto rec = run_experiment(c);
    auto j = nlohmann::json::parse(format_json(rec));
    CHECK(j["schema_version"] == schema_version);
    CHECK(j["summary"]["verdict"] == "equivalent");
    CHECK(j["summary"]["partial_product"].get<double>() == 1.0);
    CHECK(j["config"]["kind"] == "kakutani");
    CHECK(j["metadata"].contains("wall_seconds"));
}

TEST_CASE("run writes both files and repeats byte for byte")
{
    auto root = scratch("run");
    auto c = parse_config("[run]\ntrials = 300\nseed = 5\n[medians]\n");
    c.out = root.string();
    auto dir = run(c);
    CHECK(dir == root / "medians-5");
    auto first = slurp(dir / "result.csv");
    CHECK(fs::exists(dir / "result.json"));
    run(c);
    CHECK(slurp(dir / "result.csv") == first);
    for (auto const& e : fs::directory_iterator(root))
        CHECK(e.path().filename().string().find(".tmp") == std::string::npos);
    fs::remove_all(root);
}

TEST_CASE("failed invariants leave no output")
{
    auto root = scratch("fail");
    auto c = parse_config("[run]\ntrials = 10\n[medians]\n");
    c.out = root.string();
    auto rec = run_experiment(c);
    rec.failures.push_back("forced");
    CHECK(format_json(rec).find("forced") != std::string::npos);
    CHECK_THROWS_AS(write_result(rec, root), InvariantFailure);
    CHECK_FALSE(fs::exists(root / "medians-1"));
}

TEST_CASE("csv formatting")
{
    ResultRecord rec;
    rec.config = default_config("tails");
    rec.rows.push_back({"m", "a, b", "", 0.1, -INFINITY, NAN});
    auto csv = format_csv(rec);
    CHECK(csv.find("m,\"a, b\",,0.10000000000000001,-inf,nan\n") != std::string::npos);
    CHECK(format_number(1.0) == "1");
}

TEST_CASE("support smoke test")
{
    using namespace ensembles;
    auto zero_target = [](MeasureSpec const& m) {
        RandomFieldCoeffs t;
        for (auto const& b : m.blocks)
            t.blocks.emplace_back(b.dim(), cplx{});
        return t;
    };

    auto dirac = dyadic_torus_measure(1, 3, {1.0, 1.0, 1.0, 1.0}, RadialLaw::dirac(0.0));
    auto all = support_smoke_test(dirac, zero_target(dirac), 0.1, 50, RngStream(1, 0));
    CHECK(all.hits == 50);
    CHECK_FALSE(all.outside_support);

    auto small = dyadic_torus_measure(1, 3, {0.2, 0.2, 0.2, 0.2}, RadialLaw::half_gaussian());
    auto most = support_smoke_test(small, zero_target(small), 1.0, 400, RngStream(2, 0), 2);
    CHECK(most.hits > 200);

    auto gap = dyadic_torus_measure(1, 3, {0.2, 0.0, 0.2, 0.2}, RadialLaw::half_gaussian());
    auto target = zero_target(gap);
    target.blocks[1][0] = 1.0;
    auto none = support_smoke_test(gap, target, 0.1, 100, RngStream(3, 0));
    CHECK(none.hits == 0);
    CHECK(none.outside_support);
    CHECK(none.note.find("outside support") != std::string::npos);
}
