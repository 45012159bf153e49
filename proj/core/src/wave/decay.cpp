#include "randwave/wave/decay.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "randwave/common/parallel.hpp"
#include "randwave/common/stats.hpp"

namespace randwave::wave
{
using ensembles::RngStream;
using geometry::FrequencyWindow;

int block_cutoff(FrequencyWindow const& window, double margin)
{
    window.validate();
    return static_cast<int>(std::ceil(margin * window.b / window.h - 1e-9));
}

namespace
{
std::size_t steps_for(double span, int cutoff)
{
    if (span <= 0)
        return 1;
    double const dt_max = cutoff > 0 ? 0.5 / cutoff : 0.5;
    return static_cast<std::size_t>(std::ceil(span / dt_max - 1e-9));
}

double frame_step(double frame_dt, int cutoff)
{
    return frame_dt > 0 ? frame_dt / static_cast<double>(steps_for(frame_dt, cutoff))
                        : (cutoff > 0 ? 0.5 / cutoff : 0.5);
}
}  // namespace

BlockEnergyScanner::BlockEnergyScanner(DampingProfile const& damping,
                                       int d,
                                       FrequencyWindow const& window,
                                       int cutoff,
                                       double frame_dt)
    : d_(d),
      cutoff_(cutoff),
      steps_(frame_dt > 0 ? steps_for(frame_dt, cutoff) : 0),
      propagator_(damping, d, cutoff, frame_step(frame_dt, cutoff)),
      window_(window)
{
    window.validate();
    RANDWAVE_REQUIRE(frame_dt >= 0, "scanner: frame_dt must be >= 0");
    RANDWAVE_REQUIRE(window.b / window.h <= cutoff + 1e-9, "scanner: block exceeds the cutoff");
    groups_ = propagator_.groups();
    for (auto const& g : groups_)
    {
        Eigen::VectorXd w = propagator_.frequencies(g);
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < w.size(); ++i)
            if (window.contains(w(i)))
                idx.push_back(i);
        block_dim_ += idx.size();
        block_index_.push_back(std::move(idx));
    }
    RANDWAVE_REQUIRE(block_dim_ > 0, "scanner: empty block");
}

std::vector<std::vector<double>> BlockEnergyScanner::scan(std::size_t trials,
                                                          RngStream const& base,
                                                          int frames,
                                                          unsigned workers) const
{
    RANDWAVE_REQUIRE(trials >= 1, "scan: need at least one trial");
    RANDWAVE_REQUIRE(frames >= 0, "scan: frames must be >= 0");
    RANDWAVE_REQUIRE(frames == 0 || steps_ > 0, "scan: frame_dt is zero");
    auto const rows = static_cast<Eigen::Index>(2 * block_dim_);
    auto const cols = static_cast<Eigen::Index>(trials);
    Eigen::MatrixXd X(rows, cols);
    parallel_for(trials, workers, [&](std::size_t i) {
        RngStream rng = base.child(i);
        auto col = X.col(static_cast<Eigen::Index>(i));
        for (Eigen::Index r = 0; r < rows; ++r)
            col(r) = rng.normal();
        col /= col.norm();
    });

    std::vector<std::size_t> offset(groups_.size() + 1, 0);
    for (std::size_t g = 0; g < groups_.size(); ++g)
        offset[g + 1] = offset[g] + block_index_[g].size();

    auto const n_frames = static_cast<std::size_t>(frames) + 1;
    std::vector<std::vector<double>> per_group(groups_.size());
    parallel_for(groups_.size(), workers, [&](std::size_t g) {
        auto const& group = groups_[g];
        auto const& idx = block_index_[g];
        auto& out = per_group[g];
        out.assign(n_frames * trials, 0.0);
        if (idx.empty())
            return;
        auto const n = static_cast<Eigen::Index>(group.dim());
        Eigen::VectorXd w = propagator_.frequencies(group);
        Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(2 * n, cols);
        for (std::size_t p = 0; p < idx.size(); ++p)
        {
            auto const row = static_cast<Eigen::Index>(2 * (offset[g] + p));
            Eigen::Index const i = idx[p];
            Z.row(i) = std::numbers::sqrt2 / w(i) * X.row(row);
            Z.row(n + i) = std::numbers::sqrt2 * X.row(row + 1);
        }
        Eigen::VectorXd weight(2 * n);
        weight.head(n) = w.array().square();
        weight.tail(n).setOnes();
        weight *= 0.5;
        Eigen::MatrixXd P;
        if (frames > 0)
            P = propagator_.power(group, steps_);
        for (std::size_t j = 0; j < n_frames; ++j)
        {
            if (j > 0)
                Z = P * Z;
            Eigen::VectorXd e = (Z.array().square().colwise() * weight.array()).colwise().sum().transpose();
            for (std::size_t i = 0; i < trials; ++i)
                out[j * trials + i] = e(static_cast<Eigen::Index>(i));
        }
    });

    std::vector<std::vector<double>> energies(n_frames, std::vector<double>(trials, 0.0));
    for (std::size_t g = 0; g < groups_.size(); ++g)
        for (std::size_t j = 0; j < n_frames; ++j)
            for (std::size_t i = 0; i < trials; ++i)
                energies[j][i] += per_group[g][j * trials + i];
    return energies;
}

std::vector<DecayRow> decay_probability_experiment(std::vector<double> const& hs,
                                                   double a,
                                                   double b,
                                                   DampingProfile const& damping,
                                                   int d,
                                                   double T,
                                                   double eps,
                                                   std::size_t trials,
                                                   RngStream const& base,
                                                   unsigned workers)
{
    RANDWAVE_REQUIRE(T >= 0, "decay experiment: T must be >= 0");
    RANDWAVE_REQUIRE(eps > 0, "decay experiment: eps must be positive");
    std::vector<DecayRow> rows;
    for (std::size_t k = 0; k < hs.size(); ++k)
    {
        FrequencyWindow w{hs[k], a, b};
        int const cutoff = block_cutoff(w);
        BlockEnergyScanner scanner(damping, d, w, cutoff, T);
        int const frames = T > 0 ? 1 : 0;
        auto energies = scanner.scan(trials, base.child(k), frames, workers);
        auto const& last = energies.back();
        std::size_t hits = 0;
        for (double e : last)
            hits += e < eps ? 1 : 0;
        auto ci = wilson_interval(hits, trials);
        DecayRow row;
        row.h = hs[k];
        row.cutoff = cutoff;
        row.block_dim = scanner.block_dim();
        row.T = scanner.frame_time(frames);
        row.fraction = static_cast<double>(hits) / static_cast<double>(trials);
        row.ci_lo = ci.lo;
        row.ci_hi = ci.hi;
        row.mean_energy = mean_stderr(last).mean;
        rows.push_back(row);
    }
    return rows;
}

PilotResult pilot_decay_time(std::vector<double> const& hs,
                             double a,
                             double b,
                             DampingProfile const& damping,
                             int d,
                             double eps,
                             double target,
                             std::size_t trials,
                             RngStream const& base,
                             double frame_dt,
                             int max_frames,
                             unsigned workers)
{
    RANDWAVE_REQUIRE(frame_dt > 0 && max_frames >= 1, "pilot: need a positive frame grid");
    PilotResult res;
    for (std::size_t k = 0; k < hs.size(); ++k)
    {
        FrequencyWindow w{hs[k], a, b};
        BlockEnergyScanner scanner(damping, d, w, block_cutoff(w), frame_dt);
        auto energies = scanner.scan(trials, base.child(k), max_frames, workers);
        std::vector<double> frac;
        for (auto const& frame : energies)
        {
            std::size_t hits = 0;
            for (double e : frame)
                hits += e < eps ? 1 : 0;
            frac.push_back(static_cast<double>(hits) / static_cast<double>(trials));
        }
        if (res.times.empty())
            for (int j = 0; j <= max_frames; ++j)
                res.times.push_back(scanner.frame_time(j));
        res.fractions.push_back(std::move(frac));
    }
    for (int j = 0; j <= max_frames; ++j)
    {
        bool ok = std::all_of(res.fractions.begin(), res.fractions.end(), [&](auto const& f) {
            return f[static_cast<std::size_t>(j)] >= target;
        });
        if (ok)
        {
            res.T = res.times[static_cast<std::size_t>(j)];
            res.found = true;
            break;
        }
    }
    if (!res.found)
        res.T = res.times.back();
    return res;
}

LeakageResult block_leakage(DampingProfile const& damping,
                            int d,
                            FrequencyWindow const& target,
                            FrequencyWindow const& source,
                            double t,
                            std::size_t trials,
                            RngStream const& base,
                            int cutoff)
{
    target.validate();
    source.validate();
    RANDWAVE_REQUIRE(t >= 0, "leakage: t must be >= 0");
    double const t_lo = target.a / target.h, t_hi = target.b / target.h;
    double const s_lo = source.a / source.h, s_hi = source.b / source.h;
    RANDWAVE_REQUIRE(t_hi <= s_lo || s_hi <= t_lo, "leakage: windows overlap");
    if (cutoff < 0)
        cutoff = std::max(block_cutoff(target), block_cutoff(source));

    std::size_t const steps = t > 0 ? steps_for(t, cutoff) : 1;
    LinePropagator prop(damping, d, cutoff, t > 0 ? t / static_cast<double>(steps) : frame_step(0, cutoff));

    LeakageResult res;
    res.h = target.h;
    res.h_prime = source.h;
    res.t = t;
    // energy-coordinate operators per group
    std::vector<Eigen::MatrixXd> ops;
    for (auto const& g : prop.groups())
    {
        Eigen::VectorXd w = prop.frequencies(g);
        auto const n = w.size();
        std::vector<Eigen::Index> rows, cols;
        std::vector<double> row_w, col_w;
        for (Eigen::Index i = 0; i < n; ++i)
        {
            if (target.contains(w(i)))
            {
                rows.push_back(i), row_w.push_back(w(i));
                rows.push_back(n + i), row_w.push_back(1.0);
            }
            if (source.contains(w(i)))
            {
                cols.push_back(i), col_w.push_back(w(i));
                cols.push_back(n + i), col_w.push_back(1.0);
            }
        }
        res.target_dim += rows.size() / 2;
        res.source_dim += cols.size() / 2;
        if (cols.empty())
            continue;
        Eigen::MatrixXd B = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                                  static_cast<Eigen::Index>(cols.size()));
        if (!rows.empty() && t > 0)
        {
            Eigen::MatrixXd P = prop.power(g, steps);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c)
                    B(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))
                        = row_w[r] * P(rows[r], cols[c]) / col_w[c];
        }
        ops.push_back(std::move(B));
    }
    RANDWAVE_REQUIRE(res.source_dim > 0 && res.target_dim > 0, "leakage: empty block");

    for (auto const& B : ops)
        if (B.rows() > 0)
            res.svd_norm = std::max(res.svd_norm, Eigen::JacobiSVD<Eigen::MatrixXd>(B).singularValues()(0));

    auto apply_norm = [&](std::vector<Eigen::VectorXd> const& v) {
        double s = 0;
        for (std::size_t g = 0; g < ops.size(); ++g)
            if (ops[g].rows() > 0)
                s += (ops[g] * v[g]).squaredNorm();
        return std::sqrt(s);
    };
    auto normalize = [](std::vector<Eigen::VectorXd>& v) {
        double s = 0;
        for (auto const& x : v)
            s += x.squaredNorm();
        s = std::sqrt(s);
        if (s > 0)
            for (auto& x : v)
                x /= s;
        return s;
    };

    std::vector<Eigen::VectorXd> best;
    double best_val = -1;
    for (std::size_t i = 0; i < std::max<std::size_t>(trials, 1); ++i)
    {
        RngStream rng = base.child(i);
        std::vector<Eigen::VectorXd> v;
        for (auto const& B : ops)
        {
            Eigen::VectorXd x(B.cols());
            for (Eigen::Index k = 0; k < x.size(); ++k)
                x(k) = rng.normal();
            v.push_back(std::move(x));
        }
        normalize(v);
        double val = apply_norm(v);
        if (val > best_val)
        {
            best_val = val;
            best = std::move(v);
        }
    }
    double estimate = best_val;
    for (int iter = 0; iter < 2000 && estimate > 0; ++iter)
    {
        for (std::size_t g = 0; g < ops.size(); ++g)
            best[g] = ops[g].rows() > 0 ? Eigen::VectorXd(ops[g].transpose() * (ops[g] * best[g]))
                                        : Eigen::VectorXd::Zero(best[g].size());
        if (normalize(best) == 0)
            break;
        double next = apply_norm(best);
        bool done = std::abs(next - estimate) <= 1e-13 * next;
        estimate = std::max(estimate, next);
        if (done)
            break;
    }
    res.estimate = std::max(estimate, 0.0);
    return res;
}

double DecayRate::operator()(double t) const
{
    if (T.empty() || t < T.front())
        return 1.0;
    double v = values.front();
    for (std::size_t j = 0; j < T.size() && T[j] <= t; ++j)
        v = values[j];
    return v;
}

DecayRate decay_rate_builder(DampingProfile const& damping,
                             int d,
                             std::vector<FrequencyWindow> const& blocks,
                             int J,
                             std::size_t trials,
                             RngStream const& base,
                             double frame_dt,
                             int max_frames,
                             unsigned workers)
{
    RANDWAVE_REQUIRE(J >= 0, "rate builder: J must be >= 0");
    RANDWAVE_REQUIRE(!blocks.empty(), "rate builder: need at least one block");
    RANDWAVE_REQUIRE(frame_dt > 0 && max_frames >= 1, "rate builder: need a positive frame grid");
    damping.validate(true);

    std::vector<std::vector<std::vector<double>>> energies;
    std::vector<double> times;
    for (std::size_t k = 0; k < blocks.size(); ++k)
    {
        BlockEnergyScanner scanner(damping, d, blocks[k], block_cutoff(blocks[k]), frame_dt);
        energies.push_back(scanner.scan(trials, base.child(k), max_frames, workers));
        if (times.empty())
            for (int j = 0; j <= max_frames; ++j)
                times.push_back(scanner.frame_time(j));
    }
    // worst block exceedance count of E > threshold at frame f
    auto exceed = [&](double threshold, std::size_t f) {
        std::size_t worst = 0;
        for (auto const& e : energies)
        {
            std::size_t c = 0;
            for (double v : e[f])
                c += v > threshold ? 1 : 0;
            worst = std::max(worst, c);
        }
        return worst;
    };

    DecayRate rate;
    std::size_t const n_frames = times.size();
    std::size_t lower = 0;
    for (int j = 0; j <= J; ++j)
    {
        double const level = std::ldexp(1.0, -j);
        auto ok = [&](std::size_t f) {
            return static_cast<double>(exceed(level, f)) <= level * static_cast<double>(trials);
        };
        if (lower >= n_frames || !ok(n_frames - 1))
        {
            rate.complete = false;
            rate.flag = "search cap reached at j=" + std::to_string(j);
            break;
        }
        // exceedance is nonincreasing in time: bisect for the first good frame
        std::size_t lo = lower, hi = n_frames - 1;
        while (lo < hi)
        {
            std::size_t mid = lo + (hi - lo) / 2;
            if (ok(mid))
                hi = mid;
            else
                lo = mid + 1;
        }
        std::size_t const count = exceed(level, lo);
        rate.T.push_back(times[lo]);
        rate.values.push_back(std::pow(2.0, -0.5 * j));
        rate.exceedance.push_back(static_cast<double>(count) / static_cast<double>(trials));
        rate.wilson_hi.push_back(wilson_interval(count, trials).hi);
        lower = lo + 1;
    }
    return rate;
}

}  // namespace randwave::wave
