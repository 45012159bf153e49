#include "randwave/experiment/support.hpp"

#include <vector>

#include "randwave/common/parallel.hpp"

namespace randwave::experiment
{

SupportResult support_smoke_test(ensembles::MeasureSpec const& measure,
                                 ensembles::RandomFieldCoeffs const& target,
                                 double radius,
                                 std::size_t trials,
                                 ensembles::RngStream const& base,
                                 unsigned workers)
{
    measure.validate();
    RANDWAVE_REQUIRE(target.blocks.size() == measure.num_blocks(),
                     "support_smoke_test: target must live on the measure's blocks");
    RANDWAVE_REQUIRE(radius >= 0, "support_smoke_test: radius must be >= 0");
    for (std::size_t k = 0; k < measure.num_blocks(); ++k)
        RANDWAVE_REQUIRE(target.blocks[k].size() == measure.blocks[k].dim(),
                         "support_smoke_test: target block size mismatch");

    SupportResult res;
    res.trials = trials;
    for (std::size_t k = 0; k < measure.num_blocks(); ++k)
    {
        bool const degenerate = measure.alpha[k] == 0
                                || (measure.laws[k].kind == ensembles::RadialKind::Dirac
                                    && measure.laws[k].r0 == 0);
        double energy = 0;
        for (auto const& z : target.blocks[k])
            energy += std::norm(z);
        if (degenerate && energy > 0)
        {
            res.outside_support = true;
            res.note = "outside support: block " + std::to_string(k) + " is almost surely zero";
        }
    }

    std::vector<char> hit(trials, 0);
    parallel_for(trials, workers, [&](std::size_t i) {
        ensembles::RngStream rng = base.child(i);
        auto u = ensembles::sample_full_field(measure, rng);
        double dist = 0;
        for (std::size_t k = 0; k < u.blocks.size(); ++k)
            for (std::size_t j = 0; j < u.blocks[k].size(); ++j)
                dist += std::norm(u.blocks[k][j] - target.blocks[k][j]);
        hit[i] = dist <= radius * radius ? 1 : 0;
    });
    for (char h : hit)
        res.hits += static_cast<std::size_t>(h);
    return res;
}

}  // namespace randwave::experiment
