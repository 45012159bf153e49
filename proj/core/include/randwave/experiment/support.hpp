#pragma once

#include <cstddef>
#include <string>

#include "randwave/ensembles/measure.hpp"
#include "randwave/ensembles/rng_stream.hpp"

namespace randwave::experiment
{

struct SupportResult
{
    std::size_t hits = 0;
    std::size_t trials = 0;
    //! target carries energy in a block where the measure is a.s. zero
    bool outside_support = false;
    std::string note;
};

//! Counts samples within L^2 distance `radius` of `target`.
SupportResult support_smoke_test(ensembles::MeasureSpec const& measure,
                                 ensembles::RandomFieldCoeffs const& target,
                                 double radius,
                                 std::size_t trials,
                                 ensembles::RngStream const& base,
                                 unsigned workers = 1);

}  // namespace randwave::experiment
