#pragma once

#include "randwave/experiment/runner.hpp"

namespace randwave::experiment::detail
{

// Fills rows, summary, notes and failures for config.kind.
void run_kind(ExperimentConfig const& config, unsigned workers, ResultRecord& record);

}  // namespace randwave::experiment::detail
