#pragma once

#include <string>
#include <vector>

#include "randwave/ensembles/measure.hpp"

namespace randwave::ensembles
{

//! Radial law pushed forward by r -> scale * r.
struct ScaledLaw
{
    RadialLaw law;
    double scale = 1.0;
};

enum class KakutaniVerdict
{
    Equivalent,
    Singular,
    Undecided
};

std::string to_string(KakutaniVerdict v);

struct KakutaniResult
{
    KakutaniVerdict verdict = KakutaniVerdict::Undecided;
    double partial_product = 1.0;
    //! sum of (1 - term_k) over the upper half K/2 < k <= K
    double tail_sum = 0.0;
    std::vector<double> terms;
    std::string note;
};

struct KakutaniOptions
{
    double tail_tolerance = 0.01;
    double singular_threshold = 1e-8;
};

//! Hellinger affinity int sqrt(dq1 dq2) of two scaled radial laws.
double kakutani_affinity_term(ScaledLaw const& q1, ScaledLaw const& q2);

KakutaniResult kakutani_product(std::vector<ScaledLaw> const& spec1,
                                std::vector<ScaledLaw> const& spec2,
                                KakutaniOptions const& options = {});

KakutaniResult kakutani_product(MeasureSpec const& m1,
                                MeasureSpec const& m2,
                                KakutaniOptions const& options = {});

}  // namespace randwave::ensembles
