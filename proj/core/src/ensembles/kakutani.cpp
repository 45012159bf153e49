#include "randwave/ensembles/kakutani.hpp"

#include <cmath>

namespace randwave::ensembles
{
namespace
{
// A scaled law that collapses to an atom (Dirac, or scale 0).
bool is_atom(ScaledLaw const& q, double& location)
{
    if (q.law.kind == RadialKind::Dirac)
    {
        location = q.law.r0 * q.scale;
        return true;
    }
    if (q.scale == 0.0)
    {
        location = 0.0;
        return true;
    }
    return false;
}
}  // namespace

std::string to_string(KakutaniVerdict v)
{
    switch (v)
    {
        case KakutaniVerdict::Equivalent:
            return "equivalent";
        case KakutaniVerdict::Singular:
            return "singular";
        case KakutaniVerdict::Undecided:
            break;
    }
    return "undecided";
}

double kakutani_affinity_term(ScaledLaw const& q1, ScaledLaw const& q2)
{
    RANDWAVE_REQUIRE(q1.scale >= 0 && q2.scale >= 0, "kakutani: scales must be >= 0");
    double x1 = 0, x2 = 0;
    bool const atom1 = is_atom(q1, x1);
    bool const atom2 = is_atom(q2, x2);
    if (atom1 && atom2)
        return x1 == x2 ? 1.0 : 0.0;
    if (atom1 != atom2)
        return 0.0;  // atom vs. density: mutually singular
    double const a = q1.scale, b = q2.scale;
    return std::sqrt(2.0 * a * b / (a * a + b * b));
}

KakutaniResult kakutani_product(std::vector<ScaledLaw> const& spec1,
                                std::vector<ScaledLaw> const& spec2,
                                KakutaniOptions const& options)
{
    RANDWAVE_REQUIRE(spec1.size() == spec2.size(), "kakutani: specs differ in length");
    KakutaniResult r;
    std::size_t const K = spec1.size();
    bool zero_term = false;
    for (std::size_t k = 0; k < K; ++k)
    {
        double t = kakutani_affinity_term(spec1[k], spec2[k]);
        r.terms.push_back(t);
        r.partial_product *= t;
        if (t == 0.0)
            zero_term = true;
    }
    for (std::size_t k = K / 2; k < K; ++k)
        r.tail_sum += 1.0 - r.terms[k];

    if (zero_term)
    {
        r.verdict = KakutaniVerdict::Singular;
        r.note = "a block pair has disjoint supports";
    }
    else if (r.partial_product < options.singular_threshold)
    {
        r.verdict = KakutaniVerdict::Singular;
        r.note = "partial product below threshold";
    }
    else if (r.tail_sum < options.tail_tolerance)
    {
        r.verdict = KakutaniVerdict::Equivalent;
        r.note = "tail of sum(1 - term) below tolerance";
    }
    else
    {
        r.verdict = KakutaniVerdict::Undecided;
        r.note = "truncated product inconclusive";
    }
    return r;
}

KakutaniResult kakutani_product(MeasureSpec const& m1,
                                MeasureSpec const& m2,
                                KakutaniOptions const& options)
{
    RANDWAVE_REQUIRE(m1.alpha.size() == m2.alpha.size(), "kakutani: block counts differ");
    std::vector<ScaledLaw> s1, s2;
    for (std::size_t k = 0; k < m1.alpha.size(); ++k)
    {
        s1.push_back({m1.laws[k], m1.alpha[k]});
        s2.push_back({m2.laws[k], m2.alpha[k]});
    }
    return kakutani_product(s1, s2, options);
}

}  // namespace randwave::ensembles
