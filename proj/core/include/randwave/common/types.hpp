#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace randwave
{

using cplx = std::complex<double>;
using CoeffVector = std::vector<cplx>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

//! Scalar field of the coefficient space.
enum class Field
{
    Real,
    Complex
};

inline char const* to_string(Field f)
{
    return f == Field::Real ? "real" : "complex";
}

//! Precondition failure on user-supplied arguments.
class InvalidArgument : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

#define RANDWAVE_REQUIRE(cond, msg)                  \
    do                                               \
    {                                                \
        if (!(cond))                                 \
        {                                            \
            throw ::randwave::InvalidArgument(msg);  \
        }                                            \
    } while (0)

}  // namespace randwave
