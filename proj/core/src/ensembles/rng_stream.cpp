#include "randwave/ensembles/rng_stream.hpp"

#include <cmath>
#include <numbers>

namespace randwave::ensembles
{
namespace
{
constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a,
                    std::uint32_t b,
                    std::uint32_t& hi,
                    std::uint32_t& lo)
{
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}
}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key)
{
    for (int round = 0; round < 10; ++round)
    {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id)
{
}

RngStream RngStream::child(std::uint64_t tag) const
{
    return RngStream(seed_, splitmix64(stream_id_ ^ splitmix64(tag + 1)));
}

void RngStream::refill()
{
    PhiloxCounter ctr{static_cast<std::uint32_t>(position_),
                      static_cast<std::uint32_t>(position_ >> 32),
                      static_cast<std::uint32_t>(stream_id_),
                      static_cast<std::uint32_t>(stream_id_ >> 32)};
    PhiloxKey key{static_cast<std::uint32_t>(seed_),
                  static_cast<std::uint32_t>(seed_ >> 32)};
    buffer_ = philox4x32_10(ctr, key);
    buffered_ = 4;
    ++position_;
}

std::uint32_t RngStream::next_u32()
{
    if (buffered_ == 0)
        refill();
    return buffer_[4 - buffered_--];
}

std::uint64_t RngStream::next_u64()
{
    std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
}

double RngStream::uniform()
{
    // (k + 0.5) / 2^53 never hits 0 or 1
    std::uint64_t bits = next_u64() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double RngStream::normal()
{
    if (has_spare_)
    {
        has_spare_ = false;
        return spare_normal_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

double RngStream::rademacher()
{
    return (next_u32() & 1u) ? 1.0 : -1.0;
}

}  // namespace randwave::ensembles
