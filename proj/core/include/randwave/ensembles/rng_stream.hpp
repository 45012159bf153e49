#pragma once

#include <array>
#include <cstdint>

namespace randwave::ensembles
{

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

//! Philox4x32 with 10 rounds (Salmon et al., SC'11).
PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key);

//! SplitMix64 finalizer, used to derive stream ids from labels.
std::uint64_t splitmix64(std::uint64_t x);

/*!
 * Counter-based stream: key = seed, counter = (position, stream_id).
 *
 * Every draw is a pure function of (seed, stream_id, position), so any
 * trial can be replayed in isolation.
 */
class RngStream
{
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    //! Independent child stream labelled by `tag`.
    RngStream child(std::uint64_t tag) const;

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    //! Uniform in (0, 1), 53-bit resolution.
    double uniform();
    //! Standard normal via Box-Muller.
    double normal();
    //! +1 or -1 with equal probability.
    double rademacher();

  private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t position_ = 0;
    PhiloxCounter buffer_{};
    int buffered_ = 0;
    double spare_normal_ = 0;
    bool has_spare_ = false;
};

}  // namespace randwave::ensembles
