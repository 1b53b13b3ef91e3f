#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace sk {

/// Identifies one reproducible random stream.
///
/// The master seed keys a Philox4x32-10 counter-based generator and the stream id
/// occupies the upper 64 bits of its 128-bit counter. Distinct (master_seed, stream_id)
/// pairs therefore index disjoint regions of the counter space and can never overlap.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;

    friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
    friend auto operator<=>(const SeedSpec&, const SeedSpec&) = default;
};

/// Philox4x32-10 block function (Salmon et al., SC'11).
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    [[nodiscard]] static Counter block(Counter counter, Key key) noexcept;
};

/// Sequential draws from one SeedSpec.
///
/// Counter layout: word 0 is the block index, word 1 the substream index, words 2-3 the
/// stream id. Each (seed, substream) pair yields 2^34 32-bit outputs before the block index
/// would wrap; exhausting it throws rather than repeating. Satisfies
/// UniformRandomBitGenerator.
class RandomStream {
public:
    using result_type = std::uint32_t;

    explicit RandomStream(SeedSpec seed, std::uint32_t substream = 0) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return next_u32(); }

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on the open interval (0, 1).
    double uniform_open();
    /// Uniform integer on [0, bound), unbiased (Lemire's multiply-and-reject). bound > 0.
    std::uint32_t below(std::uint32_t bound);
    /// Uniform integer on [lo, hi] inclusive.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

    [[nodiscard]] SeedSpec seed() const noexcept { return seed_; }

private:
    void refill();

    SeedSpec seed_;
    Philox4x32::Key key_;
    Philox4x32::Counter counter_;
    Philox4x32::Counter buffer_{};
    unsigned next_ = 4;
    bool exhausted_ = false;
};

}  // namespace sk
