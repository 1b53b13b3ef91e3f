#include "stablekurt/random.hpp"

#include <stdexcept>

namespace sk {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) noexcept {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

RandomStream::RandomStream(SeedSpec seed, std::uint32_t substream) noexcept
    : seed_(seed),
      key_{static_cast<std::uint32_t>(seed.master_seed), static_cast<std::uint32_t>(seed.master_seed >> 32)},
      counter_{0u, substream, static_cast<std::uint32_t>(seed.stream_id),
               static_cast<std::uint32_t>(seed.stream_id >> 32)} {}

void RandomStream::refill() {
    if (exhausted_) throw std::length_error("random substream exhausted");
    buffer_ = Philox4x32::block(counter_, key_);
    if (++counter_[0] == 0) exhausted_ = true;
    next_ = 0;
}

std::uint32_t RandomStream::next_u32() {
    if (next_ == 4) refill();
    return buffer_[next_++];
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    return (hi << 32) | lo;
}

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint32_t RandomStream::below(std::uint32_t bound) {
    std::uint64_t product = static_cast<std::uint64_t>(next_u32()) * bound;
    auto low = static_cast<std::uint32_t>(product);
    if (low < bound) {
        const std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
        while (low < threshold) {
            product = static_cast<std::uint64_t>(next_u32()) * bound;
            low = static_cast<std::uint32_t>(product);
        }
    }
    return static_cast<std::uint32_t>(product >> 32);
}

std::uint64_t RandomStream::between(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw std::invalid_argument("between: hi < lo");
    const std::uint64_t span = hi - lo;
    if (span < std::numeric_limits<std::uint32_t>::max()) {
        return lo + below(static_cast<std::uint32_t>(span + 1));
    }
    // Wide ranges: rejection on 64-bit draws.
    if (span == std::numeric_limits<std::uint64_t>::max()) return next_u64();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = next_u64();
    while (draw >= limit) draw = next_u64();
    return lo + draw % range;
}

}  // namespace sk
