#include <doctest.h>

#include <set>
#include <vector>

#include "stablekurt/random.hpp"

using sk::Philox4x32;
using sk::RandomStream;
using sk::SeedSpec;

TEST_SUITE("random") {
    TEST_CASE("philox known-answer vectors") {
        // Random123 kat_vectors, philox4x32_10.
        CHECK(Philox4x32::block({0, 0, 0, 0}, {0, 0}) ==
              Philox4x32::Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
        CHECK(Philox4x32::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
              Philox4x32::Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
        CHECK(Philox4x32::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
              Philox4x32::Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
    }

    TEST_CASE("same seed, same sequence") {
        RandomStream a(SeedSpec{42, 7});
        RandomStream b(SeedSpec{42, 7});
        for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u32() == b.next_u32());
    }

    TEST_CASE("streams and substreams differ") {
        RandomStream base(SeedSpec{42, 7});
        RandomStream other_stream(SeedSpec{42, 8});
        RandomStream other_master(SeedSpec{43, 7});
        RandomStream other_sub(SeedSpec{42, 7}, 1);
        std::set<std::uint64_t> firsts{base.next_u64(), other_stream.next_u64(), other_master.next_u64(),
                                       other_sub.next_u64()};
        CHECK(firsts.size() == 4);
    }

    TEST_CASE("uniform ranges") {
        RandomStream rng(SeedSpec{1, 0});
        double lo = 1.0, hi = 0.0, sum = 0.0;
        const int n = 100000;
        for (int i = 0; i < n; ++i) {
            const double u = rng.uniform_open();
            REQUIRE(u > 0.0);
            REQUIRE(u < 1.0);
            lo = std::min(lo, u);
            hi = std::max(hi, u);
            sum += u;
        }
        CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
        CHECK(lo < 1e-3);
        CHECK(hi > 1 - 1e-3);
    }

    TEST_CASE("bounded integers are uniform") {
        RandomStream rng(SeedSpec{9, 3});
        std::vector<int> counts(7, 0);
        const int n = 70000;
        for (int i = 0; i < n; ++i) ++counts[rng.below(7)];
        // chi-square with 6 degrees of freedom; 22.46 is the 0.999 quantile
        double chi2 = 0.0;
        for (int c : counts) chi2 += (c - 10000.0) * (c - 10000.0) / 10000.0;
        CHECK(chi2 < 22.46);

        for (int i = 0; i < 1000; ++i) {
            const auto v = rng.between(200, 1500);
            REQUIRE(v >= 200);
            REQUIRE(v <= 1500);
        }
        CHECK(rng.between(5, 5) == 5);
    }
}
