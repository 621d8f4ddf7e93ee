#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace pgg {

// Philox 4x64 with 10 rounds (Salmon, Moraes, Dror, Shaw 2011), the same
// constants and key schedule as the widely deployed numpy.random.Philox
// implementation. Counter-based: the output block is a pure function of
// (counter, key), so any trial's randomness can be regenerated in isolation.
struct Philox4x64 {
    static constexpr std::uint64_t MUL0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t MUL1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t WEYL0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t WEYL1 = 0xBB67AE8584CAA73BULL;

    static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> ctr,
                                              std::array<std::uint64_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const unsigned __int128 prod0 = static_cast<unsigned __int128>(MUL0) * ctr[0];
            const unsigned __int128 prod1 = static_cast<unsigned __int128>(MUL1) * ctr[2];
            const std::uint64_t hi0 = static_cast<std::uint64_t>(prod0 >> 64);
            const std::uint64_t lo0 = static_cast<std::uint64_t>(prod0);
            const std::uint64_t hi1 = static_cast<std::uint64_t>(prod1 >> 64);
            const std::uint64_t lo1 = static_cast<std::uint64_t>(prod1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += WEYL0;
            key[1] += WEYL1;
        }
        return ctr;
    }
};

// One trial's private random stream: key = (seed, trial index), counter walks
// from zero. Different trials never share a block, so simulation results do
// not depend on how trials are scheduled across threads.
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial) : key_{seed, trial} {}

    std::uint64_t next() {
        if (spent_ == 4) {
            ++ctr_[0];  // numpy convention: step the counter before each block
            buf_ = Philox4x64::block(ctr_, key_);
            spent_ = 0;
        }
        return buf_[spent_++];
    }

    // Uniform draw from {0,...,bound-1}, exact via rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("below: bound must be positive");
        const std::uint64_t cut = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t v = next();
            if (v >= cut) return v % bound;
        }
    }

    // Exact Bernoulli(num/den); requires 0 <= num <= den, den >= 1.
    bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> ctr_{0, 0, 0, 0};
    std::array<std::uint64_t, 4> buf_{};
    int spent_ = 4;
};

}  // namespace pgg
