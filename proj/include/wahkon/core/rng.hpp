#pragma once

#include <cstdint>
#include <vector>

namespace wahkon {

// Deterministic 64-bit generator: xoshiro256++ seeded through splitmix64.
// Streams for parallel work are derived (never shared) via derive(), which
// hashes (seed, stream id) so replicates, folds and draws get independent
// sequences that reproduce bit-for-bit across runs.
//
// Normal variates use the Marsaglia polar method with a cached spare; the
// whole stream is a pure function of the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    // [0, 1)
    double uniform();
    double uniform(double lo, double hi);

    // unbiased integer in [0, bound)
    std::uint64_t below(std::uint64_t bound);

    double normal();
    double normal(double mean, double sd);

    // Independent stream for parallel unit `stream`.
    Rng derive(std::uint64_t stream) const;

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// splitmix64 finalizer; also used to hash ids into derived seeds.
std::uint64_t mix64(std::uint64_t z);

}  // namespace wahkon
