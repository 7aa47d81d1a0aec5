#ifndef TREEGROWER_RANDOM_WALK_HPP
#define TREEGROWER_RANDOM_WALK_HPP

#include <cstdint>
#include <string>

#include "treegrower/exact.hpp"
#include "treegrower/tree.hpp"

namespace treegrower {

/// SplitMix64: tiny splittable generator. Each (purpose, pair, walk) tuple
/// derives an independent substream from the master seed, so runs are
/// reproducible for any degree of parallelism.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased uniform draw from [0, bound); bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Avalanche mix (SplitMix64 finalizer) used for substream derivation.
std::uint64_t mix64(std::uint64_t x);

/// Independent substream for (master_seed, tag, a, b).
SplitMix64 substream(std::uint64_t master_seed, std::uint64_t tag, std::uint64_t a,
                     std::uint64_t b);

/// Hitting times on trees are finite; the cap only catches implementation
/// bugs, and any capped sample invalidates its estimate.
inline constexpr std::uint64_t kDefaultStepCap = 10'000'000'000ull;

/// One simulated walk from u until first arrival at v; returns the step
/// count. Throws step_cap_exceeded if the cap is hit.
std::uint64_t sample_hitting(const Tree& tree, VertexId u, VertexId v, SplitMix64& rng,
                             std::uint64_t step_cap = kDefaultStepCap);

struct WalkEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;         // completed walks contributing to mean
    std::uint64_t master_seed = 0;
    std::uint64_t max_steps_hit = 0;   // longest completed walk observed
    std::uint64_t truncated_count = 0; // capped walks; nonzero invalidates mean
};

/// Monte Carlo estimate of the hitting time of one ordered pair. Walk i uses
/// its own substream, so results are bitwise identical for any worker count.
WalkEstimate estimate_hitting(const Tree& tree, VertexId u, VertexId v,
                              std::uint64_t samples, std::uint64_t master_seed,
                              unsigned workers = 1,
                              std::uint64_t step_cap = kDefaultStepCap);

/// Monte Carlo estimate of the mean hitting time over ordered pairs: draws
/// `pair_samples` ordered pairs uniformly with replacement, runs
/// `walks_per_pair` walks on each. The standard error is computed from
/// per-pair means (pairs are the independent units; identical to the pooled
/// formula when walks_per_pair is 1).
WalkEstimate estimate_mean_hitting(const Tree& tree, std::uint64_t pair_samples,
                                   std::uint64_t walks_per_pair, std::uint64_t master_seed,
                                   unsigned workers = 1,
                                   std::uint64_t step_cap = kDefaultStepCap);

/// JSON with the master seed always present for replay.
std::string walk_estimate_to_json(const WalkEstimate& estimate);

} // namespace treegrower

#endif
