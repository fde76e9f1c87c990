#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rps {

enum class Gesture : std::uint8_t { rock = 0, paper = 1, scissors = 2 };

/// SplitMix64 stream. Trial blocks get independent substreams keyed by
/// (seed, block index), which is what makes parallel runs bit-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from {0,1,2} by 128-bit multiply-shift; no rejection loop
    /// (the bias is below 2^-64).
    std::uint32_t uniform3() {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next()) * 3) >> 64);
    }

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t block) {
        return SplitMix64(mix(seed + (block + 1) * 0x9E3779B97F4A7C15ULL));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

inline constexpr char kRngName[] = "splitmix64-substreams/block65536";
inline constexpr long kRoundCap = 10'000'000;

/// Empirical stopping-time statistics for one (n, trials, seed) run.
struct SimulationReport {
    long n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double variance = 0.0;   // unbiased sample variance
    double std_error = 0.0;  // sqrt(variance / trials)
    std::map<long, std::uint64_t> histogram;
    long max_k_observed = 0;
    std::string rng = kRngName;

    friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

namespace detail {

// Rock beats scissors, scissors beat paper, paper beats rock.
inline int survivors_from_counts(const std::uint32_t counts[3], int players) {
    int distinct = (counts[0] > 0) + (counts[1] > 0) + (counts[2] > 0);
    if (distinct != 2) return players;  // indecisive round
    if (counts[0] == 0) return static_cast<int>(counts[2]);  // scissors beat paper
    if (counts[1] == 0) return static_cast<int>(counts[0]);  // rock beats scissors
    return static_cast<int>(counts[1]);                      // paper beats rock
}

}  // namespace detail

/// Round outcome for an explicit set of gestures (test seam for forced draws).
inline int resolve_round(std::span<const Gesture> gestures) {
    if (gestures.size() < 2) throw std::invalid_argument("resolve_round: need at least 2 players");
    std::uint32_t counts[3] = {0, 0, 0};
    for (Gesture g : gestures) ++counts[static_cast<std::uint8_t>(g)];
    return detail::survivors_from_counts(counts, static_cast<int>(gestures.size()));
}

/// Plays one round with uniform random gestures; returns the survivor count
/// (players if the round is indecisive). Rng needs uniform3() -> {0,1,2}.
template <class Rng>
int play_round(int players, Rng& rng) {
    if (players < 2) throw std::invalid_argument("play_round: players must be >= 2");
    std::uint32_t counts[3] = {0, 0, 0};
    for (int p = 0; p < players; ++p) ++counts[rng.uniform3()];
    return detail::survivors_from_counts(counts, players);
}

/// Number of rounds until a single winner remains.
template <class Rng>
long simulate_game(long n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("simulate_game: n must be >= 2");
    long rounds = 0;
    int players = static_cast<int>(n);
    while (players > 1) {
        players = play_round(players, rng);
        if (++rounds > kRoundCap)
            throw std::runtime_error("simulate_game: round cap exceeded; RNG looks pathological");
    }
    return rounds;
}

namespace detail {

struct BlockStats {
    std::uint64_t count = 0;
    std::uint64_t sum = 0;
    unsigned __int128 sum_sq = 0;
    std::map<long, std::uint64_t> histogram;
};

inline BlockStats run_block(long n, std::uint64_t seed, std::uint64_t block,
                            std::uint64_t block_trials) {
    BlockStats stats;
    SplitMix64 rng = SplitMix64::substream(seed, block);
    for (std::uint64_t t = 0; t < block_trials; ++t) {
        const long k = simulate_game(n, rng);
        ++stats.count;
        stats.sum += static_cast<std::uint64_t>(k);
        stats.sum_sq += static_cast<unsigned __int128>(k) * static_cast<unsigned __int128>(k);
        ++stats.histogram[k];
    }
    return stats;
}

}  // namespace detail

/// Monte Carlo estimate over `trials` games. Deterministic for a fixed
/// (n, trials, seed) at any thread count: trials are split into fixed blocks
/// of 65536, block b draws from substream (seed, b), and the per-block
/// integer partials are merged in block order. `threads` = 0 picks the
/// hardware concurrency.
inline SimulationReport estimate(long n, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads = 0) {
    if (n < 2) throw std::invalid_argument("estimate: n must be >= 2");
    if (trials == 0) throw std::invalid_argument("estimate: trials must be >= 1");

    constexpr std::uint64_t kBlockTrials = 65536;
    const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : hw;
    }
    if (threads > blocks) threads = static_cast<unsigned>(blocks);

    std::vector<detail::BlockStats> partials(blocks);
    auto worker = [&](unsigned id) {
        for (std::uint64_t b = id; b < blocks; b += threads) {
            const std::uint64_t lo = b * kBlockTrials;
            const std::uint64_t count = std::min(kBlockTrials, trials - lo);
            partials[b] = detail::run_block(n, seed, b, count);
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
        for (auto& t : pool) t.join();
    }

    detail::BlockStats total;
    for (const auto& p : partials) {  // ordered merge
        total.count += p.count;
        total.sum += p.sum;
        total.sum_sq += p.sum_sq;
        for (const auto& [k, c] : p.histogram) total.histogram[k] += c;
    }

    SimulationReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    const long double sum = static_cast<long double>(total.sum);
    const long double sum_sq = static_cast<long double>(total.sum_sq);
    const long double t = static_cast<long double>(trials);
    report.mean = static_cast<double>(sum / t);
    report.variance =
        trials > 1 ? static_cast<double>((sum_sq - sum * sum / t) / (t - 1.0L)) : 0.0;
    report.std_error = std::sqrt(report.variance / static_cast<double>(trials));
    report.histogram = std::move(total.histogram);
    report.max_k_observed = report.histogram.empty() ? 0 : report.histogram.rbegin()->first;
    return report;
}

}  // namespace rps
