#pragma once

#include <cstdint>
#include <random>

namespace entrobound {

/// SplitMix64 finalizer. Used to derive independent stream seeds from a
/// (root seed, stream index) pair so parallel workers never share state.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(root) ^ splitmix64(stream + 0xD1B54A32D192ED03ULL));
}

/// Separates the streams of different consumers that share one user seed,
/// so e.g. NPIM seed k and Monte-Carlo block k never coincide.
enum class StreamDomain : std::uint64_t {
    NpimSeeds = 1,
    MonteCarloNorm = 2,
    MonteCarloEntropy = 3,
    QubitSampling = 4,
    UnitarySweep = 5,
};

constexpr std::uint64_t domain_root(std::uint64_t seed, StreamDomain domain) noexcept {
    return derive_seed(seed, 0xA076'1D64'78BD'642FULL * static_cast<std::uint64_t>(domain));
}

/// A deterministic random stream with a standard-normal sampler.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}
    RngStream(std::uint64_t root, std::uint64_t stream) : engine_(derive_seed(root, stream)) {}

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace entrobound
