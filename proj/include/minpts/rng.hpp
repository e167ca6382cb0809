#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace minpts {

// splitmix64 mixer, used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for the index-th substream of a run. Substreams are keyed by logical
// index (sample id, vertex row, ...), never by thread or chunk, so results
// do not depend on the degree of parallelism.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 1));
}

// mt19937_64 with explicit draw helpers. The standard pins down the engine
// output exactly; the distributions in <random> are not pinned, so bounded
// draws are done here by rejection.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, bound), unbiased
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        for (;;) {
            std::uint64_t x = eng_();
            if (x < limit) return x % bound;
        }
    }

    int index_below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    // uniform in [0, 1) with 53 random bits
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool coin() { return (eng_() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace minpts
