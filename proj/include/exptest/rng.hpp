#pragma once

#include <cstdint>

namespace exptest {

// Counter-based random stream. The k-th variate of a (seed, stream) pair is a
// pure function of (seed, stream, k): streams may be created in any order and
// consumed on any worker, and results do not depend on scheduling. The core is
// splitmix64 in counter mode.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : key_(derive_key(seed, stream)) {}

    std::uint64_t next_u64() {
        std::uint64_t z = key_ + (counter_++) * 0x9e3779b97f4a7c15ULL;
        return finalize(z);
    }

    // Uniform on the open interval (0, 1).
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double next_exponential(); // standard exponential, survival inversion
    double next_normal();      // standard normal, inverse-cdf method

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
        return finalize(finalize(seed + 0x9e3779b97f4a7c15ULL) ^
                        (stream * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Stable combiner for deriving per-replication stream ids.
inline std::uint64_t stream_id(std::uint64_t a, std::uint64_t b) {
    return RngStream::finalize(a * 0x9e3779b97f4a7c15ULL + RngStream::finalize(b));
}

// FNV-1a over a string, for hashing cell labels into stream namespaces.
inline std::uint64_t label_hash(const char* s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (; *s; ++s) {
        h ^= static_cast<unsigned char>(*s);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace exptest
