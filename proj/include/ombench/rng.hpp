#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "ombench/fingerprint.hpp"

namespace ombench {

/// Deterministic random source. The engine (mt19937_64) is pinned by the
/// standard; bounded draws and shuffles are done by hand because the std
/// distributions are implementation-defined and would break byte-identical
/// outputs across toolchains.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Unbiased uniform draw in [0, n). n must be >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) {
                return r % n;
            }
        }
    }

    /// In-place Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    /// k distinct indices from [0, n), in draw order. k must be <= n.
    std::vector<std::size_t> pick_indices(std::size_t n, std::size_t k) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

private:
    std::mt19937_64 engine_;
};

/// Per-item seed derived from a global seed and item identity, so that
/// parallel workers draw the same numbers regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view a,
                                 std::string_view b = {}) {
    Fnv1a64 h;
    h.update_u64(global_seed);
    h.update(a);
    h.update_byte(0);
    h.update(b);
    return h.value();
}

}  // namespace ombench
