#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace ombench {

/// Running 64-bit FNV-1a hash. Stable across platforms and runs, which is
/// what run manifests and immutability checks need; not cryptographic.
class Fnv1a64 {
public:
    void update(std::string_view bytes) {
        for (unsigned char c : bytes) {
            state_ ^= c;
            state_ *= 0x100000001b3ull;
        }
    }

    void update_byte(unsigned char c) {
        state_ ^= c;
        state_ *= 0x100000001b3ull;
    }

    void update_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            update_byte(static_cast<unsigned char>(v >> (8 * i)));
        }
    }

    std::uint64_t value() const { return state_; }

private:
    std::uint64_t state_ = 0xcbf29ce484222325ull;
};

inline std::uint64_t fnv1a64(std::string_view bytes) {
    Fnv1a64 h;
    h.update(bytes);
    return h.value();
}

/// Hash of a file's raw bytes. Throws IoError if the file cannot be read.
std::uint64_t file_fingerprint(const std::filesystem::path& path);

/// Renders a fingerprint as "fnv1a64:<16 hex digits>".
std::string fingerprint_hex(std::uint64_t v);

}  // namespace ombench
