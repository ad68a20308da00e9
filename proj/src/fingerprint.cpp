#include "ombench/fingerprint.hpp"

#include <cstdio>
#include <fstream>

#include "ombench/errors.hpp"

namespace ombench {

std::uint64_t file_fingerprint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path.string());
    }
    Fnv1a64 h;
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        h.update(std::string_view(buf, static_cast<std::size_t>(in.gcount())));
    }
    return h.value();
}

std::string fingerprint_hex(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace ombench
