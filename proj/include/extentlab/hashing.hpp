#pragma once

#include <cstdint>
#include <string>

namespace extentlab {

// FNV-1a 64 over a file's raw bytes, rendered as 16 lowercase hex digits.
// Used for input/artifact fingerprints in run manifests (integrity bookkeeping,
// not cryptographic).
std::string fnv1a64_file_hex(const std::string& path);
std::string to_hex64(uint64_t value);

}  // namespace extentlab
