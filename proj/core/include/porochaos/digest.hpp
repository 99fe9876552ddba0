#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace porochaos {

/// FNV-1a 64-bit content digest, used for reproducibility manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
std::string file_digest_hex(const std::filesystem::path& path);

}  // namespace porochaos
