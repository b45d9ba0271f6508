#pragma once

// Text cache of chamber lists.
//
//   braidslice-chambers v1 m=<m> augmented=<0|1> cone=<0|1> count=<n> sha256=<hex>
//   <sign string>\t<p/q>,<p/q>,...
//
// The digest covers every byte after the header line. LF line endings, ASCII.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidslice/arrangement.hpp"

namespace braidslice {

inline constexpr std::string_view kCacheMagic = "braidslice-chambers";
inline constexpr std::string_view kCacheVersion = "v1";

struct ChamberCache {
  ArrangementSpec spec;
  std::vector<Chamber> chambers;
};

std::string sha256_hex(std::string_view data);

std::string serialize_cache(const ArrangementSpec& spec, std::span<const Chamber> chambers);
/// Throws CorruptCache or VersionMismatch.
ChamberCache parse_cache(std::string_view text);

void save_cache(const ArrangementSpec& spec, std::span<const Chamber> chambers, const std::filesystem::path& path);
ChamberCache load_cache(const std::filesystem::path& path);

}  // namespace braidslice
