#pragma once

#include <cstdint>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidslice/rational.hpp"

namespace braidslice::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::uint64_t prime_floor = 0;
  std::string format = "text";
  bool deterministic = false;
  bool quiet = false;
};

/// What a subcommand hands back to main for printing.
struct Output {
  std::string command;
  int m = 0;
  Json result = Json::object();
  bool literature = false;
  /// Text rendering; printed verbatim in text mode.
  std::string text;
};

/// Integer as a JSON number when it fits in 64 bits, otherwise a string.
Json big(const BigInt& x);

/// Adds every subcommand to app. run is set to the chosen command's body.
void register_commands(CLI::App& app, Globals& globals, std::function<Output()>& run);

/// Message to stderr unless --quiet.
void progress(const Globals& g, const std::string& message);

}  // namespace braidslice::cli
