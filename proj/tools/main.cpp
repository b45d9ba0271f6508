// braidslice: command-line front end.
//
// Exit codes: 0 ok, 1 internal error, 2 bad input, 3 cache error,
// 4 consistency failure.

#include <chrono>
#include <iostream>
#include <thread>

#include "braidslice/errors.hpp"
#include "cli.hpp"

namespace bc = braidslice::cli;

int main(int argc, char** argv) {
  CLI::App app{"Ranking patterns of unfolding models of codimension one"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read key=value options from a file");

  bc::Globals g;
  g.threads = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--seed", g.seed, "Seed for randomized seed points")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--prime-floor", g.prime_floor, "Primes used for chi must exceed this (0: automatic)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--deterministic", g.deterministic, "Report runtime_ms as 0 so JSON output is byte-identical");
  app.add_flag("-q,--quiet", g.quiet, "No progress messages on stderr");

  std::function<bc::Output()> run;
  bc::register_commands(app, g, run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g.seed == bc::kDefaultSeed) bc::progress(g, "seed " + std::to_string(g.seed) + " (default)");
    const auto t0 = std::chrono::steady_clock::now();
    bc::Output out = run();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (g.format == "json") {
      bc::Json env;
      env["command"] = out.command;
      env["m"] = out.m;
      env["result"] = std::move(out.result);
      env["provenance"] = out.literature ? "literature" : "computed";
      env["seed"] = g.seed;
      env["runtime_ms"] = g.deterministic ? 0 : ms;
      std::cout << env.dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return 0;
  } catch (const braidslice::Error& e) {
    std::cerr << "braidslice: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "braidslice: internal error: " << e.what() << "\n";
    return 1;
  }
}
