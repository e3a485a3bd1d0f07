#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace busekit::cli {

enum ExitCode : int { ok = 0, failed = 1, parse_failure = 2, inconclusive = 3 };

struct Options {
  std::string scene;
  std::string out;             // empty: write to the given stream
  std::string format = "json"; // json | csv
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<double> tol;
  std::string points;          // decompose: JSON file with an array of points
  std::size_t random_points = 0;
};

/// Seed precedence: --seed, then the scene's seed, then BUSEMANN_KIT_SEED,
/// then 1.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, std::optional<std::uint64_t> scene);

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_decompose(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_classify(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_induced(const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace busekit::cli
