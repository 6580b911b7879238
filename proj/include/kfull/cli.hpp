#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kfull/bounded_real.hpp"

namespace kfull::cli {

enum class Format { csv, json, text };
enum class Rounding { half_even, truncate };

struct RunConfig {
  unsigned k = 2;
  unsigned max_index = 5;          // L
  int digits = 40;
  std::uint64_t trunc_B = 10'000;  // direct power sums
  unsigned r_max = 0;              // 0 = automatic guard
  std::uint64_t prime_cutoff = 100;
  std::uint64_t N = 0;             // 0 = 10^6 for k = 2, 10^5 otherwise (10^4 with --quick)
  Format format = Format::text;
  std::string out;
  unsigned threads = 1;
  bool quick = false;
  std::string method = "xi";
  Rounding rounding = Rounding::half_even;
  double bound = 0;                // enumerate lambda / kfull bound
  bool proper = false;
  std::vector<std::string> I, J;   // b-tuples such as "2" or "2,1"
  std::map<std::string, double> tolerance;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// x rounded to the given number of decimals and rendered in fixed point.
std::string round_decimal(const Real& x, int decimals, Rounding mode);

struct Check {
  std::string name;
  double observed = 0;
  double tolerance = 0;
  bool passed = false;
  std::string detail;
};

/// The cross-check suite behind `verify`; every check passes iff observed <= tolerance.
std::vector<Check> run_checks(const RunConfig& config);

/// Entry point: args excludes the program name. Exit codes: 0 success,
/// 1 failed check, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kfull::cli
