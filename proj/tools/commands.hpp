#ifndef NOETHER_TOOLS_COMMANDS_HPP
#define NOETHER_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "spec_file.hpp"

namespace noether::cli {

struct Options {
  std::string spec_path;
  std::string out_path;  // empty: report goes to stdout
  std::string csv_path;  // verify: optional trajectory export
  std::optional<double> t0, t1, dt, tol;
  std::uint64_t seed = 0;  // sub-region sampling in verify
};

// Exit codes: 0 success, 1 error. analyze and verify use 2 for a clean run
// with a negative outcome (not a quasi-symmetry / a failed check).
int run_analyze(const Options& opts);
int run_verify(const Options& opts);
int run_homotopy(const Options& opts);
int run_gauge(const Options& opts);

}  // namespace noether::cli

#endif
