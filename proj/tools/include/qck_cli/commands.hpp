#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace qck::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kIoError = 1,      // unreadable/unwritable file, malformed document, bad flags
  kDomainError = 2,  // well-formed input that is invalid or out of domain
};

// 1e-10 unless QCK_DEFAULT_TOL holds a positive number.
double default_tolerance();

using OptionalPath = std::optional<std::filesystem::path>;

int cmd_validate(const std::filesystem::path& input, double tol, std::ostream& out, std::ostream& err);
int cmd_ggm(int d, const OptionalPath& out_path, std::ostream& out, std::ostream& err);
int cmd_bloch_to(const std::filesystem::path& input, const OptionalPath& out_path, std::ostream& out,
                 std::ostream& err);
int cmd_bloch_from(const std::filesystem::path& input, const OptionalPath& out_path, std::ostream& out,
                   std::ostream& err);
int cmd_spin1_sample(long long count, std::uint64_t seed, const OptionalPath& out_path, std::ostream& out,
                     std::ostream& err);
int cmd_sector(int sites, const OptionalPath& csv_path, std::ostream& out, std::ostream& err);

struct OptimizeArgs {
  int d = 2;
  std::filesystem::path hamiltonian;
  double step = 0.1;
  int iters = 1000;
  std::uint64_t seed = 0;
  std::string init = "center";  // "center" or "random"
  double grad_tol = 1e-12;
  OptionalPath out_path;
};

int cmd_optimize(const OptimizeArgs& args, std::ostream& out, std::ostream& err);

// Full command-line dispatch (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qck::cli
