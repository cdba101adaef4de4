#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/io.hpp"
#include "mec/coupling2.hpp"

namespace mec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

struct Job {
  std::string command;
  std::string p_file;
  std::string q_file;
  std::string dists_file;
  std::optional<double> alpha;
  Engine engine = Engine::kSparse;
  std::string format = "sparse";
  bool csv = false;
  bool renormalize = false;
  std::optional<double> tol;
  std::string out_file;
};

/// Runs one job and returns its output document. Throws mec::Error.
Json execute(const Job& job);

/// Full command line handling; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mec::cli
