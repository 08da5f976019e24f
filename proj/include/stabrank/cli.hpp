#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stabrank/experiments.hpp"
#include "stabrank/mds.hpp"

namespace stabrank::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // bad arguments or unreadable file
  kParse = 2,
  kValidation = 3,
  kContract = 4,  // e.g. metric incompatible with list kind
  kNumeric = 5,   // degenerate normalizer, eigensolver failure
};

enum class OutputFormat { csv, json };

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);

/// metrics: any of sjs, spearman, kuncheva, jaccard.
int cmd_stability(const std::string& path, const std::vector<std::string>& metrics, bool json,
                  std::ostream& out, std::ostream& err);

/// Writes to `out_path`, or to `out` when out_path is empty or "-".
int cmd_experiment(Experiment which, const ExperimentOptions& options, const std::string& out_path,
                   OutputFormat format, std::ostream& out, std::ostream& err);

int cmd_mds(const std::vector<std::string>& paths, mds::DistanceSpec distance,
            const std::string& out_path, OutputFormat format, std::ostream& out,
            std::ostream& err);

/// Full command-line entry point (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stabrank::cli
