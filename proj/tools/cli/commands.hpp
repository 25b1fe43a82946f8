#pragma once

// Subcommand bodies. Each returns the process exit code; data goes to `out`,
// diagnostics to `err`.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "charsub/commutant.hpp"
#include "charsub/census.hpp"

namespace charsub::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitNotNilpotent = 3,
  kExitDimensionMismatch = 4,
  kExitCapExceeded = 5,
};

enum class Format { Text, Json, Dot };

struct CommonFlags {
  Format format = Format::Text;
  std::uint64_t cap = kDefaultAutomorphismCap;
  std::size_t max_dim = kDefaultCensusMaxDim;
};

int cmd_analyze(const std::string& matrix_file, const CommonFlags& flags, bool census,
                std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& matrix_file, const std::string& subspace_file,
                 const CommonFlags& flags, std::ostream& out, std::ostream& err);
int cmd_counterexample(const std::string& matrix_file, const CommonFlags& flags, std::ostream& out,
                       std::ostream& err);
int cmd_lattice(const std::string& matrix_file, const std::string& which, const CommonFlags& flags,
                std::ostream& out, std::ostream& err);
/// max_dim = 0 picks the suite default.
int cmd_verify(const std::string& suite, std::size_t max_dim, std::ostream& out, std::ostream& err);

}  // namespace charsub::cli
