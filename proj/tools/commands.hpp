#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace invalg::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitInputError = 2;

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
  std::string report;
  std::string field;
  bool timings = false;
};

struct ProveOptions {
  bool all = false;
  std::vector<std::string> families;
  std::vector<std::string> identities;
  std::string k;
  std::string h;
};

struct AlgebraOptions {
  std::string file;
  bool extract = false;
  bool annihilator = false;
  bool embedding = false;
  std::vector<std::string> checks;
  std::string k = "all";
  std::string h = "all";
  std::string mode = "exhaustive";
  std::string write;
};

struct ModuleOptions {
  std::string file;
  bool verify = false;
  bool classify = false;
  bool restrict = false;
  std::string quotient;
  std::string hom;
  std::string target;
  std::string write;
};

// Each returns the process exit code. Input problems surface as exceptions
// and are mapped to kExitInputError by the caller.
int run_prove(const GlobalOptions& g, const ProveOptions& o, std::ostream& out);
int run_algebra(const GlobalOptions& g, const AlgebraOptions& o, std::ostream& out);
int run_module(const GlobalOptions& g, const ModuleOptions& o, std::ostream& out);

}  // namespace invalg::cli
