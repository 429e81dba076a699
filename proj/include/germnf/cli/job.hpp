#pragma once

#include "germnf/germ/family_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace germnf {

enum class Command { Analyze, Normalize, Lattice, FirstIntegrals, Verify, Generate, Realcase };

std::string command_name(Command c);
/// Throws InputError on an unknown command.
Command parse_command(const std::string& name);

struct JobConfig {
  Command command = Command::Analyze;
  std::string input;
  std::optional<int> degree;
  int omega_bound = 0;  // 0 means twice the degree
  int branch_bound = 10;
  int torsion_bound = 64;
  bool rho_equivariant = false;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string output;

  /// Throws InputError on a violated invariant.
  void validate() const;
  /// Unknown fields are rejected.
  static JobConfig from_json(const Json& j);
};

struct Report {
  std::string version;
  std::string command;
  std::string input_digest;
  Json payload;
  std::vector<std::string> text;
  double elapsed_ms = 0;

  Json to_json(bool with_timing = true) const;
  std::string render(const std::string& format) const;
};

struct JobOutcome {
  int exit_code = 1;
  std::optional<Report> report;
  std::string error;
};

/// 0 on success, 2 when any verdict is indeterminate, 1 on input or
/// precondition errors (with error set and no report).
JobOutcome run(const JobConfig& config);

std::string sha256_hex(const std::string& bytes);

extern const char* const kToolVersion;

}  // namespace germnf
