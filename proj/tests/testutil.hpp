#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "mrgrc/errors.hpp"

namespace testutil {

// Runs f, which must throw mrgrc::Error, and returns the error code.
template <class F>
mrgrc::Errc code_of(F&& f) {
  try {
    f();
  } catch (const mrgrc::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected mrgrc::Error, nothing was thrown");
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the mrgrc binary with the given argument string, capturing stdout.
// stderr is folded into stdout so diagnostics show up in failures.
inline CliResult run_cli(const std::string& args) {
#ifndef MRGRC_CLI_PATH
#error "MRGRC_CLI_PATH must be defined for CLI tests"
#endif
  std::string cmd = std::string(MRGRC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CliResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

// Same, with an environment prefix such as "MRGRC_SEED=7".
inline CliResult run_cli_with_env(const std::string& env, const std::string& args) {
  std::string cmd = "env " + env + " " + std::string(MRGRC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CliResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testutil
