#pragma once

#include <stdexcept>
#include <string>

namespace mrgrc {

enum class Errc {
  NonPositive,     // a field that must be positive is not
  DOutOfRange,     // d < k or d > n-1
  EllTooLarge,     // l > m-t
  InvalidTrace,    // repair event violates the system model
  InvalidEvent,    // same, raised from the simulator
  Overflow,        // scaled capacities exceed the integer range
  Infeasible,      // no beta attains the requested file size
  DegenerateInit,  // persistent rank deficiency during RLNC init
  CutInvalid,      // emitted cut fails to disconnect S from T
  LemmaViolated,   // greedy permutation inequality fails
  ChainViolated,   // bound-chain inequality fails
  BudgetExceeded,  // enumeration cap hit (also reported in-band)
  EllTooLargeForT, // lifting target incompatible with l
  BadInput,        // malformed file or argument
};

const char* errc_name(Errc c);

/// Library-wide exception. The message names the violated constraint.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace mrgrc
