#pragma once

#include <stdexcept>
#include <string>

namespace cops {

// Every failure raised by the library derives from Error, so callers that
// only care about "something broke" can catch one type. The subclasses map
// one-to-one onto the failure categories surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

#define COPS_DEFINE_ERROR(Name, tag)                      \
  class Name : public Error {                             \
   public:                                                \
    using Error::Error;                                   \
    const char* kind() const noexcept override { return tag; } \
  }

// Graph searches
COPS_DEFINE_ERROR(BudgetExceeded, "budget_exceeded");
COPS_DEFINE_ERROR(UnsupportedGenerator, "unsupported_generator");
COPS_DEFINE_ERROR(ContractViolation, "contract_violation");
COPS_DEFINE_ERROR(GrowthCapExceeded, "growth_cap_exceeded");
COPS_DEFINE_ERROR(DisconnectedAnnulus, "disconnected_annulus");

// Game engine
COPS_DEFINE_ERROR(NegotiationError, "negotiation_error");
COPS_DEFINE_ERROR(IllegalMove, "illegal_move");

// Haven strategy
COPS_DEFINE_ERROR(NoThickEndWitness, "no_thick_end_witness");
COPS_DEFINE_ERROR(BrokenWitness, "broken_witness");
COPS_DEFINE_ERROR(ImpossibleState, "impossible_state");

// Lab / CLI
COPS_DEFINE_ERROR(ConfigError, "config_error");
COPS_DEFINE_ERROR(TraceError, "trace_error");

#undef COPS_DEFINE_ERROR

}  // namespace cops
