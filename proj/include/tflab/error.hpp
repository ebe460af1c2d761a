#pragma once

#include <stdexcept>
#include <string>

namespace tflab {

enum class Errc {
  InvalidArgument,
  NotALattice,
  NotDistributive,
  MixedLattices,
  ComplementRequested,
  NotSubframe,
  NotComplemented,
  MixedTopoframes,
  NotClopen,
  NotIdempotent,
  PreconditionFailed,
  NotOrthogonal,
  EDHypothesisFailed,
  SyntaxError,
  ValidationError,
  BoundExceeded,
  InternalError,
};

const char* errc_name(Errc c);

/// Single exception type for the whole library; the code tells callers what
/// went wrong, the message names the offending elements.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace tflab
