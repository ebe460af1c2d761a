#include "tflab/error.hpp"

namespace tflab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::MixedLattices: return "MixedLattices";
    case Errc::ComplementRequested: return "ComplementRequested";
    case Errc::NotSubframe: return "NotSubframe";
    case Errc::NotComplemented: return "NotComplemented";
    case Errc::MixedTopoframes: return "MixedTopoframes";
    case Errc::NotClopen: return "NotClopen";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::EDHypothesisFailed: return "EDHypothesisFailed";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::InternalError: return "InternalError";
  }
  return "Error";
}

}  // namespace tflab
