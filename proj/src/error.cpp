#include "biasham/error.hpp"

namespace biasham {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::invalid_graph: return "InvalidGraph";
    case Errc::invalid_cycle: return "InvalidCycle";
    case Errc::missing_edge: return "MissingEdge";
    case Errc::guard_exceeded: return "GuardExceeded";
    case Errc::too_many_edges: return "TooManyEdges";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::not_independent: return "NotIndependent";
    case Errc::indivisible_n: return "IndivisibleN";
    case Errc::set_too_small: return "SetTooSmall";
    case Errc::too_many_extra_edges: return "TooManyExtraEdges";
    case Errc::target_unreachable: return "TargetUnreachable";
    case Errc::no_path: return "NoPath";
    case Errc::no_closing_vertex: return "NoClosingVertex";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::no_connecting_edge: return "NoConnectingEdge";
    case Errc::connection_failed: return "ConnectionFailed";
    case Errc::absorption_failed: return "AbsorptionFailed";
    case Errc::pipeline_failed: return "PipelineFailed";
    case Errc::structure_violation: return "StructureViolation";
    case Errc::no_hamilton_cycle: return "NoHamiltonCycle";
    case Errc::parse_error: return "ParseError";
    case Errc::config_invalid: return "ConfigInvalid";
    case Errc::io_error: return "IOError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::int64_t subject)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      subject_(subject) {}

ParseError::ParseError(std::int64_t line, const std::string& message)
    : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + message,
            line) {}

}  // namespace biasham
