#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace biasham {

/// Failure categories reported by the library. Every thrown biasham::Error
/// carries exactly one of these.
enum class Errc {
  invalid_argument,
  invalid_graph,
  invalid_cycle,
  missing_edge,
  guard_exceeded,
  too_many_edges,
  size_mismatch,
  not_independent,
  indivisible_n,
  set_too_small,
  too_many_extra_edges,
  target_unreachable,
  no_path,
  no_closing_vertex,
  precondition_violated,
  search_exhausted,
  no_connecting_edge,
  connection_failed,
  absorption_failed,
  pipeline_failed,
  structure_violation,
  no_hamilton_cycle,
  parse_error,
  config_invalid,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::int64_t subject = -1);

  Errc code() const noexcept { return code_; }

  /// Index of the offending item (junction, vertex, line) when one exists,
  /// otherwise -1.
  std::int64_t subject() const noexcept { return subject_; }

 private:
  Errc code_;
  std::int64_t subject_;
};

class ParseError : public Error {
 public:
  ParseError(std::int64_t line, const std::string& message);

  std::int64_t line() const noexcept { return subject(); }
};

}  // namespace biasham
