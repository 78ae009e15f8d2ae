#pragma once

#include <stdexcept>
#include <string>

namespace plancol {

// Error taxonomy shared by the whole library.  Operations that can fail on
// malformed input throw Error with the matching code; negative results that
// are legitimate answers (an unsatisfiable instance, a cycle that was not
// found) are returned as values instead.
enum class Errc {
  asymmetric_adjacency,
  duplicate_neighbor,
  self_loop,
  non_spherical,
  disconnected_graph,
  empty_set,
  not_a_cycle,
  adjacent_pair,
  improper_coloring,
  partial_coloring,
  non_cycle_face,
  bad_dimensions,
  invalid_argument,
  no_merge_available,
  winding_too_large,
  winding_mismatch,
  family_too_close,
  not_length4,
  infeasible_constraint,
  parse_error,
  io_error,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace plancol
