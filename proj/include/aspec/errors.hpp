#pragma once

#include <stdexcept>
#include <string>

namespace aspec {

// Error codes, grouped by how the CLI reports them: validation errors exit
// with 1, numerical errors with 2, cap errors with 3.
enum class errc {
  duplicate_relation,
  self_loop,
  label_out_of_range,
  length_mismatch,
  disconnected,
  parameter_out_of_range,
  alpha_out_of_range,
  bad_partition,
  not_equitable,
  not_a_tree,
  symmetry_violation,
  bound_violation,
  arc_between_ab,
  has_undirected_edge,
  invalid_json,
  negative_entry,
  non_convergence,
  size_limit_exceeded,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

inline bool is_numerical(errc c) { return c == errc::non_convergence; }
inline bool is_cap(errc c) { return c == errc::size_limit_exceeded; }

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace aspec
