#pragma once

#include <stdexcept>
#include <string>

namespace hyperspec {

enum class errc {
  bad_params,
  edge_wrong_size,
  duplicate_vertex_in_edge,
  vertex_out_of_range,
  duplicate_edge,
  isolated_vertex,
  not_connected,
  has_cycle,
  not_supertree,
  invalid_alpha,
  non_positive_vector,
  dimension_mismatch,
  not_unit_vector,
  target_inside_edge,
  pivot_not_in_edge,
  result_has_duplicate_edge,
  pendent_edge,
  vertex_not_in_edge,
  no_adjacent_edges,
  overlap_violation,
  result_edge_exists,
  instance_too_large,
  not_a_permutation,
  beta_out_of_range,
  mu_out_of_range,
  infeasible_sequence,
  empty_class,
  parse_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

} // namespace hyperspec
