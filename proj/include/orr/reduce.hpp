#pragma once

#include <string>
#include <vector>

#include "orr/divisor.hpp"

namespace orr {

/// Record of one run of Dhar's burning process started at q.
struct BurnTrace {
  bool q_reduced = false;
  std::string reason;               // set when q_reduced is false
  std::vector<VertexId> burn_order; // vertices in the order they burnt
  VertexSet unburnt;                // legal firing set when nonempty
};

/// Burns from q: S = V \ {q}, repeatedly drop the lexicographically least
/// v in S with outdeg_S(v) > D(v). Off-q debt short-circuits with a reason.
BurnTrace dhar_burn(const Multigraph& g, const Divisor& d, VertexId q);

bool is_q_reduced(const Multigraph& g, const Divisor& d, VertexId q);

/// input = divisor + Δ·firing, firing >= 0 with minimum 0.
struct ReducedForm {
  Divisor divisor;
  std::vector<Int> firing;
  VertexId q = 0;
};

ReducedForm reduce(const Multigraph& g, const Divisor& d, VertexId q);

/// Equal degree and equal reduced forms at the base vertex.
bool linearly_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b);

}  // namespace orr
