#pragma once

#include <cstdint>
#include <vector>

#include "mrgrc/flowgraph.hpp"

namespace mrgrc {

struct SearchPolicy {
  bool symmetry_reduce = true;     // dedupe relabel-isomorphic instances
  long long budget = 1'000'000;    // cap on max-flow evaluations
};

struct SearchReport {
  Rat minimum;                     // min over enumerated (trace, collectors)
  FailureTrace argmin_trace;
  std::vector<int> argmin_collectors;
  long long instances_enumerated = 0;  // before symmetry dedup
  long long graphs_evaluated = 0;      // max-flow computations
  bool budget_exceeded = false;        // minimum is then a partial result
  Rat functional_bound_value;          // B_F for comparison
  bool matches_bound = false;          // minimum == B_F
};

/// Enumerates every failure trace with at most max_batches events and every
/// collector choice, computes the min-cut of each IFG, and returns the
/// minimum. Desk-scale parameters only; the search is exponential.
///
/// With symmetry_reduce, instances that differ only by a joint relabeling of
/// clusters and of nodes within each cluster are evaluated once (min-cut is
/// invariant under graph isomorphism). The exhaustive mode exists to validate
/// the reduction on micro instances.
SearchReport converse_search(const SystemParams& p, const ResourceProfile& r, int max_batches,
                             const SearchPolicy& policy = {});

}  // namespace mrgrc
