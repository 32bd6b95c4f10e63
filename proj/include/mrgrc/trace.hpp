#pragma once

#include <vector>

#include "mrgrc/params.hpp"

namespace mrgrc {

/// One batch repair: t nodes of `cluster` fail and are rebuilt from d helper
/// clusters plus l local nodes. All indices are 1-based; sets are kept sorted.
struct RepairEvent {
  int cluster = 0;
  std::vector<int> failed;   // |failed| = t, subset of [1, m]
  std::vector<int> helpers;  // |helpers| = d, subset of [1, n] \ {cluster}
  std::vector<int> locals;   // |locals| = l, subset of [1, m] \ failed

  bool operator==(const RepairEvent&) const = default;
};

/// Ordered sequence of batch repairs.
struct FailureTrace {
  std::vector<RepairEvent> events;

  bool operator==(const FailureTrace&) const = default;

  /// Number of batch repairs applied to each cluster (1-based -> count).
  std::vector<int> failure_counts(int n) const;
};

/// Throws Error(code) if the event violates the model constraints.
void check_event(const SystemParams& p, const RepairEvent& e, Errc code);

/// Validates every event in order (code InvalidTrace).
void check_trace(const SystemParams& p, const FailureTrace& trace);

/// The worst-case failure sequence: for each data-collector cluster
/// i = 1..k in order, a+1 batches; the first hits the last t of the first
/// m-l nodes, the rest sweep disjoint t-blocks from node 1. The last l nodes
/// serve as locals and clusters {1..i-1} union {n-(d-i)..n} as helpers.
FailureTrace adversarial_trace(const SystemParams& p);

/// Collector set used together with adversarial_trace: clusters 1..k.
std::vector<int> adversarial_collectors(const SystemParams& p);

}  // namespace mrgrc
