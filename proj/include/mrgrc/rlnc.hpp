#pragma once

#include <cstdint>
#include <vector>

#include "mrgrc/matrix.hpp"
#include "mrgrc/params.hpp"
#include "mrgrc/rng.hpp"
#include "mrgrc/trace.hpp"

namespace mrgrc {

// Functional-repair simulator state: node (i,j) holds an alpha x B coefficient
// matrix over the B message symbols. Ranks stand in for entropies.
struct SystemState {
  SystemParams params;
  long long alpha = 0;
  long long beta = 0;
  long long B = 0;
  const Field* field = nullptr;
  // nodes[i-1][j-1] is the matrix of node j in cluster i.
  std::vector<std::vector<SymbolMatrix>> nodes;
};

struct TrialReport {
  long long B = 0;
  int trials = 0;
  int successes = 0;
  uint64_t seed = 0;
  std::string field;
  double success_rate() const { return trials ? double(successes) / trials : 0.0; }
};

// Fills every node with i.i.d. uniform rows and checks that each k-cluster
// collection already decodes (rank B). Resamples up to 8 times before giving
// up with DegenerateInit; B > k*m*alpha fails immediately.
SystemState init_storage(const SystemParams& p, const ResourceProfile& r, long long B,
                         const Field& f, Rng& rng);

// One batch repair: every helper cluster contributes beta random combinations
// of all its m*alpha rows, the pool adds the ell*alpha local rows, and each of
// the t replacements receives alpha random combinations of the pool.
void repair_batch(SystemState& st, const RepairEvent& e, Rng& rng);

// True iff the rows of all nodes in `clusters` span the full message space.
// Any subset size is accepted; the data-collection property is the k-subset
// special case.
bool collect(const SystemState& st, const std::vector<int>& clusters);

// Stacked coefficient rows of the given clusters, in cluster-then-node order.
SymbolMatrix stack_clusters(const SystemState& st, const std::vector<int>& clusters);

// init -> replay trace -> collect over all k-subsets of clusters. One Rng
// stream per trial index, so results are independent of execution order.
TrialReport monte_carlo(const SystemParams& p, const ResourceProfile& r, long long B,
                        const FailureTrace& trace, int trials, const Field& f, uint64_t seed);

}  // namespace mrgrc
