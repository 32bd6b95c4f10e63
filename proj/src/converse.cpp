#include "mrgrc/converse.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_set>

#include "mrgrc/bounds.hpp"
#include "mrgrc/combin.hpp"

namespace mrgrc {

namespace {

// All admissible single events for the parameter set.
std::vector<RepairEvent> event_universe(const SystemParams& p) {
  std::vector<RepairEvent> events;
  auto nodes = range1(p.m);
  for (int i = 1; i <= p.n; ++i) {
    std::vector<int> other_clusters;
    for (int c = 1; c <= p.n; ++c)
      if (c != i) other_clusters.push_back(c);
    auto helper_sets = combinations(other_clusters, p.d);
    for (const auto& failed : combinations(nodes, p.t)) {
      std::vector<int> survivors;
      for (int j = 1; j <= p.m; ++j)
        if (!std::binary_search(failed.begin(), failed.end(), j)) survivors.push_back(j);
      auto local_sets = combinations(survivors, p.ell);
      for (const auto& helpers : helper_sets)
        for (const auto& locals : local_sets)
          events.push_back(RepairEvent{i, failed, helpers, locals});
    }
  }
  return events;
}

// Serialization of a relabeled instance, used as the canonical key after
// minimizing over the relabeling group.
std::string serialize(const FailureTrace& trace, const std::vector<int>& collectors,
                      const std::vector<int>& cluster_map,
                      const std::vector<std::vector<int>>& node_maps) {
  std::string s;
  s.reserve(collectors.size() + trace.events.size() * 12 + 4);
  auto put_set = [&s](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    for (int x : v) s.push_back(static_cast<char>(x));
    s.push_back('\x7f');
  };
  std::vector<int> c;
  for (int x : collectors) c.push_back(cluster_map[x]);
  put_set(c);
  for (const auto& e : trace.events) {
    int orig = e.cluster;
    s.push_back(static_cast<char>(cluster_map[orig]));
    std::vector<int> f, h, l;
    for (int x : e.failed) f.push_back(node_maps[orig][x]);
    for (int x : e.helpers) h.push_back(cluster_map[x]);
    for (int x : e.locals) l.push_back(node_maps[orig][x]);
    put_set(f);
    put_set(h);
    put_set(l);
  }
  return s;
}

// Minimum serialization over all joint relabelings of clusters and of nodes
// within each cluster. Node maps are attached to original cluster indices, so
// the product over per-cluster permutations composes cleanly with the cluster
// permutation.
class Canonicalizer {
 public:
  Canonicalizer(int n, int m) : n_(n), m_(m) {
    std::vector<int> perm = identity(m);
    do {
      node_perms_.push_back(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    perm = identity(n);
    do {
      cluster_perms_.push_back(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));

    double orbit = static_cast<double>(cluster_perms_.size());
    for (int i = 0; i < n_; ++i) orbit *= static_cast<double>(node_perms_.size());
    if (orbit > 2e5)
      throw Error(Errc::BadInput,
                  "relabeling orbit too large for symmetry reduction; disable it");
  }

  std::string canonical_key(const FailureTrace& trace, const std::vector<int>& collectors) {
    std::string best;
    std::vector<std::vector<int>> node_maps(n_ + 1);
    std::vector<size_t> choice(n_ + 1, 0);
    for (const auto& cmap : cluster_perms_) {
      // Odometer over per-cluster node permutations.
      std::fill(choice.begin(), choice.end(), 0);
      bool more = true;
      while (more) {
        for (int c = 1; c <= n_; ++c) node_maps[c] = node_perms_[choice[c]];
        std::string s = serialize(trace, collectors, cmap, node_maps);
        if (best.empty() || s < best) best = std::move(s);
        more = false;
        for (int c = 1; c <= n_; ++c) {
          if (++choice[c] < node_perms_.size()) {
            more = true;
            break;
          }
          choice[c] = 0;
        }
      }
    }
    return best;
  }

 private:
  static std::vector<int> identity(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return v;
  }

  int n_;
  int m_;
  std::vector<std::vector<int>> node_perms_;     // permutations of [1, m]
  std::vector<std::vector<int>> cluster_perms_;  // permutations of [1, n]
};

}  // namespace

SearchReport converse_search(const SystemParams& p, const ResourceProfile& r, int max_batches,
                             const SearchPolicy& policy) {
  SearchReport rep;
  rep.functional_bound_value = functional_bound(p, r);

  auto events = event_universe(p);
  auto collector_sets = combinations(range1(p.n), p.k);

  std::unordered_set<std::string> seen;
  std::optional<Canonicalizer> canon;
  if (policy.symmetry_reduce) canon.emplace(p.n, p.m);

  bool have_min = false;
  FailureTrace trace;

  auto evaluate_current = [&]() -> bool {  // false = budget exhausted
    for (const auto& collectors : collector_sets) {
      ++rep.instances_enumerated;
      if (canon) {
        auto key = canon->canonical_key(trace, collectors);
        if (!seen.insert(std::move(key)).second) continue;
      }
      if (rep.graphs_evaluated >= policy.budget) {
        rep.budget_exceeded = true;
        return false;
      }
      ++rep.graphs_evaluated;
      FlowGraph g = build_ifg(p, r, trace, collectors);
      Rat cut = max_flow(g);
      if (!have_min || cut < rep.minimum) {
        have_min = true;
        rep.minimum = cut;
        rep.argmin_trace = trace;
        rep.argmin_collectors = collectors;
      }
    }
    return true;
  };

  // Depth-first over traces; every prefix is itself a trace and is evaluated
  // once on the way down.
  std::function<bool(int)> descend = [&](int remaining) -> bool {
    if (!evaluate_current()) return false;
    if (remaining == 0) return true;
    for (const auto& e : events) {
      trace.events.push_back(e);
      bool alive = descend(remaining - 1);
      trace.events.pop_back();
      if (!alive) return false;
    }
    return true;
  };
  descend(max_batches);

  rep.matches_bound = have_min && rep.minimum == rep.functional_bound_value;
  return rep;
}

}  // namespace mrgrc
