#pragma once

#include <string>
#include <vector>

#include "mrgrc/params.hpp"
#include "mrgrc/trace.hpp"

namespace mrgrc {

enum class VertexKind { Source, Sink, In, Out, Ext, Rep };

struct Vertex {
  VertexKind kind;
  int cluster = 0;      // 1-based; 0 for Source/Sink
  int incarnation = 0;  // tau; the copy of a cluster after its tau-th batch repair
  int node = 0;         // 1-based node index for In/Out; 0 otherwise
};

struct FlowEdge {
  int from = 0;
  int to = 0;
  Rat cap;               // finite capacity; ignored when infinite
  bool infinite = false;
};

/// Information flow graph of a failure/repair history.
///
/// Edge rules, with alpha = per-node storage and beta = helper bandwidth:
///   in_j(tau)  -> out_j(tau)   alpha       (every node of every incarnation)
///   out_j(tau) -> ext(tau)     alpha
///   out_j(tau) -> rep(tau+1)   alpha       for local helpers j
///   ext_h(.)   -> rep(tau+1)   beta        from each helper cluster's active
///                                          incarnation at repair time
///   rep(tau+1) -> in_j(tau+1)  alpha       for replaced nodes j
///   out_j(tau) -> in_j(tau+1)  infinite    for surviving nodes j (content is
///                                          copied; the alpha bottleneck is
///                                          counted once per node)
///   S -> in_j(0) and ext_i(final) -> T for collectors are infinite.
struct FlowGraph {
  std::vector<Vertex> vertices;
  std::vector<FlowEdge> edges;
  int source = 0;
  int sink = 0;

  int find_vertex(VertexKind kind, int cluster, int incarnation, int node) const;
  int find_edge(int from, int to) const;
  std::string vertex_name(int v) const;

  /// One line per edge, "from -> to cap"; byte-for-byte deterministic.
  std::string edge_list() const;
  std::string dot() const;

  Rat total_finite_capacity() const;
};

/// Builds the IFG for a trace with the collector attached to the active ext
/// nodes of `collector_clusters` (exactly k distinct clusters). Requires
/// integer alpha and beta.
FlowGraph build_ifg(const SystemParams& p, const ResourceProfile& r,
                    const FailureTrace& trace, const std::vector<int>& collector_clusters);

/// Exact max-flow = min-cut of the graph, as a rational in original units.
/// Rational capacities are scaled to integers internally; throws Overflow
/// rather than wrapping if the scaled range is exceeded.
Rat max_flow(const FlowGraph& g);

/// True iff removing `edge_ids` leaves no directed S-T path.
bool cut_disconnects(const FlowGraph& g, const std::vector<int>& edge_ids);

/// An explicit S-T cut: edge ids into FlowGraph::edges plus total capacity.
struct CutCertificate {
  std::vector<int> edge_ids;
  Rat capacity;
  bool valid = false;
};

/// The explicit worst-case cut for the graph built from adversarial_trace
/// and adversarial_collectors: per collector cluster, the local nodes'
/// first-incarnation in->out edges, and per batch the cheaper of the t
/// replacement in-edges versus the helper edges from the d-i+1 never-failing
/// helper clusters. Value equals the functional bound; throws CutInvalid if
/// the edges fail to disconnect.
CutCertificate construct_cut(const SystemParams& p, const ResourceProfile& r,
                             const FlowGraph& adversarial_graph);

}  // namespace mrgrc
