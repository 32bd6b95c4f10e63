#include "mrgrc/flowgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mrgrc/bounds.hpp"

namespace mrgrc {

namespace {

const char* kind_tag(VertexKind k) {
  switch (k) {
    case VertexKind::Source: return "S";
    case VertexKind::Sink: return "T";
    case VertexKind::In: return "in";
    case VertexKind::Out: return "out";
    case VertexKind::Ext: return "ext";
    case VertexKind::Rep: return "rep";
  }
  return "?";
}

}  // namespace

int FlowGraph::find_vertex(VertexKind kind, int cluster, int incarnation, int node) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    const Vertex& v = vertices[i];
    if (v.kind == kind && v.cluster == cluster && v.incarnation == incarnation &&
        v.node == node)
      return static_cast<int>(i);
  }
  throw Error(Errc::BadInput, "vertex not found in flow graph");
}

int FlowGraph::find_edge(int from, int to) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].from == from && edges[i].to == to) return static_cast<int>(i);
  throw Error(Errc::BadInput, "edge not found in flow graph");
}

std::string FlowGraph::vertex_name(int v) const {
  const Vertex& x = vertices.at(v);
  switch (x.kind) {
    case VertexKind::Source: return "S";
    case VertexKind::Sink: return "T";
    case VertexKind::Ext:
    case VertexKind::Rep: {
      std::ostringstream os;
      os << "c" << x.cluster << "t" << x.incarnation << "." << kind_tag(x.kind);
      return os.str();
    }
    default: {
      std::ostringstream os;
      os << "c" << x.cluster << "t" << x.incarnation << "." << kind_tag(x.kind) << x.node;
      return os.str();
    }
  }
}

std::string FlowGraph::edge_list() const {
  std::ostringstream os;
  for (const auto& e : edges) {
    os << vertex_name(e.from) << " -> " << vertex_name(e.to) << " ";
    if (e.infinite)
      os << "inf";
    else
      os << e.cap.str();
    os << "\n";
  }
  return os.str();
}

std::string FlowGraph::dot() const {
  std::ostringstream os;
  os << "digraph ifg {\n  rankdir=LR;\n";
  for (size_t i = 0; i < vertices.size(); ++i)
    os << "  v" << i << " [label=\"" << vertex_name(static_cast<int>(i)) << "\"];\n";
  for (const auto& e : edges) {
    os << "  v" << e.from << " -> v" << e.to << " [label=\"";
    if (e.infinite)
      os << "inf";
    else
      os << e.cap.str();
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Rat FlowGraph::total_finite_capacity() const {
  Rat total(0);
  for (const auto& e : edges)
    if (!e.infinite) total += e.cap;
  return total;
}

FlowGraph build_ifg(const SystemParams& p, const ResourceProfile& r, const FailureTrace& trace,
                    const std::vector<int>& collector_clusters) {
  Rat alpha(r.require_integer_alpha());
  Rat beta(r.require_integer_beta());
  check_trace(p, trace);

  if (static_cast<int>(collector_clusters.size()) != p.k)
    throw Error(Errc::BadInput, "collector set must name exactly k clusters");
  std::set<int> collectors(collector_clusters.begin(), collector_clusters.end());
  if (static_cast<int>(collectors.size()) != p.k || *collectors.begin() < 1 ||
      *collectors.rbegin() > p.n)
    throw Error(Errc::BadInput, "collector set must be k distinct clusters in [1, n]");

  FlowGraph g;
  auto add_vertex = [&](VertexKind kind, int cluster, int inc, int node) {
    g.vertices.push_back(Vertex{kind, cluster, inc, node});
    return static_cast<int>(g.vertices.size() - 1);
  };
  auto add_edge = [&](int from, int to, const Rat& cap, bool infinite) {
    g.edges.push_back(FlowEdge{from, to, cap, infinite});
  };

  g.source = add_vertex(VertexKind::Source, 0, 0, 0);
  g.sink = add_vertex(VertexKind::Sink, 0, 0, 0);

  // Per cluster: vertex ids of the active incarnation.
  std::vector<std::vector<int>> in_id(p.n + 1, std::vector<int>(p.m + 1));
  std::vector<std::vector<int>> out_id(p.n + 1, std::vector<int>(p.m + 1));
  std::vector<int> ext_id(p.n + 1);
  std::vector<int> incarnation(p.n + 1, 0);

  for (int i = 1; i <= p.n; ++i) {
    for (int j = 1; j <= p.m; ++j) {
      in_id[i][j] = add_vertex(VertexKind::In, i, 0, j);
      out_id[i][j] = add_vertex(VertexKind::Out, i, 0, j);
      add_edge(g.source, in_id[i][j], Rat(0), true);
      add_edge(in_id[i][j], out_id[i][j], alpha, false);
    }
    ext_id[i] = add_vertex(VertexKind::Ext, i, 0, 0);
    for (int j = 1; j <= p.m; ++j) add_edge(out_id[i][j], ext_id[i], alpha, false);
  }

  for (const auto& e : trace.events) {
    int i = e.cluster;
    int tau = ++incarnation[i];

    int rep = add_vertex(VertexKind::Rep, i, tau, 0);
    for (int j : e.locals) add_edge(out_id[i][j], rep, alpha, false);
    for (int h : e.helpers) add_edge(ext_id[h], rep, beta, false);

    std::vector<int> new_in(p.m + 1), new_out(p.m + 1);
    for (int j = 1; j <= p.m; ++j) {
      new_in[j] = add_vertex(VertexKind::In, i, tau, j);
      new_out[j] = add_vertex(VertexKind::Out, i, tau, j);
    }
    for (int j : e.failed) add_edge(rep, new_in[j], alpha, false);
    for (int j = 1; j <= p.m; ++j) {
      if (!std::binary_search(e.failed.begin(), e.failed.end(), j))
        add_edge(out_id[i][j], new_in[j], Rat(0), true);  // surviving node copied
      add_edge(new_in[j], new_out[j], alpha, false);
    }
    int ext = add_vertex(VertexKind::Ext, i, tau, 0);
    for (int j = 1; j <= p.m; ++j) add_edge(new_out[j], ext, alpha, false);

    in_id[i] = new_in;
    out_id[i] = new_out;
    ext_id[i] = ext;
  }

  for (int i : collectors) add_edge(ext_id[i], g.sink, Rat(0), true);
  return g;
}

namespace {

// Dinic over integer capacities.
class Dinic {
 public:
  explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(int u, int v, long long cap) {
    edges_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(edges_.size() - 1);
    edges_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(edges_.size() - 1);
  }

  long long run(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (long long pushed = dfs(s, t, INT64_MAX)) flow += pushed;
    }
    return flow;
  }

 private:
  struct E {
    int to;
    int next;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> q{s};
    level_[s] = 0;
    for (size_t qi = 0; qi < q.size(); ++qi) {
      int u = q[qi];
      for (int ei = head_[u]; ei != -1; ei = edges_[ei].next) {
        const E& e = edges_[ei];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          q.push_back(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int u, int t, long long limit) {
    if (u == t || limit == 0) return limit;
    for (int& ei = it_[u]; ei != -1; ei = edges_[ei].next) {
      E& e = edges_[ei];
      if (e.cap > 0 && level_[e.to] == level_[u] + 1) {
        long long pushed = dfs(e.to, t, std::min(limit, e.cap));
        if (pushed > 0) {
          e.cap -= pushed;
          edges_[ei ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<E> edges_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

long long lcm_of_denominators(const FlowGraph& g) {
  long long l = 1;
  for (const auto& e : g.edges) {
    if (e.infinite) continue;
    long long d = e.cap.den();
    long long gcd = std::gcd(l, d);
    __int128 next = static_cast<__int128>(l / gcd) * d;
    if (next > INT64_MAX) throw Error(Errc::Overflow, "capacity denominator LCM overflows");
    l = static_cast<long long>(next);
  }
  return l;
}

}  // namespace

Rat max_flow(const FlowGraph& g) {
  long long scale = lcm_of_denominators(g);
  __int128 total = 0;
  std::vector<long long> scaled(g.edges.size(), 0);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.infinite) continue;
    if (e.cap < Rat(0)) throw Error(Errc::BadInput, "negative capacity");
    __int128 c = static_cast<__int128>(e.cap.num()) * (scale / e.cap.den());
    if (c > INT64_MAX) throw Error(Errc::Overflow, "scaled capacity exceeds 64-bit range");
    scaled[i] = static_cast<long long>(c);
    total += c;
  }
  // Sentinel for infinite edges: strictly above any finite cut.
  if (total + 1 > INT64_MAX / 4)
    throw Error(Errc::Overflow, "total scaled capacity exceeds the integer range");
  long long inf = static_cast<long long>(total) + 1;

  Dinic dinic(static_cast<int>(g.vertices.size()));
  for (size_t i = 0; i < g.edges.size(); ++i)
    dinic.add_edge(g.edges[i].from, g.edges[i].to, g.edges[i].infinite ? inf : scaled[i]);
  long long flow = dinic.run(g.source, g.sink);
  if (flow >= inf)
    throw Error(Errc::Overflow, "flow saturates the infinity sentinel; no finite cut exists");
  return Rat(flow, scale);
}

bool cut_disconnects(const FlowGraph& g, const std::vector<int>& edge_ids) {
  std::vector<bool> removed(g.edges.size(), false);
  for (int id : edge_ids) removed.at(id) = true;
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (!removed[i]) adj[g.edges[i].from].push_back(g.edges[i].to);
  std::vector<bool> seen(g.vertices.size(), false);
  std::vector<int> stack{g.source};
  seen[g.source] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == g.sink) return false;
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return true;
}

CutCertificate construct_cut(const SystemParams& p, const ResourceProfile& r,
                             const FlowGraph& g) {
  Rat alpha = r.alpha;
  Rat beta = r.beta;
  auto [a, b] = decompose(p);

  CutCertificate cert;
  cert.capacity = Rat(0);
  auto take = [&](int from, int to, const Rat& cap) {
    cert.edge_ids.push_back(g.find_edge(from, to));
    cert.capacity += cap;
  };

  for (int i = 1; i <= p.k; ++i) {
    Rat helper_cost = Rat(p.d - i + 1) * beta;

    // Local nodes never fail; cutting their first-incarnation storage edge
    // severs both the copy chain and every local-helper feed.
    for (int j = p.m - p.ell + 1; j <= p.m; ++j)
      take(g.find_vertex(VertexKind::In, i, 0, j), g.find_vertex(VertexKind::Out, i, 0, j),
           alpha);

    // Batches 1..a repair disjoint t-blocks; batch u creates incarnation u+1.
    for (long long u = 1; u <= a; ++u) {
      int inc = static_cast<int>(u) + 1;
      if (Rat(p.t) * alpha <= helper_cost) {
        int rep = g.find_vertex(VertexKind::Rep, i, inc, 0);
        for (long long j = (u - 1) * p.t + 1; j <= u * p.t; ++j) {
          take(rep, g.find_vertex(VertexKind::In, i, inc, static_cast<int>(j)), alpha);
        }
      } else {
        int rep = g.find_vertex(VertexKind::Rep, i, inc, 0);
        for (int h = p.n - (p.d - i); h <= p.n; ++h)
          take(g.find_vertex(VertexKind::Ext, h, 0, 0), rep, beta);
      }
    }

    // Residual b nodes were last repaired by the first batch (incarnation 1).
    if (b > 0) {
      int rep = g.find_vertex(VertexKind::Rep, i, 1, 0);
      if (Rat(b) * alpha <= helper_cost) {
        for (long long j = a * p.t + 1; j <= p.m - p.ell; ++j)
          take(rep, g.find_vertex(VertexKind::In, i, 1, static_cast<int>(j)), alpha);
      } else {
        for (int h = p.n - (p.d - i); h <= p.n; ++h)
          take(g.find_vertex(VertexKind::Ext, h, 0, 0), rep, beta);
      }
    }
  }

  cert.valid = cut_disconnects(g, cert.edge_ids);
  if (!cert.valid)
    throw Error(Errc::CutInvalid, "constructed cut fails to disconnect S from T");
  return cert;
}

}  // namespace mrgrc
