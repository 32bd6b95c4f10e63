#include "mrgrc/rlnc.hpp"

#include "mrgrc/combin.hpp"
#include "mrgrc/errors.hpp"

namespace mrgrc {

static void fill_uniform(SystemState& st, Rng& rng) {
  for (int i = 0; i < st.params.n; ++i)
    for (int j = 0; j < st.params.m; ++j)
      st.nodes[i][j] =
          random_matrix(static_cast<int>(st.alpha), static_cast<int>(st.B), *st.field, rng);
}

static bool all_k_subsets_decode(const SystemState& st) {
  for (const auto& cs : combinations(range1(st.params.n), st.params.k))
    if (!collect(st, cs)) return false;
  return true;
}

SystemState init_storage(const SystemParams& p, const ResourceProfile& r, long long B,
                         const Field& f, Rng& rng) {
  long long alpha = r.require_integer_alpha();
  long long beta = r.require_integer_beta();
  if (B < 1) throw Error(Errc::BadInput, "B must be >= 1");
  long long cap = static_cast<long long>(p.k) * p.m * alpha;
  if (B > cap)
    throw Error(Errc::DegenerateInit, "B = " + std::to_string(B) +
                                          " exceeds k*m*alpha = " + std::to_string(cap) +
                                          "; no collection can reach rank B");

  SystemState st;
  st.params = p;
  st.alpha = alpha;
  st.beta = beta;
  st.B = B;
  st.field = &f;
  st.nodes.assign(p.n, std::vector<SymbolMatrix>(p.m));

  const int kMaxAttempts = 1 + 8;  // initial draw plus up to 8 resamples
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    fill_uniform(st, rng);
    if (all_k_subsets_decode(st)) return st;
  }
  throw Error(Errc::DegenerateInit,
              "initial storage stayed rank-deficient after 8 resamples; "
              "B too large or field too small");
}

SymbolMatrix stack_clusters(const SystemState& st, const std::vector<int>& clusters) {
  SymbolMatrix out(0, static_cast<int>(st.B));
  for (int c : clusters) {
    if (c < 1 || c > st.params.n) throw Error(Errc::BadInput, "cluster index out of range");
    for (int j = 0; j < st.params.m; ++j) out.append_rows(st.nodes[c - 1][j]);
  }
  return out;
}

bool collect(const SystemState& st, const std::vector<int>& clusters) {
  return rank(stack_clusters(st, clusters), *st.field) == st.B;
}

static std::vector<uint32_t> random_combination(const SymbolMatrix& pool, const Field& f,
                                                Rng& rng) {
  std::vector<uint32_t> row(pool.cols(), 0);
  for (int r = 0; r < pool.rows(); ++r) {
    uint32_t c = static_cast<uint32_t>(rng.below(f.order()));
    if (c == 0) continue;
    for (int j = 0; j < pool.cols(); ++j) row[j] = f.add(row[j], f.mul(c, pool.at(r, j)));
  }
  return row;
}

void repair_batch(SystemState& st, const RepairEvent& e, Rng& rng) {
  check_event(st.params, e, Errc::InvalidEvent);
  const Field& f = *st.field;

  // Helper clusters each contribute beta combinations of all their m*alpha rows.
  SymbolMatrix pool(0, static_cast<int>(st.B));
  for (int h : e.helpers) {
    SymbolMatrix cluster_rows(0, static_cast<int>(st.B));
    for (int j = 0; j < st.params.m; ++j) cluster_rows.append_rows(st.nodes[h - 1][j]);
    for (long long s = 0; s < st.beta; ++s)
      pool.append_row(random_combination(cluster_rows, f, rng));
  }
  // Local nodes contribute their stored rows unchanged.
  for (int j : e.locals) pool.append_rows(st.nodes[e.cluster - 1][j - 1]);

  for (int fnode : e.failed) {
    SymbolMatrix repl(0, static_cast<int>(st.B));
    for (long long s = 0; s < st.alpha; ++s) repl.append_row(random_combination(pool, f, rng));
    st.nodes[e.cluster - 1][fnode - 1] = repl;
  }
}

TrialReport monte_carlo(const SystemParams& p, const ResourceProfile& r, long long B,
                        const FailureTrace& trace, int trials, const Field& f, uint64_t seed) {
  if (trials < 1) throw Error(Errc::BadInput, "trials must be >= 1");
  check_trace(p, trace);

  TrialReport rep;
  rep.B = B;
  rep.trials = trials;
  rep.seed = seed;
  rep.field = f.name();
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(trial));
    SystemState st = init_storage(p, r, B, f, rng);
    for (const auto& e : trace.events) repair_batch(st, e, rng);
    if (all_k_subsets_decode(st)) ++rep.successes;
  }
  return rep;
}

}  // namespace mrgrc
