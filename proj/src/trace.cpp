#include "mrgrc/trace.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mrgrc {

std::vector<int> FailureTrace::failure_counts(int n) const {
  std::vector<int> f(n + 1, 0);
  for (const auto& e : events)
    if (e.cluster >= 1 && e.cluster <= n) ++f[e.cluster];
  return f;
}

static bool sorted_distinct_in(const std::vector<int>& v, int lo, int hi) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < lo || v[i] > hi) return false;
    if (i > 0 && v[i] <= v[i - 1]) return false;
  }
  return true;
}

void check_event(const SystemParams& p, const RepairEvent& e, Errc code) {
  auto fail = [&](const std::string& msg) { throw Error(code, msg); };
  if (e.cluster < 1 || e.cluster > p.n)
    fail("cluster " + std::to_string(e.cluster) + " not in [1, n]");
  if (static_cast<int>(e.failed.size()) != p.t)
    fail("|failed| = " + std::to_string(e.failed.size()) + ", expected t = " +
         std::to_string(p.t));
  if (!sorted_distinct_in(e.failed, 1, p.m)) fail("failed set not a sorted subset of [1, m]");
  if (static_cast<int>(e.helpers.size()) != p.d)
    fail("|helpers| = " + std::to_string(e.helpers.size()) + ", expected d = " +
         std::to_string(p.d));
  if (!sorted_distinct_in(e.helpers, 1, p.n))
    fail("helper set not a sorted subset of [1, n]");
  if (std::binary_search(e.helpers.begin(), e.helpers.end(), e.cluster))
    fail("failed cluster " + std::to_string(e.cluster) + " appears among its own helpers");
  if (static_cast<int>(e.locals.size()) != p.ell)
    fail("|locals| = " + std::to_string(e.locals.size()) + ", expected ell = " +
         std::to_string(p.ell));
  if (!sorted_distinct_in(e.locals, 1, p.m)) fail("local set not a sorted subset of [1, m]");
  for (int j : e.locals)
    if (std::binary_search(e.failed.begin(), e.failed.end(), j))
      fail("node " + std::to_string(j) + " is both failed and local helper");
}

void check_trace(const SystemParams& p, const FailureTrace& trace) {
  for (const auto& e : trace.events) check_event(p, e, Errc::InvalidTrace);
}

FailureTrace adversarial_trace(const SystemParams& p) {
  auto [a, b] = decompose(p);
  (void)b;
  std::vector<int> locals;
  for (int j = p.m - p.ell + 1; j <= p.m; ++j) locals.push_back(j);

  FailureTrace trace;
  for (int i = 1; i <= p.k; ++i) {
    std::vector<int> helpers;
    for (int h = 1; h < i; ++h) helpers.push_back(h);
    for (int h = p.n - (p.d - i); h <= p.n; ++h) helpers.push_back(h);

    std::vector<std::vector<int>> batches;
    std::vector<int> first;
    for (int j = p.m - p.ell - p.t + 1; j <= p.m - p.ell; ++j) first.push_back(j);
    batches.push_back(first);
    for (long long u = 1; u <= a; ++u) {
      std::vector<int> batch;
      for (long long j = (u - 1) * p.t + 1; j <= u * p.t; ++j)
        batch.push_back(static_cast<int>(j));
      batches.push_back(batch);
    }
    for (auto& failed : batches)
      trace.events.push_back(RepairEvent{i, failed, helpers, locals});
  }
  check_trace(p, trace);
  return trace;
}

std::vector<int> adversarial_collectors(const SystemParams& p) {
  std::vector<int> c;
  for (int i = 1; i <= p.k; ++i) c.push_back(i);
  return c;
}

}  // namespace mrgrc
