#include "doctest.h"

#include "mrgrc/flowgraph.hpp"
#include "mrgrc/rlnc.hpp"
#include "testutil.hpp"

using mrgrc::FailureTrace;
using mrgrc::Field;
using mrgrc::Rat;
using mrgrc::RepairEvent;
using mrgrc::Rng;
using testutil::code_of;

namespace {

mrgrc::SystemParams ref322() { return mrgrc::validate(3, 2, 2, 3, 0, 2); }
mrgrc::ResourceProfile prof22() { return mrgrc::ResourceProfile{Rat(2), Rat(2)}; }

}  // namespace

TEST_CASE("init_storage succeeds at B = k*m*alpha over gf65536") {
  auto p = ref322();
  int ok = 0;
  for (int s = 0; s < 100; ++s) {
    auto rng = Rng::stream(31, s);
    try {
      auto st = mrgrc::init_storage(p, prof22(), 12, Field::gf65536(), rng);
      CHECK(st.B == 12);
      CHECK(st.nodes.size() == 3);
      CHECK(st.nodes[0].size() == 3);
      CHECK(st.nodes[0][0].rows() == 2);
      CHECK(st.nodes[0][0].cols() == 12);
      ++ok;
    } catch (const mrgrc::Error&) {
    }
  }
  CHECK(ok >= 99);
}

TEST_CASE("init_storage rejects B above k*m*alpha and accepts B = 1") {
  auto p = ref322();
  auto rng = Rng::stream(32, 0);
  CHECK(code_of([&] { mrgrc::init_storage(p, prof22(), 13, Field::gf65536(), rng); }) ==
        mrgrc::Errc::DegenerateInit);
  auto st = mrgrc::init_storage(p, prof22(), 1, Field::gf65536(), rng);
  CHECK(mrgrc::collect(st, {1, 2}));
  CHECK(mrgrc::collect(st, {3}));  // B=1: even one cluster decodes
}

TEST_CASE("repair keeps replacements inside the information the event allows") {
  auto p = ref322();
  auto rng = Rng::stream(33, 0);
  auto st = mrgrc::init_storage(p, prof22(), 10, Field::gf65536(), rng);

  // pool available to the repair: all helper rows plus local rows (none here)
  RepairEvent e{1, {2, 3}, {2, 3}, {}};
  auto pool = mrgrc::stack_clusters(st, {2, 3});
  auto before = mrgrc::stack_clusters(st, {1, 2, 3});
  mrgrc::repair_batch(st, e, rng);

  mrgrc::SymbolMatrix replaced = st.nodes[0][1];  // node 2
  replaced.append_rows(st.nodes[0][2]);           // node 3
  CHECK(mrgrc::in_rowspace(replaced, pool, *st.field));

  // repair never creates information: total rank does not increase
  auto after = mrgrc::stack_clusters(st, {1, 2, 3});
  CHECK(mrgrc::rank(after, *st.field) <= mrgrc::rank(before, *st.field));

  // cluster rank cannot exceed what the event carried in
  long long cap = std::min<long long>(p.m * st.alpha,
                                      p.ell * st.alpha + p.d * st.beta + (p.m - p.t) * st.alpha);
  CHECK(mrgrc::rank(mrgrc::stack_clusters(st, {1}), *st.field) <= cap);
}

TEST_CASE("repair_batch validates events") {
  auto p = ref322();
  auto rng = Rng::stream(34, 0);
  auto st = mrgrc::init_storage(p, prof22(), 8, Field::gf65536(), rng);
  RepairEvent bad{1, {2, 3}, {1, 2}, {}};  // helper set contains repaired cluster
  CHECK(code_of([&] { mrgrc::repair_batch(st, bad, rng); }) == mrgrc::Errc::InvalidEvent);
}

TEST_CASE("monte_carlo is a step function around the adversarial min-cut") {
  auto p = ref322();
  auto tr = mrgrc::adversarial_trace(p);
  auto good =
      mrgrc::monte_carlo(p, prof22(), 10, tr, 200, Field::gf65536(), /*seed=*/20260825);
  CHECK(good.trials == 200);
  CHECK(good.success_rate() >= 0.99);

  // B = 11 exceeds the trace's min-cut of 10: the two repaired clusters can
  // never decode, deterministically
  auto cols = mrgrc::adversarial_collectors(p);
  for (int s = 0; s < 50; ++s) {
    auto rng = Rng::stream(35, s);
    mrgrc::SystemState st;
    try {
      st = mrgrc::init_storage(p, prof22(), 11, Field::gf65536(), rng);
    } catch (const mrgrc::Error&) {
      continue;  // rare degenerate init is not what we are testing
    }
    for (const auto& e : tr.events) mrgrc::repair_batch(st, e, rng);
    CHECK_FALSE(mrgrc::collect(st, cols));
  }

  auto blocked =
      mrgrc::monte_carlo(p, prof22(), 11, tr, 50, Field::gf65536(), /*seed=*/20260825);
  CHECK(blocked.successes == 0);
}

TEST_CASE("fewer than k clusters never decode") {
  auto p = ref322();
  for (int s = 0; s < 20; ++s) {
    auto rng = Rng::stream(36, s);
    auto st = mrgrc::init_storage(p, prof22(), 10, Field::gf65536(), rng);
    CHECK_FALSE(mrgrc::collect(st, {1}));  // m*alpha = 6 rows < B
    CHECK(mrgrc::collect(st, {1, 2}));
  }
}

TEST_CASE("monte_carlo is deterministic in its seed") {
  auto p = ref322();
  auto tr = mrgrc::adversarial_trace(p);
  auto a = mrgrc::monte_carlo(p, prof22(), 10, tr, 40, Field::gf256(), 7);
  auto b = mrgrc::monte_carlo(p, prof22(), 10, tr, 40, Field::gf256(), 7);
  CHECK(a.successes == b.successes);
  CHECK(a.seed == 7);
  CHECK(a.field == "gf256");
  auto c = mrgrc::monte_carlo(p, prof22(), 10, tr, 40, Field::gf256(), 8);
  CHECK(c.trials == 40);  // different seed still runs; successes may differ
}

TEST_CASE("larger fields do not hurt the success rate (within noise)") {
  auto p = ref322();
  auto tr = mrgrc::adversarial_trace(p);
  auto small = mrgrc::monte_carlo(p, prof22(), 10, tr, 200, Field::gf256(), 9);
  auto large = mrgrc::monte_carlo(p, prof22(), 10, tr, 200, Field::gf65536(), 9);
  // two-sigma slack on 200 Bernoulli trials
  CHECK(large.success_rate() >= small.success_rate() - 0.071);
  CHECK(large.success_rate() >= 0.99);
}

TEST_CASE("achievable rank never exceeds the min-cut, trace by trace") {
  auto p = ref322();
  auto r = prof22();
  auto rng = Rng::stream(37, 0);
  for (int trial = 0; trial < 60; ++trial) {
    // random short trace
    FailureTrace tr;
    int batches = (int)rng.below(3);
    for (int u = 0; u < batches; ++u) {
      int cluster = 1 + (int)rng.below(3);
      int skip = 1 + (int)rng.below(3);  // failed = [1,3] minus one node
      std::vector<int> failed;
      for (int j = 1; j <= 3; ++j)
        if (j != skip) failed.push_back(j);
      std::vector<int> helpers;
      for (int c = 1; c <= 3; ++c)
        if (c != cluster) helpers.push_back(c);
      tr.events.push_back(RepairEvent{cluster, failed, helpers, {}});
    }
    std::vector<int> cols = (trial % 3 == 0)   ? std::vector<int>{1, 2}
                            : (trial % 3 == 1) ? std::vector<int>{1, 3}
                                               : std::vector<int>{2, 3};

    auto sim = Rng::stream(38, trial);
    mrgrc::SystemState st;
    try {
      st = mrgrc::init_storage(p, r, 12, Field::gf65536(), sim);
    } catch (const mrgrc::Error&) {
      continue;
    }
    for (const auto& e : tr.events) mrgrc::repair_batch(st, e, sim);

    auto g = mrgrc::build_ifg(p, r, tr, cols);
    Rat cut = mrgrc::max_flow(g);
    int achieved = mrgrc::rank(mrgrc::stack_clusters(st, cols), *st.field);
    CHECK(Rat(achieved) <= cut);
  }
}

TEST_CASE("decoding at B implies decoding the truncated message at B-1") {
  auto p = ref322();
  auto tr = mrgrc::adversarial_trace(p);
  for (int s = 0; s < 10; ++s) {
    auto rng = Rng::stream(39, s);
    mrgrc::SystemState st;
    try {
      st = mrgrc::init_storage(p, prof22(), 10, Field::gf65536(), rng);
    } catch (const mrgrc::Error&) {
      continue;
    }
    for (const auto& e : tr.events) mrgrc::repair_batch(st, e, rng);
    auto full = mrgrc::stack_clusters(st, {1, 2});
    if (mrgrc::rank(full, *st.field) != 10) continue;
    // dropping the last message coordinate keeps the first 9 decodable
    mrgrc::SymbolMatrix trunc(0, 9);
    for (int i = 0; i < full.rows(); ++i) {
      std::vector<uint32_t> row(9);
      for (int j = 0; j < 9; ++j) row[j] = full.at(i, j);
      trunc.append_row(row);
    }
    CHECK(mrgrc::rank(trunc, *st.field) == 9);
  }
}
