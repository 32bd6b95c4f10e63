#include "doctest.h"

#include <vector>

#include "mrgrc/bounds.hpp"
#include "mrgrc/rng.hpp"
#include "testutil.hpp"

using mrgrc::Rat;
using mrgrc::RepairMode;
using testutil::code_of;

namespace {

mrgrc::SystemParams ref322() { return mrgrc::validate(3, 2, 2, 3, 0, 2); }

}  // namespace

TEST_CASE("reference values: (3,2,2), m=3, t=2, alpha=beta=2") {
  auto p = ref322();
  mrgrc::ResourceProfile r{Rat(2), Rat(2)};
  CHECK(mrgrc::functional_bound(p, r) == Rat(10));
  CHECK(mrgrc::exact_bound(p, r) == Rat(9));
  CHECK(mrgrc::bound(p, r, RepairMode::Functional) == Rat(10));
  CHECK(mrgrc::bound(p, r, RepairMode::Exact) == Rat(9));

  auto c = mrgrc::classify(p, r);
  CHECK_FALSE(c.divisible);
  CHECK(c.at_mbr);
  CHECK_FALSE(c.bounds_equal);
  CHECK(c.strict_gap);
  CHECK(c.b_functional == Rat(10));
  CHECK(c.b_exact == Rat(9));
}

TEST_CASE("reference values: (5,4,4), m=3, t=2, alpha=2, beta=1") {
  auto p = mrgrc::validate(5, 4, 4, 3, 0, 2);
  mrgrc::ResourceProfile r{Rat(2), Rat(1)};
  CHECK(mrgrc::functional_bound(p, r) == Rat(17));
  CHECK(mrgrc::exact_bound(p, r) == Rat(15));
}

TEST_CASE("m=1, t=1 reduces to the classical regenerating-code bound") {
  auto p = mrgrc::validate(6, 3, 4, 1, 0, 1);
  for (long long a = 1; a <= 6; ++a)
    for (long long b = 1; b <= 6; ++b) {
      mrgrc::ResourceProfile r{Rat(a), Rat(b)};
      Rat classical(0);
      for (int i = 0; i < p.k; ++i) classical += Rat::min(Rat(a), Rat(p.d - i) * Rat(b));
      CHECK(mrgrc::functional_bound(p, r) == classical);
      CHECK(mrgrc::exact_bound(p, r) == classical);  // b = 0 here
    }
}

TEST_CASE("divisible split: t | (m - ell) forces equality of the bounds") {
  for (int m = 2; m <= 9; ++m)
    for (int t = 1; t <= m; ++t)
      for (int ell = 0; ell <= m - t; ++ell) {
        if ((m - ell) % t != 0) continue;
        auto p = mrgrc::validate(6, 3, 4, m, ell, t);
        mrgrc::ResourceProfile r{Rat(5, 2), Rat(4, 3)};
        CHECK(mrgrc::functional_bound(p, r) == mrgrc::exact_bound(p, r));
        CHECK(mrgrc::classify(p, r).bounds_equal);
      }
}

TEST_CASE("mbr_profile solves t*alpha = d*beta") {
  CHECK(mrgrc::mbr_profile(ref322(), Rat(2)).alpha == Rat(2));
  CHECK(mrgrc::mbr_profile(mrgrc::validate(7, 4, 5, 17, 2, 5), Rat(1)).alpha == Rat(1));
  CHECK(mrgrc::mbr_profile(mrgrc::validate(5, 4, 4, 3, 0, 2), Rat(1)).alpha == Rat(2));

  auto p = mrgrc::validate(5, 3, 3, 4, 0, 2);
  CHECK(mrgrc::mbr_profile(p, Rat(1)).alpha == Rat(3, 2));
  CHECK(code_of([&] { mrgrc::mbr_profile(p, Rat(1), /*require_integral=*/true); }) ==
        mrgrc::Errc::Infeasible);
}

TEST_CASE("msr_check flags B = m*k*alpha") {
  auto p = ref322();
  mrgrc::ResourceProfile r{Rat(2), Rat(100)};
  CHECK(mrgrc::msr_check(p, r, Rat(12)));       // 3*2*2
  CHECK_FALSE(mrgrc::msr_check(p, r, Rat(10)));
  auto classical = mrgrc::validate(6, 3, 4, 1, 0, 1);
  CHECK(mrgrc::msr_check(classical, mrgrc::ResourceProfile{Rat(4), Rat(50)}, Rat(12)));
}

TEST_CASE("functional bound sits weakly below the exact bound in beta") {
  auto p = ref322();
  Rat B(10);
  for (int twice_alpha = 4; twice_alpha <= 12; ++twice_alpha) {
    Rat alpha(twice_alpha, 2);
    auto bf = mrgrc::min_beta_for(p, alpha, B, RepairMode::Functional);
    auto be = mrgrc::min_beta_for(p, alpha, B, RepairMode::Exact);
    if (!bf.has_value() || !be.has_value()) continue;
    CHECK(*bf <= *be);
  }
}

TEST_CASE("at B = 10 the functional curve reaches (2,2), the exact one cannot") {
  auto p = ref322();
  Rat B(10);
  CHECK(*mrgrc::min_beta_for(p, Rat(2), B, RepairMode::Functional) == Rat(2));
  CHECK(mrgrc::mbr_alpha_for(p, B, RepairMode::Functional) == Rat(2));

  // exact repair caps at B_E = 9 on the (2,2) profile; it needs beta = 8/3
  // at alpha = 2 and meets the MBR line only at alpha = beta = 20/9
  CHECK(mrgrc::exact_bound(p, mrgrc::ResourceProfile{Rat(2), Rat(2)}) == Rat(9));
  CHECK(*mrgrc::min_beta_for(p, Rat(2), B, RepairMode::Exact) == Rat(8, 3));
  CHECK(mrgrc::mbr_alpha_for(p, B, RepairMode::Exact) == Rat(20, 9));

  // below the MSR storage level no beta attains B at all
  CHECK_FALSE(mrgrc::min_beta_for(p, Rat(3, 2), B, RepairMode::Exact).has_value());
  CHECK(code_of([&] { mrgrc::tradeoff_curve(p, B, RepairMode::Exact, 5, Rat(3, 2)); }) ==
        mrgrc::Errc::Infeasible);
}

TEST_CASE("tradeoff curve endpoints and shape") {
  auto p = ref322();
  Rat B(10);
  for (auto mode : {RepairMode::Functional, RepairMode::Exact}) {
    auto pts = mrgrc::tradeoff_curve(p, B, mode, 9);
    REQUIRE(pts.size() >= 2);
    CHECK(pts.front().alpha == Rat(10, 6));  // MSR end: B / (m*k)
    CHECK(pts.front().storage_overhead == Rat(3, 2));
    for (size_t i = 1; i < pts.size(); ++i) {
      CHECK(pts[i].alpha > pts[i - 1].alpha);
      CHECK(pts[i].beta <= pts[i - 1].beta);
    }
    Rat end = mrgrc::mbr_alpha_for(p, B, mode);
    CHECK(pts.back().alpha == end);
    CHECK(pts.back().beta == end);  // t = d = 2: MBR line is beta = alpha
    CHECK(pts.back().ic_bandwidth_overhead == Rat(1));
  }
  CHECK(mrgrc::tradeoff_curve(p, B, RepairMode::Exact, 9).back().alpha == Rat(20, 9));
}

TEST_CASE("local-helper profile of the large reference system") {
  auto prof = mrgrc::local_help_profile(7, 4, 5, 17, 5, mrgrc::ResourceProfile{Rat(1), Rat(1)});
  REQUIRE(prof.entries.size() == 13);  // ell = 0 .. m-t = 12
  CHECK(prof.entries[0].b_functional == Rat(50));
  CHECK(prof.entries[1].b_functional == Rat(50));
  CHECK(prof.entries[2].b_functional == Rat(50));
  CHECK(prof.entries[3].b_functional == Rat(53));
  CHECK(prof.entries[3].ell == 3);
  CHECK(prof.plateau_predicate);
  CHECK(prof.predicted_plateau_max_ell == 2);   // m mod t
  CHECK(prof.evaluated_plateau_max_ell == 2);
  for (size_t i = 1; i < prof.entries.size(); ++i)
    CHECK(prof.entries[i].b_functional >= prof.entries[i - 1].b_functional);
}

TEST_CASE("t=1 profile strictly increases once alpha > (d-k+1)*beta") {
  auto prof = mrgrc::local_help_profile(6, 3, 4, 4, 1, mrgrc::ResourceProfile{Rat(3), Rat(1)});
  REQUIRE(prof.entries.size() == 4);
  for (size_t i = 1; i < prof.entries.size(); ++i)
    CHECK(prof.entries[i].b_functional > prof.entries[i - 1].b_functional);
  // with t = 1 the predicted plateau is the single point ell = 0
  CHECK(prof.plateau_predicate);
  CHECK(prof.predicted_plateau_max_ell == 0);
  CHECK(prof.evaluated_plateau_max_ell == 0);
}

TEST_CASE("randomized bound properties") {
  auto rng = mrgrc::Rng::stream(20260825, 0);
  int checked = 0;
  while (checked < 10000) {
    int n = 2 + (int)rng.below(7);
    int k = 1 + (int)rng.below(n - 1);
    int d = k + (int)rng.below(n - k);
    int m = 1 + (int)rng.below(9);
    int t = 1 + (int)rng.below(m);
    int ell = (int)rng.below(m - t + 1);
    auto p = mrgrc::validate(n, k, d, m, ell, t);
    Rat alpha(1 + (long long)rng.below(9), 1 + (long long)rng.below(3));
    Rat beta(1 + (long long)rng.below(9), 1 + (long long)rng.below(3));
    mrgrc::ResourceProfile r{alpha, beta};

    Rat bf = mrgrc::functional_bound(p, r);
    Rat be = mrgrc::exact_bound(p, r);
    CHECK(be <= bf);
    if ((m - ell) % t == 0) CHECK(be == bf);

    // monotone in alpha, beta, d, ell; homogeneous of degree one
    mrgrc::ResourceProfile up_a{alpha + Rat(1, 2), beta};
    mrgrc::ResourceProfile up_b{alpha, beta + Rat(1, 2)};
    CHECK(mrgrc::functional_bound(p, up_a) >= bf);
    CHECK(mrgrc::functional_bound(p, up_b) >= bf);
    CHECK(mrgrc::exact_bound(p, up_a) >= be);
    CHECK(mrgrc::exact_bound(p, up_b) >= be);
    if (d + 1 <= n - 1) {
      auto pd = mrgrc::validate(n, k, d + 1, m, ell, t);
      CHECK(mrgrc::functional_bound(pd, r) >= bf);
      CHECK(mrgrc::exact_bound(pd, r) >= be);
    }
    if (ell + 1 <= m - t) {
      auto pl = mrgrc::validate(n, k, d, m, ell + 1, t);
      CHECK(mrgrc::functional_bound(pl, r) >= bf);
    }
    mrgrc::ResourceProfile scaled{alpha * Rat(3), beta * Rat(3)};
    CHECK(mrgrc::functional_bound(p, scaled) == Rat(3) * bf);
    CHECK(mrgrc::exact_bound(p, scaled) == Rat(3) * be);
    ++checked;
  }
}

TEST_CASE("at MBR with b = 0 the bound does not depend on the batch size") {
  // hold alpha fixed, set beta = t*alpha/d, and compare across t | (m - ell)
  for (int m : {4, 6, 12}) {
    auto base = mrgrc::validate(8, 3, 5, m, 0, 1);
    Rat alpha(5);
    Rat reference = mrgrc::functional_bound(base, mrgrc::ResourceProfile{alpha, alpha / Rat(5)});
    for (int t = 1; t <= m; ++t) {
      if (m % t != 0) continue;
      auto p = mrgrc::validate(8, 3, 5, m, 0, t);
      mrgrc::ResourceProfile r{alpha, Rat(t) * alpha / Rat(5)};
      CHECK(mrgrc::functional_bound(p, r) == reference);
      CHECK(mrgrc::exact_bound(p, r) == reference);
    }
  }
}
