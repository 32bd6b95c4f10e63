#pragma once

#include <optional>
#include <vector>

#include "mrgrc/params.hpp"

namespace mrgrc {

enum class RepairMode { Functional, Exact };

/// Optimal file size under functional repair,
///   B_F = l*k*alpha + a * sum_{i=0}^{k-1} min(t*alpha, (d-i)*beta)
///                   +     sum_{i=0}^{k-1} min(b*alpha, (d-i)*beta),
/// with m-l = a*t + b. Exact rational arithmetic throughout.
Rat functional_bound(const SystemParams& p, const ResourceProfile& r);

/// File-size upper bound under exact repair,
///   B_E = l*k*alpha + (m-l) * sum_{i=0}^{k-1} min(alpha, (d-i)*beta/t).
/// Always B_E <= B_F; equality holds iff b = 0 (or the min terms saturate).
Rat exact_bound(const SystemParams& p, const ResourceProfile& r);

Rat bound(const SystemParams& p, const ResourceProfile& r, RepairMode mode);

/// Profile at the minimum inter-cluster bandwidth point: alpha = d*beta/t.
/// With require_integral, throws Infeasible if d*beta/t is not an integer.
ResourceProfile mbr_profile(const SystemParams& p, const Rat& beta,
                            bool require_integral = false);

/// True iff B = m*k*alpha, the minimum-storage operating point.
bool msr_check(const SystemParams& p, const ResourceProfile& r, const Rat& B);

/// One point of the storage-vs-bandwidth trade-off at file size B.
struct TradeoffPoint {
  Rat alpha;
  Rat beta;
  Rat storage_overhead;        // m*n*alpha / B
  Rat ic_bandwidth_overhead;   // d*beta / (t*alpha)
};

/// Minimal beta such that bound(alpha, beta) >= B, solved exactly on the
/// piecewise-linear bound. nullopt when even beta -> infinity cannot reach B
/// (i.e. m*k*alpha < B).
std::optional<Rat> min_beta_for(const SystemParams& p, const Rat& alpha, const Rat& B,
                                RepairMode mode);

/// Alpha of the point where the curve meets the MBR line t*alpha = d*beta.
Rat mbr_alpha_for(const SystemParams& p, const Rat& B, RepairMode mode);

/// Pareto-filtered trade-off curve: `grid` alpha samples from the MSR end
/// alpha = B/(m*k) to the MBR solution (or alpha_max when given). Throws
/// Infeasible if no beta attains B at the largest sampled alpha.
std::vector<TradeoffPoint> tradeoff_curve(const SystemParams& p, const Rat& B,
                                          RepairMode mode, int grid,
                                          std::optional<Rat> alpha_max = std::nullopt);

struct EllProfileEntry {
  int ell;
  Rat b_functional;
};

/// Functional bound as a function of the local helper count.
struct EllProfile {
  std::vector<EllProfileEntry> entries;   // ell = 0 .. m-t
  bool plateau_predicate;                 // (m mod t) <= floor((d-k+1)t/d)
  int predicted_plateau_max_ell;          // m mod t
  int evaluated_plateau_max_ell;          // largest ell with B(ell) == B(0)
};

/// Evaluates the functional bound for every ell in [0, m-t] (t <= m required)
/// and reports the MBR plateau predicate alongside. The predicate is reported,
/// never substituted for the direct evaluation.
EllProfile local_help_profile(int n, int k, int d, int m, int t, const ResourceProfile& r);

/// Divisibility case split of the bounds.
struct ClassifyReport {
  bool divisible;      // t | (m - l)
  Rat b_functional;
  Rat b_exact;
  bool at_mbr;         // t*alpha == d*beta
  bool bounds_equal;   // b_functional == b_exact
  bool strict_gap;     // b_functional > b_exact
};

ClassifyReport classify(const SystemParams& p, const ResourceProfile& r);

}  // namespace mrgrc
