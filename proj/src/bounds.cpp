#include "mrgrc/bounds.hpp"

#include <algorithm>

namespace mrgrc {

Rat functional_bound(const SystemParams& p, const ResourceProfile& r) {
  auto [a, b] = decompose(p);
  Rat total = Rat(static_cast<long long>(p.ell) * p.k) * r.alpha;
  for (int i = 0; i < p.k; ++i) {
    Rat helper = Rat(p.d - i) * r.beta;
    total += Rat(a) * Rat::min(Rat(p.t) * r.alpha, helper);
    total += Rat::min(Rat(b) * r.alpha, helper);
  }
  return total;
}

Rat exact_bound(const SystemParams& p, const ResourceProfile& r) {
  Rat total = Rat(static_cast<long long>(p.ell) * p.k) * r.alpha;
  Rat per_node(0);
  for (int i = 0; i < p.k; ++i)
    per_node += Rat::min(r.alpha, Rat(p.d - i) * r.beta / Rat(p.t));
  return total + Rat(p.m - p.ell) * per_node;
}

Rat bound(const SystemParams& p, const ResourceProfile& r, RepairMode mode) {
  return mode == RepairMode::Functional ? functional_bound(p, r) : exact_bound(p, r);
}

ResourceProfile mbr_profile(const SystemParams& p, const Rat& beta, bool require_integral) {
  Rat alpha = Rat(p.d) * beta / Rat(p.t);
  if (require_integral && !alpha.is_integer())
    throw Error(Errc::Infeasible,
                "MBR alpha = d*beta/t = " + alpha.str() + " is not an integer");
  return validate_profile(alpha, beta);
}

bool msr_check(const SystemParams& p, const ResourceProfile& r, const Rat& B) {
  return B == Rat(static_cast<long long>(p.m) * p.k) * r.alpha;
}

std::optional<Rat> min_beta_for(const SystemParams& p, const Rat& alpha, const Rat& B,
                                RepairMode mode) {
  ResourceProfile probe{alpha, Rat(1)};
  auto eval = [&](const Rat& beta) {
    probe.beta = beta;
    return bound(p, probe, mode);
  };

  // Saturation value as beta -> infinity is m*k*alpha for both bounds.
  if (Rat(static_cast<long long>(p.m) * p.k) * alpha < B) return std::nullopt;

  // Breakpoints where some min(...) term switches branch.
  auto [a, b] = decompose(p);
  (void)a;
  std::vector<Rat> bps;
  for (int i = 0; i < p.k; ++i) {
    Rat di(p.d - i);
    bps.push_back(Rat(p.t) * alpha / di);  // same switch point in both modes
    if (mode == RepairMode::Functional && b > 0) bps.push_back(Rat(b) * alpha / di);
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  Rat lo(0);
  Rat f_lo = eval(Rat(0));
  if (f_lo >= B) return Rat(0);
  for (const Rat& hi : bps) {
    Rat f_hi = eval(hi);
    if (f_hi >= B) {
      // Linear on [lo, hi]; solve f_lo + s*(beta - lo) = B.
      Rat s = (f_hi - f_lo) / (hi - lo);
      return lo + (B - f_lo) / s;
    }
    lo = hi;
    f_lo = f_hi;
  }
  return std::nullopt;  // unreachable: saturation check above covers this
}

Rat mbr_alpha_for(const SystemParams& p, const Rat& B, RepairMode mode) {
  // On the MBR line beta = t*alpha/d both bounds are linear in alpha:
  // bound(alpha, t*alpha/d) = c * alpha with c = bound(1, t/d).
  ResourceProfile unit{Rat(1), Rat(p.t, p.d)};
  Rat c = bound(p, unit, mode);
  return B / c;
}

static std::vector<TradeoffPoint> tradeoffs_at(const SystemParams& p, const Rat& B,
                                               RepairMode mode, const std::vector<Rat>& alphas) {
  std::vector<TradeoffPoint> pts;
  for (const Rat& alpha : alphas) {
    auto beta = min_beta_for(p, alpha, B, mode);
    if (!beta) continue;
    Rat so = Rat(static_cast<long long>(p.m) * p.n) * alpha / B;
    Rat bw = Rat(p.d) * *beta / (Rat(p.t) * alpha);
    pts.push_back(TradeoffPoint{alpha, *beta, so, bw});
  }
  return pts;
}

std::vector<TradeoffPoint> tradeoff_curve(const SystemParams& p, const Rat& B, RepairMode mode,
                                          int grid, std::optional<Rat> alpha_max) {
  if (B <= Rat(0)) throw Error(Errc::BadInput, "B must be positive");
  if (grid < 1) throw Error(Errc::BadInput, "grid must be >= 1");
  Rat a_msr = B / Rat(static_cast<long long>(p.m) * p.k);
  Rat a_end = alpha_max ? *alpha_max : mbr_alpha_for(p, B, mode);
  if (!min_beta_for(p, a_end, B, mode))
    throw Error(Errc::Infeasible, "no beta attains B = " + B.str() +
                                      " at alpha = " + a_end.str() + " (m*k*alpha < B)");
  std::vector<Rat> alphas;
  if (grid == 1 || a_end == a_msr) {
    alphas.push_back(a_msr);
  } else {
    for (int j = 0; j < grid; ++j)
      alphas.push_back(a_msr + (a_end - a_msr) * Rat(j, grid - 1));
  }
  auto pts = tradeoffs_at(p, B, mode, alphas);

  // Pareto filter: alpha ascending, keep only strictly decreasing beta.
  std::vector<TradeoffPoint> pareto;
  for (const auto& pt : pts) {
    if (!pareto.empty() && pt.beta >= pareto.back().beta) continue;
    if (!pareto.empty() && pt.alpha == pareto.back().alpha) continue;
    pareto.push_back(pt);
  }
  return pareto;
}

EllProfile local_help_profile(int n, int k, int d, int m, int t, const ResourceProfile& r) {
  EllProfile out;
  for (int ell = 0; ell + t <= m; ++ell) {
    SystemParams p = validate(n, k, d, m, ell, t);
    out.entries.push_back(EllProfileEntry{ell, functional_bound(p, r)});
  }
  int rem = m % t;
  out.predicted_plateau_max_ell = rem;
  out.plateau_predicate =
      rem <= static_cast<long long>(d - k + 1) * t / d;  // floor by integer division
  out.evaluated_plateau_max_ell = 0;
  for (const auto& e : out.entries) {
    if (e.b_functional == out.entries.front().b_functional)
      out.evaluated_plateau_max_ell = e.ell;
    else
      break;
  }
  return out;
}

ClassifyReport classify(const SystemParams& p, const ResourceProfile& r) {
  ClassifyReport rep;
  rep.divisible = (p.m - p.ell) % p.t == 0;
  rep.b_functional = functional_bound(p, r);
  rep.b_exact = exact_bound(p, r);
  rep.at_mbr = Rat(p.t) * r.alpha == Rat(p.d) * r.beta;
  rep.bounds_equal = rep.b_functional == rep.b_exact;
  rep.strict_gap = rep.b_functional > rep.b_exact;
  return rep;
}

}  // namespace mrgrc
