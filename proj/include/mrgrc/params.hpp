#pragma once

#include "mrgrc/errors.hpp"
#include "mrgrc/rational.hpp"

namespace mrgrc {

/// Parameters of a clustered storage system: n clusters of m nodes each,
/// data collection from any k clusters, batch repair of t nodes with help
/// from l local nodes and d remote clusters.
///
/// Construct through validate(); the constraints are
///   1 <= k <= n-1,  k <= d <= n-1,  1 <= t <= m,  0 <= l <= m-t.
struct SystemParams {
  int n = 0;
  int k = 0;
  int d = 0;
  int m = 0;
  int ell = 0;
  int t = 0;
};

/// Per-node storage alpha and per-helper-cluster repair bandwidth beta, in
/// field symbols. Rational values are accepted so the bound formulas can be
/// evaluated anywhere on the trade-off plane; graph and simulation code
/// requires integers (see require_integer_*).
struct ResourceProfile {
  Rat alpha;
  Rat beta;

  long long require_integer_alpha() const;
  long long require_integer_beta() const;
};

/// Quotient/remainder of the division m-l = a*t + b with a >= 1 and
/// 0 <= b <= t-1. Both bound formulas are stated in terms of (a, b).
struct Decomposition {
  long long a = 0;
  long long b = 0;
};

/// Checks the system-model constraints; throws Error naming the violated
/// inequality (codes NonPositive, DOutOfRange, EllTooLarge).
SystemParams validate(int n, int k, int d, int m, int ell, int t);

/// Checks alpha > 0 and beta > 0. Graph and simulation code additionally
/// requires integral values via require_integer_*.
ResourceProfile validate_profile(const Rat& alpha, const Rat& beta);

/// Unique (a, b) with m-l = a*t + b. Valid params guarantee a >= 1.
Decomposition decompose(const SystemParams& p);

}  // namespace mrgrc
