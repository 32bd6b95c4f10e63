#include "mrgrc/params.hpp"

#include <string>

namespace mrgrc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPositive: return "NonPositive";
    case Errc::DOutOfRange: return "DOutOfRange";
    case Errc::EllTooLarge: return "EllTooLarge";
    case Errc::InvalidTrace: return "InvalidTrace";
    case Errc::InvalidEvent: return "InvalidEvent";
    case Errc::Overflow: return "Overflow";
    case Errc::Infeasible: return "Infeasible";
    case Errc::DegenerateInit: return "DegenerateInit";
    case Errc::CutInvalid: return "CutInvalid";
    case Errc::LemmaViolated: return "LemmaViolated";
    case Errc::ChainViolated: return "ChainViolated";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::EllTooLargeForT: return "EllTooLargeForT";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

SystemParams validate(int n, int k, int d, int m, int ell, int t) {
  auto positive = [](int v, const char* name) {
    if (v <= 0)
      throw Error(Errc::NonPositive, std::string(name) + " = " + std::to_string(v) +
                                         " violates " + name + " >= 1");
  };
  positive(n, "n");
  positive(k, "k");
  positive(d, "d");
  positive(m, "m");
  positive(t, "t");
  if (ell < 0)
    throw Error(Errc::NonPositive, "ell = " + std::to_string(ell) + " violates ell >= 0");

  // k <= n-1 is implied: with k = n, no d satisfies k <= d <= n-1.
  if (d < k)
    throw Error(Errc::DOutOfRange,
                "d = " + std::to_string(d) + " violates d >= k = " + std::to_string(k));
  if (d > n - 1)
    throw Error(Errc::DOutOfRange,
                "d = " + std::to_string(d) + " violates d <= n-1 = " + std::to_string(n - 1));
  if (ell > m - t)
    throw Error(Errc::EllTooLarge, "ell = " + std::to_string(ell) +
                                       " violates ell <= m-t = " + std::to_string(m - t));
  return SystemParams{n, k, d, m, ell, t};
}

ResourceProfile validate_profile(const Rat& alpha, const Rat& beta) {
  if (alpha <= Rat(0))
    throw Error(Errc::NonPositive, "alpha = " + alpha.str() + " violates alpha > 0");
  if (beta <= Rat(0))
    throw Error(Errc::NonPositive, "beta = " + beta.str() + " violates beta > 0");
  return ResourceProfile{alpha, beta};
}

long long ResourceProfile::require_integer_alpha() const {
  if (!alpha.is_integer() || alpha.num() < 1)
    throw Error(Errc::BadInput, "alpha = " + alpha.str() + " must be a positive integer here");
  return alpha.num();
}

long long ResourceProfile::require_integer_beta() const {
  if (!beta.is_integer() || beta.num() < 1)
    throw Error(Errc::BadInput, "beta = " + beta.str() + " must be a positive integer here");
  return beta.num();
}

Decomposition decompose(const SystemParams& p) {
  long long rem = p.m - p.ell;  // >= t by validation
  return Decomposition{rem / p.t, rem % p.t};
}

}  // namespace mrgrc
