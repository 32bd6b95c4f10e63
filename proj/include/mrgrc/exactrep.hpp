#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mrgrc/matrix.hpp"
#include "mrgrc/params.hpp"
#include "mrgrc/rational.hpp"
#include "mrgrc/trace.hpp"

namespace mrgrc {

// One helper cluster's contribution to a repair: `comb` has at most beta rows,
// each row a combination over the helper's m*alpha stored rows (node 1's rows
// first). Keeping coefficients instead of raw symbols makes "the helper only
// sends functions of its own content" true by construction.
struct HelperResponse {
  int helper = 0;
  SymbolMatrix comb;  // rows x (m*alpha)
};

using RepairOracle = std::function<std::vector<HelperResponse>(const RepairEvent&)>;

// Explicit response tables for externally supplied codes.
struct OracleTable {
  std::map<std::string, std::vector<HelperResponse>> entries;
};

std::string query_key(const RepairEvent& e);

// How a code's repair procedure is defined, for (de)serialization.
struct OracleDescriptor {
  std::string type;  // "stacked-mbr" | "lifted-stacked-mbr" | "external"
  int lift_t = 1;    // lifted-*: batch size of the lifted code
  long long beta_prime = 0;  // per-helper bandwidth of the underlying t=1 code
  std::shared_ptr<OracleTable> table;  // external only
};

// A concrete linear code: node (i,j) holds the alpha x B generator G_{i,j};
// the oracle answers repair queries with per-helper combinations.
struct LinearMrgrc {
  SystemParams params;
  long long alpha = 0;
  long long beta = 0;
  long long B = 0;
  const Field* field = nullptr;
  std::vector<std::vector<SymbolMatrix>> nodes;  // [cluster-1][node-1]
  RepairOracle oracle;
  OracleDescriptor desc;

  ResourceProfile profile() const { return ResourceProfile{Rat(alpha), Rat(beta)}; }
};

// Entropy of linear-symbol sets = rank of their stacked coefficient rows,
// in units of log q.
long long entropy(const LinearMrgrc& c, const SymbolMatrix& a);
long long entropy(const LinearMrgrc& c, const SymbolMatrix& a, const SymbolMatrix& given);

SymbolMatrix cluster_matrix(const LinearMrgrc& c, int i);
SymbolMatrix clusters_matrix(const LinearMrgrc& c, const std::vector<int>& is);
SymbolMatrix nodes_matrix(const LinearMrgrc& c, int i, const std::vector<int>& js);

// Materialize oracle responses as coefficient rows over the B message symbols.
SymbolMatrix response_matrix(const LinearMrgrc& c, const std::vector<HelperResponse>& rs);

struct VerificationIssue {
  std::string kind;  // DataCollection | RowBudgetExceeded | BadShape | HelperMismatch | Reconstruction | OracleError
  std::string detail;
};

struct VerificationReport {
  int collection_checks = 0;
  int repair_checks = 0;
  std::vector<VerificationIssue> issues;
  bool ok() const { return issues.empty(); }
};

struct QueryPolicy {
  // Default: every t-subset of [1,m] per cluster with one canonical helper and
  // local set. Exhaustive additionally sweeps all C(n-1,d) helper sets and all
  // C(m-t,ell) local sets; only sensible on tiny instances.
  bool exhaustive = false;
};

VerificationReport verify_code(const LinearMrgrc& c, const QueryPolicy& policy = {});

// Greedy construction of the repair-aware chain-rule ordering plus the
// verified per-position inequalities.
struct Lemma1Selection {
  int j = 0;            // chosen node
  std::vector<int> V;   // companion set, |V| = t-1
  long long theta = 0;  // H(Y_{i',j} | V, Y(S), Y_{i',[1:l]})
};

struct Lemma1Check {
  int position = 0;  // j' in [m-b+1, m]
  long long lhs = 0;
  Rat rhs;  // min(alpha, (d-|S|) beta / t)
};

struct PermutationCertificate {
  int i_prime = 0;
  std::vector<int> S;       // conditioning clusters
  std::vector<int> sigma;   // sigma[p-(l+1)] = node placed at position p
  std::vector<Lemma1Selection> selected;  // in selection order: positions m, m-1, ...
  std::vector<Lemma1Check> checks;
};

// Requires b >= 1 (with m-l = a t + b), |S| <= k-1, i' not in S. Throws
// LemmaViolated if a verified inequality fails on this code.
PermutationCertificate lemma1_permutation(const LinearMrgrc& c, int i_prime,
                                          const std::vector<int>& S);

// Numeric walk of the file-size bound chain: B <= sum of per-cluster
// conditional entropies, each expanded in the certificate order and bounded
// by a min(t alpha, . beta) + b min(alpha, . beta / t) terms, aggregating to
// B <= exact_bound. Throws ChainViolated naming the first failing inequality.
struct ChainStep {
  std::string label;
  Rat lhs;
  Rat rhs;
  bool ok = false;
};

struct ChainReport {
  long long B = 0;
  Rat b_exact;
  std::vector<ChainStep> steps;
  bool tight = false;  // B == exact bound
};

ChainReport verify_exact_bound(const LinearMrgrc& c);

// m independent classical product-matrix codes at the classical MBR point
// (alpha = d, beta' = 1, B0 = kd - k(k-1)/2 each), distributed so node j of
// cluster i holds code j's share for helper index i. Repairs one node at a
// time (t = 1) with no local help (l = 0). Requires n <= field order.
LinearMrgrc stacked_mbr_base(int n, int k, int d, int m, const Field& f);

// Batch-repair code from a t=1 base: same generators, beta = t * beta', each
// failed node repaired by its own base query against the shared helper set,
// responses concatenated per helper. Throws EllTooLargeForT if l > m - t.
LinearMrgrc lift(const LinearMrgrc& base, int t_target);

}  // namespace mrgrc
