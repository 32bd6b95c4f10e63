#include "mrgrc/exactrep.hpp"

#include <algorithm>

#include "mrgrc/bounds.hpp"
#include "mrgrc/combin.hpp"
#include "mrgrc/errors.hpp"

namespace mrgrc {

std::string query_key(const RepairEvent& e) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  return "c=" + std::to_string(e.cluster) + ";R=" + join(e.failed) + ";H=" + join(e.helpers) +
         ";L=" + join(e.locals);
}

long long entropy(const LinearMrgrc& c, const SymbolMatrix& a) {
  return rank(a, *c.field);
}

long long entropy(const LinearMrgrc& c, const SymbolMatrix& a, const SymbolMatrix& given) {
  return rank(stack(given, a), *c.field) - rank(given, *c.field);
}

SymbolMatrix cluster_matrix(const LinearMrgrc& c, int i) {
  SymbolMatrix out(0, static_cast<int>(c.B));
  for (int j = 0; j < c.params.m; ++j) out.append_rows(c.nodes[i - 1][j]);
  return out;
}

SymbolMatrix clusters_matrix(const LinearMrgrc& c, const std::vector<int>& is) {
  SymbolMatrix out(0, static_cast<int>(c.B));
  for (int i : is) out.append_rows(cluster_matrix(c, i));
  return out;
}

SymbolMatrix nodes_matrix(const LinearMrgrc& c, int i, const std::vector<int>& js) {
  SymbolMatrix out(0, static_cast<int>(c.B));
  for (int j : js) out.append_rows(c.nodes[i - 1][j - 1]);
  return out;
}

SymbolMatrix response_matrix(const LinearMrgrc& c, const std::vector<HelperResponse>& rs) {
  SymbolMatrix out(0, static_cast<int>(c.B));
  for (const auto& r : rs) out.append_rows(matmul(r.comb, cluster_matrix(c, r.helper), *c.field));
  return out;
}

static std::vector<int> canonical_helpers(const SystemParams& p, int cluster) {
  std::vector<int> h;
  for (int c = 1; c <= p.n && static_cast<int>(h.size()) < p.d; ++c)
    if (c != cluster) h.push_back(c);
  return h;
}

static std::vector<int> canonical_locals(const SystemParams& p, const std::vector<int>& failed) {
  std::vector<int> l;
  for (int j = 1; j <= p.m && static_cast<int>(l.size()) < p.ell; ++j)
    if (!std::binary_search(failed.begin(), failed.end(), j)) l.push_back(j);
  return l;
}

static void verify_one_repair(const LinearMrgrc& c, const RepairEvent& e,
                              VerificationReport& rep) {
  ++rep.repair_checks;
  std::vector<HelperResponse> rs;
  try {
    rs = c.oracle(e);
  } catch (const Error& err) {
    rep.issues.push_back({"OracleError", query_key(e) + ": " + err.what()});
    return;
  }

  std::vector<int> seen;
  for (const auto& r : rs) seen.push_back(r.helper);
  std::sort(seen.begin(), seen.end());
  if (seen != e.helpers) {
    rep.issues.push_back({"HelperMismatch", query_key(e) + ": responses do not cover H exactly"});
    return;
  }

  bool shapes_ok = true;
  for (const auto& r : rs) {
    if (r.comb.rows() > c.beta) {
      rep.issues.push_back({"RowBudgetExceeded",
                            query_key(e) + ": helper " + std::to_string(r.helper) + " sent " +
                                std::to_string(r.comb.rows()) + " rows > beta = " +
                                std::to_string(c.beta)});
      shapes_ok = false;
    }
    if (r.comb.cols() != c.params.m * c.alpha) {
      rep.issues.push_back({"BadShape", query_key(e) + ": helper " + std::to_string(r.helper) +
                                            " combination width != m*alpha"});
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return;

  SymbolMatrix pool = nodes_matrix(c, e.cluster, e.locals);
  pool.append_rows(response_matrix(c, rs));
  SymbolMatrix lost = nodes_matrix(c, e.cluster, e.failed);
  if (!in_rowspace(lost, pool, *c.field))
    rep.issues.push_back(
        {"Reconstruction", query_key(e) + ": failed nodes not recoverable from locals + helpers"});
}

VerificationReport verify_code(const LinearMrgrc& c, const QueryPolicy& policy) {
  VerificationReport rep;
  const SystemParams& p = c.params;

  for (const auto& cs : combinations(range1(p.n), p.k)) {
    ++rep.collection_checks;
    long long r = rank(clusters_matrix(c, cs), *c.field);
    if (r != c.B) {
      std::string who;
      for (int i : cs) who += std::to_string(i) + " ";
      rep.issues.push_back({"DataCollection", "clusters { " + who + "} reach rank " +
                                                  std::to_string(r) + " < B = " +
                                                  std::to_string(c.B)});
    }
  }

  for (int i = 1; i <= p.n; ++i) {
    std::vector<int> others;
    for (int x = 1; x <= p.n; ++x)
      if (x != i) others.push_back(x);
    for (const auto& failed : combinations(range1(p.m), p.t)) {
      std::vector<int> survivors;
      for (int j = 1; j <= p.m; ++j)
        if (!std::binary_search(failed.begin(), failed.end(), j)) survivors.push_back(j);
      if (policy.exhaustive) {
        for (const auto& h : combinations(others, p.d))
          for (const auto& l : combinations(survivors, p.ell))
            verify_one_repair(c, RepairEvent{i, failed, h, l}, rep);
      } else {
        verify_one_repair(
            c, RepairEvent{i, failed, canonical_helpers(p, i), canonical_locals(p, failed)}, rep);
      }
    }
  }
  return rep;
}

PermutationCertificate lemma1_permutation(const LinearMrgrc& c, int i_prime,
                                          const std::vector<int>& S) {
  const SystemParams& p = c.params;
  Decomposition dec = decompose(p);
  if (dec.b < 1)
    throw Error(Errc::BadInput, "ordering lemma applies only when t does not divide m - l");
  if (static_cast<int>(S.size()) > p.k - 1)
    throw Error(Errc::BadInput, "|S| must be at most k - 1");
  if (i_prime < 1 || i_prime > p.n) throw Error(Errc::BadInput, "i' out of range");
  for (int s : S) {
    if (s < 1 || s > p.n) throw Error(Errc::BadInput, "S member out of range");
    if (s == i_prime) throw Error(Errc::BadInput, "i' must not belong to S");
  }

  PermutationCertificate cert;
  cert.i_prime = i_prime;
  cert.S = S;

  SymbolMatrix base = clusters_matrix(c, S);
  base.append_rows(nodes_matrix(c, i_prime, range1(p.ell)));  // Y_{i',[1:l]}

  std::vector<int> pool;  // U, the not-yet-chosen nodes of cluster i'
  for (int j = p.ell + 1; j <= p.m; ++j) pool.push_back(j);

  for (long long x = 0; x < dec.b; ++x) {
    bool have = false;
    Lemma1Selection best;
    for (int j : pool) {
      std::vector<int> rest;
      for (int u : pool)
        if (u != j) rest.push_back(u);
      for (const auto& V : combinations(rest, p.t - 1)) {
        SymbolMatrix given = base;
        given.append_rows(nodes_matrix(c, i_prime, V));
        long long theta = entropy(c, nodes_matrix(c, i_prime, {j}), given);
        // Lexicographically first (j, V) wins ties: iteration order is lex.
        if (!have || theta < best.theta) {
          have = true;
          best = Lemma1Selection{j, V, theta};
        }
      }
    }
    cert.selected.push_back(best);
    pool.erase(std::find(pool.begin(), pool.end(), best.j));
  }

  // Positions l+1 .. m-b get the leftovers in ascending order; position m-x
  // gets the x-th selection.
  cert.sigma.assign(p.m - p.ell, 0);
  for (size_t idx = 0; idx < pool.size(); ++idx) cert.sigma[idx] = pool[idx];
  for (long long x = 0; x < dec.b; ++x)
    cert.sigma[(p.m - x) - (p.ell + 1)] = cert.selected[static_cast<size_t>(x)].j;

  // Verify the claimed inequalities for the tail positions.
  Rat rhs = Rat::min(Rat(c.alpha),
                     Rat(p.d - static_cast<long long>(S.size())) * Rat(c.beta) / Rat(p.t));
  for (int pos = p.m - static_cast<int>(dec.b) + 1; pos <= p.m; ++pos) {
    SymbolMatrix given = clusters_matrix(c, S);
    given.append_rows(nodes_matrix(c, i_prime, range1(p.ell)));
    for (int q = p.ell + 1; q < pos; ++q)
      given.append_rows(nodes_matrix(c, i_prime, {cert.sigma[q - (p.ell + 1)]}));
    long long lhs =
        entropy(c, nodes_matrix(c, i_prime, {cert.sigma[pos - (p.ell + 1)]}), given);
    cert.checks.push_back(Lemma1Check{pos, lhs, rhs});
    if (Rat(lhs) > rhs)
      throw Error(Errc::LemmaViolated,
                  "position " + std::to_string(pos) + ": H = " + std::to_string(lhs) + " > " +
                      rhs.str() + " (not an exact-repair code?)");
  }
  return cert;
}

ChainReport verify_exact_bound(const LinearMrgrc& c) {
  const SystemParams& p = c.params;
  Decomposition dec = decompose(p);
  ChainReport rep;
  rep.B = c.B;
  rep.b_exact = exact_bound(p, c.profile());

  auto push = [&rep](const std::string& label, Rat lhs, Rat rhs) {
    rep.steps.push_back(ChainStep{label, lhs, rhs, lhs <= rhs});
  };

  push("B <= H(clusters 1..k)", Rat(c.B), Rat(rank(clusters_matrix(c, range1(p.k)), *c.field)));

  for (int ip = 1; ip <= p.k; ++ip) {
    std::vector<int> S = range1(ip - 1);
    std::string tag = "cluster " + std::to_string(ip);
    Rat cap_group = Rat::min(Rat(static_cast<long long>(p.t) * c.alpha),
                             Rat(p.d - ip + 1) * Rat(c.beta));
    Rat cap_node = Rat::min(Rat(c.alpha), Rat(p.d - ip + 1) * Rat(c.beta) / Rat(p.t));

    SymbolMatrix prev = clusters_matrix(c, S);
    long long term = entropy(c, cluster_matrix(c, ip), prev);

    SymbolMatrix locals = nodes_matrix(c, ip, range1(p.ell));
    long long head = entropy(c, locals, prev);
    push(tag + ": local part <= l*alpha", Rat(head), Rat(static_cast<long long>(p.ell) * c.alpha));

    SymbolMatrix prev_loc = stack(prev, locals);
    std::vector<int> rest;
    for (int j = p.ell + 1; j <= p.m; ++j) rest.push_back(j);
    long long tail = entropy(c, nodes_matrix(c, ip, rest), prev_loc);

    std::vector<int> sigma;  // sigma[pos-(l+1)] = node at position pos
    if (dec.b >= 1) {
      sigma = lemma1_permutation(c, ip, S).sigma;
    } else {
      sigma = rest;
    }

    Rat rhs8(0);
    for (long long u = 0; u < dec.a; ++u) {
      std::vector<int> group;
      for (int v = 1; v <= p.t; ++v)
        group.push_back(sigma[static_cast<size_t>(u * p.t + v - 1)]);
      long long g = entropy(c, nodes_matrix(c, ip, group), prev_loc);
      push(tag + " group " + std::to_string(u + 1) + " <= min(t*alpha,(d-i+1)*beta)", Rat(g),
           cap_group);
      rhs8 = rhs8 + Rat(g);
    }
    for (int pos = p.m - static_cast<int>(dec.b) + 1; pos <= p.m; ++pos) {
      SymbolMatrix given = stack(prev, nodes_matrix(c, ip, range1(p.ell)));
      for (int q = p.ell + 1; q < pos; ++q)
        given.append_rows(nodes_matrix(c, ip, {sigma[q - (p.ell + 1)]}));
      long long r = entropy(c, nodes_matrix(c, ip, {sigma[pos - (p.ell + 1)]}), given);
      push(tag + " tail position " + std::to_string(pos) + " <= min(alpha,(d-i+1)*beta/t)", Rat(r),
           cap_node);
      rhs8 = rhs8 + Rat(r);
    }
    push(tag + ": split along the ordering", Rat(tail), rhs8);
    push(tag + ": total <= l*alpha + (m-l)*min(alpha,(d-i+1)*beta/t)", Rat(term),
         Rat(static_cast<long long>(p.ell) * c.alpha) + Rat(p.m - p.ell) * cap_node);
  }

  push("B <= exact bound", Rat(c.B), rep.b_exact);
  rep.tight = Rat(c.B) == rep.b_exact;

  for (const auto& s : rep.steps)
    if (!s.ok)
      throw Error(Errc::ChainViolated, s.label + ": " + s.lhs.str() + " > " + s.rhs.str());
  return rep;
}

// ---- stacked classical construction -----------------------------------------

// Index of message symbol M[p][q] of one constituent code, or -1 in the zero
// block. The message matrix is [[S_sym, T],[T^t, 0]] with S k x k symmetric
// and T k x (d-k): B0 = k(k+1)/2 + k(d-k) = kd - k(k-1)/2 symbols.
static long long message_index(int p, int q, int k, int d) {
  if (p > q) std::swap(p, q);  // M is symmetric by construction
  if (q < k) return static_cast<long long>(p) * k - static_cast<long long>(p) * (p - 1) / 2 +
                    (q - p);
  long long s_count = static_cast<long long>(k) * (k + 1) / 2;
  if (p < k) return s_count + static_cast<long long>(p) * (d - k) + (q - k);
  return -1;
}

LinearMrgrc stacked_mbr_base(int n, int k, int d, int m, const Field& f) {
  SystemParams p = validate(n, k, d, m, /*ell=*/0, /*t=*/1);
  if (static_cast<uint32_t>(n) > f.order())
    throw Error(Errc::BadInput, "need n distinct evaluation points; field too small");

  int alpha = d;
  long long B0 = static_cast<long long>(k) * d - static_cast<long long>(k) * (k - 1) / 2;
  long long B = B0 * m;

  // Vandermonde rows psi_i = (1, x_i, ..., x_i^{d-1}), x_i = i - 1.
  std::vector<std::vector<uint32_t>> psi(n + 1, std::vector<uint32_t>(d));
  for (int i = 1; i <= n; ++i)
    for (int c = 0; c < d; ++c) psi[i][c] = f.pow(static_cast<uint32_t>(i - 1), c);

  LinearMrgrc code;
  code.params = p;
  code.alpha = alpha;
  code.beta = 1;
  code.B = B;
  code.field = &f;
  code.nodes.assign(n, std::vector<SymbolMatrix>(m));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      // Node j of cluster i holds constituent code j's share psi_i^T M_j.
      SymbolMatrix g(alpha, static_cast<int>(B));
      for (int cidx = 0; cidx < d; ++cidx) {
        for (int pidx = 0; pidx < d; ++pidx) {
          long long idx = message_index(pidx, cidx, k, d);
          if (idx < 0) continue;
          int col = static_cast<int>((j - 1) * B0 + idx);
          g.set(cidx, col, f.add(g.at(cidx, col), psi[i][pidx]));
        }
      }
      code.nodes[i - 1][j - 1] = g;
    }
  }

  SystemParams pc = p;
  const Field* fp = &f;
  code.oracle = [pc, psi, alpha, fp](const RepairEvent& e) {
    check_event(pc, e, Errc::InvalidEvent);
    int i = e.cluster, j = e.failed[0];
    std::vector<HelperResponse> out;
    for (int h : e.helpers) {
      // Helper h's repair symbol psi_h^T M_j psi_i is the psi_i-combination
      // of its own node-j rows.
      SymbolMatrix comb(1, pc.m * alpha);
      for (int c = 0; c < alpha; ++c) comb.set(0, (j - 1) * alpha + c, psi[i][c]);
      out.push_back(HelperResponse{h, comb});
    }
    return out;
  };
  code.desc = OracleDescriptor{"stacked-mbr", 1, 1, nullptr};
  return code;
}

LinearMrgrc lift(const LinearMrgrc& base, int t_target) {
  if (base.params.t != 1)
    throw Error(Errc::BadInput, "lift expects a base code that repairs one node per batch");
  if (t_target < 1) throw Error(Errc::BadInput, "t must be >= 1");
  if (base.params.ell > base.params.m - t_target)
    throw Error(Errc::EllTooLargeForT,
                "l = " + std::to_string(base.params.ell) + " exceeds m - t = " +
                    std::to_string(base.params.m - t_target));

  LinearMrgrc out = base;
  out.params = validate(base.params.n, base.params.k, base.params.d, base.params.m,
                        base.params.ell, t_target);
  out.beta = base.beta * t_target;

  SystemParams np = out.params;
  RepairOracle base_oracle = base.oracle;
  out.oracle = [np, base_oracle](const RepairEvent& e) {
    check_event(np, e, Errc::InvalidEvent);
    std::vector<HelperResponse> acc;
    for (int h : e.helpers) acc.push_back(HelperResponse{h, SymbolMatrix()});
    for (int j : e.failed) {  // ascending: failed sets are kept sorted
      auto rs = base_oracle(RepairEvent{e.cluster, {j}, e.helpers, e.locals});
      for (const auto& r : rs)
        for (auto& a : acc)
          if (a.helper == r.helper) a.comb.append_rows(r.comb);
    }
    return acc;
  };
  out.desc.type = base.desc.type == "stacked-mbr" || base.desc.type == "lifted-stacked-mbr"
                      ? "lifted-stacked-mbr"
                      : "lifted-" + base.desc.type;
  out.desc.lift_t = t_target;
  out.desc.beta_prime = base.beta;
  out.desc.table = base.desc.table;
  return out;
}

}  // namespace mrgrc
