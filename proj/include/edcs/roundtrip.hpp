#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edcs/errors.hpp"
#include "edcs/graph.hpp"
#include "edcs/lp.hpp"
#include "edcs/rational.hpp"
#include "edcs/simplex.hpp"

namespace edcs {

struct ConversionResult {
  Assignment assignment;
  Rational objective;
};

namespace detail {

// Condition number violated by a vertex profile, or 0 if valid.
inline int vertex_violation(const VertexProfile& v, const Params& p) {
  if (region_side(v.region) != v.side || v.deg_h < 0 || v.deg_h > p.beta - 1)
    return -1;  // structural inconsistency, not one of the ten conditions
  if ((v.region == Region::NA || v.region == Region::LMinusA) && !v.in_m)
    return 1;
  if (v.deg_h == 0 && v.in_m) return 2;
  return 0;
}

// Condition number violated by an edge profile (endpoints assumed valid).
inline int edge_violation(const EdgeProfile& e, const Params& p) {
  if (e.in_h && (e.left.deg_h < 1 || e.right.deg_h < 1)) return 3;
  if ((e.in_m && !(e.left.in_m && e.right.in_m)) ||
      (e.in_mstar && !(e.left.in_mstar && e.right.in_mstar)))
    return 4;
  if (e.in_m && !e.in_h) return 5;
  if (!e.in_h && !e.in_mstar) return 6;
  int sum = e.left.deg_h + e.right.deg_h;
  if (e.in_h && sum > p.beta) return 7;
  if (!e.in_h && sum < p.beta_minus) return 8;
  if (e.in_h && e.left.region == Region::A &&
      e.right.region == Region::RMinusNA)
    return 9;
  if (e.in_m &&
      !((e.left.region == Region::A && e.right.region == Region::NA) ||
        (e.left.region == Region::LMinusA &&
         e.right.region == Region::RMinusNA)))
    return 10;
  return 0;
}

}  // namespace detail

// Claim-1 direction: classify every vertex and edge of the instance into a
// profile, scale the counts by 1/mu(h) = 1/|m|, and return the resulting
// feasible point together with its objective mu(g)/mu(h). Edges outside
// h union mstar are dropped first (removing them changes neither matching
// size nor the EDCS property).
inline ConversionResult instance_to_solution(const EdcsInstance& inst) {
  const Params& p = inst.params;
  require_valid(p);
  const BipartiteGraph& g = inst.g;
  if (inst.m.pairs.empty())
    throw ParameterError("instance_to_solution: mu(h) = 0, nothing to scale by");

  EdgeList kept = inst.h;
  kept.insert(kept.end(), inst.mstar.pairs.begin(), inst.mstar.pairs.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  auto [dl, dr] = h_degrees(g, inst.h);
  std::vector<char> in_a(static_cast<size_t>(g.n_left), 0);
  for (int u : inst.witness_a) in_a[static_cast<size_t>(u)] = 1;
  std::vector<char> in_na(static_cast<size_t>(g.n_right), 0);
  for (const auto& [l, r] : inst.h)
    if (in_a[static_cast<size_t>(l)]) in_na[static_cast<size_t>(r)] = 1;
  std::vector<char> ml(static_cast<size_t>(g.n_left), 0),
      mr(static_cast<size_t>(g.n_right), 0),
      sl(static_cast<size_t>(g.n_left), 0),
      sr(static_cast<size_t>(g.n_right), 0);
  for (const auto& [l, r] : inst.m.pairs) {
    ml[static_cast<size_t>(l)] = 1;
    mr[static_cast<size_t>(r)] = 1;
  }
  for (const auto& [l, r] : inst.mstar.pairs) {
    sl[static_cast<size_t>(l)] = 1;
    sr[static_cast<size_t>(r)] = 1;
  }

  auto left_profile = [&](int u) {
    return VertexProfile{Side::Left,
                         in_a[static_cast<size_t>(u)] ? Region::A
                                                      : Region::LMinusA,
                         dl[static_cast<size_t>(u)],
                         ml[static_cast<size_t>(u)] != 0,
                         sl[static_cast<size_t>(u)] != 0};
  };
  auto right_profile = [&](int v) {
    return VertexProfile{Side::Right,
                         in_na[static_cast<size_t>(v)] ? Region::NA
                                                       : Region::RMinusNA,
                         dr[static_cast<size_t>(v)],
                         mr[static_cast<size_t>(v)] != 0,
                         sr[static_cast<size_t>(v)] != 0};
  };

  LinearProgram lp = build_lp(p);
  std::vector<long> counts(static_cast<size_t>(lp.num_vars), 0);
  auto vp_index = [&](const VertexProfile& v) {
    auto it = std::lower_bound(lp.vertex_profiles.begin(),
                               lp.vertex_profiles.end(), v);
    if (it == lp.vertex_profiles.end() || !(*it == v)) return -1;
    return static_cast<int>(it - lp.vertex_profiles.begin());
  };

  for (int u = 0; u < g.n_left; ++u) {
    VertexProfile v = left_profile(u);
    if (v.deg_h == 0 && !v.in_m && !v.in_mstar) continue;  // isolated
    if (int c = detail::vertex_violation(v, p))
      throw ContractViolation("instance_to_solution: left vertex " +
                              std::to_string(u) + " violates condition " +
                              std::to_string(c) + " (" + v.label() + ")");
    ++counts[static_cast<size_t>(vp_index(v))];
  }
  for (int v0 = 0; v0 < g.n_right; ++v0) {
    VertexProfile v = right_profile(v0);
    if (v.deg_h == 0 && !v.in_m && !v.in_mstar) continue;
    if (int c = detail::vertex_violation(v, p))
      throw ContractViolation("instance_to_solution: right vertex " +
                              std::to_string(v0) + " violates condition " +
                              std::to_string(c) + " (" + v.label() + ")");
    ++counts[static_cast<size_t>(vp_index(v))];
  }

  std::set<Edge> hset(inst.h.begin(), inst.h.end());
  std::set<Edge> mset(inst.m.pairs.begin(), inst.m.pairs.end());
  std::set<Edge> msset(inst.mstar.pairs.begin(), inst.mstar.pairs.end());
  long mstar_kept = 0;
  for (const auto& e : kept) {
    EdgeProfile ep{left_profile(e.first), right_profile(e.second),
                   hset.count(e) > 0, mset.count(e) > 0, msset.count(e) > 0};
    if (ep.in_mstar) ++mstar_kept;
    if (int c = detail::edge_violation(ep, p))
      throw ContractViolation("instance_to_solution: edge (" +
                              std::to_string(e.first) + "," +
                              std::to_string(e.second) +
                              ") violates condition " + std::to_string(c) +
                              " (" + ep.label() + ")");
    auto it = std::lower_bound(lp.edge_profiles.begin(),
                               lp.edge_profiles.end(), ep);
    if (it == lp.edge_profiles.end() || !(*it == ep))
      throw ContractViolation("instance_to_solution: edge profile not in "
                              "enumeration: " + ep.label());
    ++counts[static_cast<size_t>(lp.num_vertex_vars +
                                 (it - lp.edge_profiles.begin()))];
  }

  ConversionResult out;
  Rational mu_h(inst.m.size());
  out.assignment.values.reserve(static_cast<size_t>(lp.num_vars));
  for (long c : counts)
    out.assignment.values.push_back(Rational(c) / mu_h);
  out.objective = Rational(mstar_kept) / mu_h;
  return out;
}

namespace detail {

struct RealizationFailure {};

// One realization attempt at a fixed integer scale. Throws
// RealizationFailure when simple-graph constraints cannot be met.
inline EdcsInstance realize(const LinearProgram& lp,
                            const std::vector<long>& nv,
                            const std::vector<long>& ne) {
  const Params& p = lp.params;
  // Vertex groups: contiguous index ranges per profile, per side.
  const int nvp = lp.num_vertex_vars;
  std::vector<std::vector<int>> group(static_cast<size_t>(nvp));
  int n_left = 0, n_right = 0;
  for (int i = 0; i < nvp; ++i) {
    const VertexProfile& v = lp.vertex_profiles[static_cast<size_t>(i)];
    int& counter = v.side == Side::Left ? n_left : n_right;
    for (long t = 0; t < nv[static_cast<size_t>(i)]; ++t)
      group[static_cast<size_t>(i)].push_back(counter++);
  }
  auto vp_index = [&](const VertexProfile& v) {
    auto it = std::lower_bound(lp.vertex_profiles.begin(),
                               lp.vertex_profiles.end(), v);
    return static_cast<int>(it - lp.vertex_profiles.begin());
  };

  // Per-vertex state, indexed by (side, vertex id).
  std::vector<int> rem_l(static_cast<size_t>(n_left), 0),
      rem_r(static_cast<size_t>(n_right), 0);
  std::vector<char> m_l(static_cast<size_t>(n_left), 0),
      m_r(static_cast<size_t>(n_right), 0),
      ms_l(static_cast<size_t>(n_left), 0),
      ms_r(static_cast<size_t>(n_right), 0);
  for (int i = 0; i < nvp; ++i) {
    const VertexProfile& v = lp.vertex_profiles[static_cast<size_t>(i)];
    for (int id : group[static_cast<size_t>(i)])
      (v.side == Side::Left ? rem_l : rem_r)[static_cast<size_t>(id)] =
          v.deg_h;
  }

  std::set<Edge> used;
  EdgeList h_edges, m_pairs, ms_pairs;
  auto add_edge = [&](int u, int v, const EdgeProfile& e) {
    if (!used.insert({u, v}).second) throw RealizationFailure{};
    if (e.in_h) {
      if (rem_l[static_cast<size_t>(u)] < 1 || rem_r[static_cast<size_t>(v)] < 1)
        throw RealizationFailure{};
      --rem_l[static_cast<size_t>(u)];
      --rem_r[static_cast<size_t>(v)];
      h_edges.emplace_back(u, v);
    }
    if (e.in_m) {
      m_l[static_cast<size_t>(u)] = m_r[static_cast<size_t>(v)] = 1;
      m_pairs.emplace_back(u, v);
    }
    if (e.in_mstar) {
      ms_l[static_cast<size_t>(u)] = ms_r[static_cast<size_t>(v)] = 1;
      ms_pairs.emplace_back(u, v);
    }
  };

  const auto& eps = lp.edge_profiles;
  // Phase 1: M* profiles; each vertex receives at most one M* edge, so
  // pairing by cursor cannot create duplicates.
  std::vector<size_t> cur(static_cast<size_t>(nvp), 0);
  for (size_t k = 0; k < eps.size(); ++k) {
    const EdgeProfile& e = eps[k];
    if (!e.in_mstar) continue;
    long cnt = ne[k];
    int li = vp_index(e.left), ri = vp_index(e.right);
    for (long t = 0; t < cnt; ++t) {
      auto pick = [&](int gi, const std::vector<char>& taken) {
        auto& c = cur[static_cast<size_t>(gi)];
        const auto& vs = group[static_cast<size_t>(gi)];
        while (c < vs.size() && taken[static_cast<size_t>(vs[c])]) ++c;
        if (c >= vs.size()) throw RealizationFailure{};
        return vs[c];
      };
      int u = pick(li, ms_l), v = pick(ri, ms_r);
      add_edge(u, v, e);
    }
  }

  // Phase 2: M \ M* profiles; pair m-unmatched vertices, rotating the
  // right-side choice past any pair already placed in phase 1.
  for (size_t k = 0; k < eps.size(); ++k) {
    const EdgeProfile& e = eps[k];
    if (!e.in_m || e.in_mstar) continue;
    long cnt = ne[k];
    int li = vp_index(e.left), ri = vp_index(e.right);
    if (cnt == 0) continue;
    std::vector<int> ls, rs;
    for (int id : group[static_cast<size_t>(li)])
      if (!m_l[static_cast<size_t>(id)]) ls.push_back(id);
    for (int id : group[static_cast<size_t>(ri)])
      if (!m_r[static_cast<size_t>(id)]) rs.push_back(id);
    size_t rpos = 0;
    for (long t = 0; t < cnt; ++t) {
      int u = -1;
      for (int id : ls)
        if (!m_l[static_cast<size_t>(id)]) { u = id; break; }
      if (u < 0) throw RealizationFailure{};
      int v = -1;
      for (size_t off = 0; off < rs.size(); ++off) {
        int cand = rs[(rpos + off) % rs.size()];
        if (m_r[static_cast<size_t>(cand)]) continue;
        if (used.count({u, cand})) continue;
        v = cand;
        rpos = (rpos + off + 1) % rs.size();
        break;
      }
      if (v < 0) throw RealizationFailure{};
      add_edge(u, v, e);
    }
  }

  // Phase 3: remaining H profiles; Havel-Hakimi-style greedy on the exact
  // residual degrees.
  for (size_t k = 0; k < eps.size(); ++k) {
    const EdgeProfile& e = eps[k];
    if (!e.in_h || e.in_m || e.in_mstar) continue;
    long cnt = ne[k];
    int li = vp_index(e.left), ri = vp_index(e.right);
    for (long t = 0; t < cnt; ++t) {
      int u = -1;
      for (int id : group[static_cast<size_t>(li)])
        if (rem_l[static_cast<size_t>(id)] > 0 &&
            (u < 0 ||
             rem_l[static_cast<size_t>(id)] > rem_l[static_cast<size_t>(u)]))
          u = id;
      if (u < 0) throw RealizationFailure{};
      int v = -1;
      for (int id : group[static_cast<size_t>(ri)]) {
        if (rem_r[static_cast<size_t>(id)] < 1) continue;
        if (used.count({u, id})) continue;
        if (v < 0 ||
            rem_r[static_cast<size_t>(id)] > rem_r[static_cast<size_t>(v)])
          v = id;
      }
      if (v < 0) throw RealizationFailure{};
      add_edge(u, v, e);
    }
  }

  for (int id = 0; id < n_left; ++id)
    if (rem_l[static_cast<size_t>(id)] != 0) throw RealizationFailure{};
  for (int id = 0; id < n_right; ++id)
    if (rem_r[static_cast<size_t>(id)] != 0) throw RealizationFailure{};

  EdcsInstance inst;
  inst.params = p;
  EdgeList all(used.begin(), used.end());
  inst.g = BipartiteGraph(n_left, n_right, std::move(all));
  std::sort(h_edges.begin(), h_edges.end());
  inst.h = std::move(h_edges);
  std::sort(m_pairs.begin(), m_pairs.end());
  std::sort(ms_pairs.begin(), ms_pairs.end());
  inst.m.pairs = std::move(m_pairs);
  inst.mstar.pairs = std::move(ms_pairs);
  for (int i = 0; i < nvp; ++i) {
    const VertexProfile& v = lp.vertex_profiles[static_cast<size_t>(i)];
    if (v.side == Side::Left && v.region == Region::A)
      for (int id : group[static_cast<size_t>(i)]) inst.witness_a.push_back(id);
  }
  std::sort(inst.witness_a.begin(), inst.witness_a.end());
  return inst;
}

}  // namespace detail

struct VerificationItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationItem> items;
  int mu_g = 0;
  int mu_h = 0;
  Rational ratio;  // mu_g / mu_h, zero if mu_h = 0

  bool all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const VerificationItem& it) { return it.pass; });
  }
};

// Checks every certificate carried by the bundle: EDCS property, matching
// validity, maximality of mstar (recomputed, not trusted), the Hall
// identity for witness_a, and the exactly-one-cover property of m.
inline VerificationReport verify_instance(const EdcsInstance& inst,
                                          const Params& p) {
  VerificationReport rep;
  const BipartiteGraph& g = inst.g;
  auto push = [&](std::string name, bool pass, std::string detail = "") {
    rep.items.push_back({std::move(name), pass, std::move(detail)});
  };

  push("graph_simple", !g.had_duplicates,
       g.had_duplicates ? "duplicate edges in input" : "");

  bool h_in_g = std::all_of(inst.h.begin(), inst.h.end(), [&](const Edge& e) {
    return std::binary_search(g.edges.begin(), g.edges.end(), e);
  });
  push("h_subset_of_g", h_in_g);

  bool edcs_ok = false;
  std::string edcs_detail;
  if (h_in_g && p.valid()) {
    EdcsReport er = is_edcs(g, inst.h, p);
    edcs_ok = er.ok();
    if (!edcs_ok) {
      const auto& v = er.violations.front();
      edcs_detail = "edge (" + std::to_string(v.edge.first) + "," +
                    std::to_string(v.edge.second) + ") degree sum " +
                    std::to_string(v.degree_sum) +
                    (v.in_h ? " > beta" : " < beta_minus");
    }
  } else {
    edcs_detail = "skipped: h not a subgraph or params invalid";
  }
  push("is_edcs", edcs_ok, edcs_detail);

  bool m_ok = is_matching_in(inst.m.pairs, inst.h, g.n_left, g.n_right);
  push("m_matching_in_h", m_ok);
  bool ms_ok =
      is_matching_in(inst.mstar.pairs, g.edges, g.n_left, g.n_right);
  push("mstar_matching_in_g", ms_ok);

  rep.mu_g = max_matching(g).size();
  BipartiteGraph hg(g.n_left, g.n_right, inst.h);
  rep.mu_h = max_matching(hg).size();
  push("mstar_maximum", ms_ok && inst.mstar.size() == rep.mu_g,
       "|mstar| = " + std::to_string(inst.mstar.size()) + ", mu(g) = " +
           std::to_string(rep.mu_g));

  std::vector<char> in_a(static_cast<size_t>(g.n_left), 0);
  bool a_range = true;
  for (int u : inst.witness_a) {
    if (u < 0 || u >= g.n_left) { a_range = false; break; }
    in_a[static_cast<size_t>(u)] = 1;
  }
  std::vector<char> in_na(static_cast<size_t>(g.n_right), 0);
  if (a_range)
    for (const auto& [l, r] : inst.h)
      if (in_a[static_cast<size_t>(l)]) in_na[static_cast<size_t>(r)] = 1;
  int na = a_range
               ? static_cast<int>(std::count(in_na.begin(), in_na.end(), 1))
               : 0;
  int rest = g.n_left - static_cast<int>(inst.witness_a.size());
  bool hall_ok = a_range && na + rest == inst.m.size();
  push("hall_identity", hall_ok,
       "|N_H(A)| + |L-A| = " + std::to_string(na) + " + " +
           std::to_string(rest) + ", |m| = " + std::to_string(inst.m.size()));

  bool cover_ok = a_range;
  if (a_range) {
    for (const auto& [l, r] : inst.m.pairs) {
      int covered = (in_a[static_cast<size_t>(l)] ? 0 : 1) +
                    (in_na[static_cast<size_t>(r)] ? 1 : 0);
      if (covered != 1) { cover_ok = false; break; }
    }
  }
  push("m_covers_exactly_one", cover_ok);

  rep.ratio = rep.mu_h > 0 ? Rational(rep.mu_g, rep.mu_h) : Rational(0);
  rep.ratio.canonicalize();
  return rep;
}

// Claim-2 direction: realize an exact optimal LP solution as a concrete
// instance. The scale is min_scale times the lcm of the solution
// denominators, doubled on realization failure (up to 6 doublings). The
// result is fully re-verified before being returned.
inline EdcsInstance solution_to_instance(const Params& p,
                                         const SolveResult<Rational>& result,
                                         long min_scale = 1) {
  require_valid(p);
  if (min_scale < 1)
    throw ParameterError("solution_to_instance: min_scale must be positive");
  if (result.status != SolveStatus::Optimal)
    throw ParameterError("solution_to_instance: solver result is not Optimal");

  LinearProgram lp = build_lp(p);
  if (static_cast<int>(result.solution.size()) != lp.num_vars)
    throw ParameterError("solution_to_instance: solution size mismatch");

  mpz_class lcm_den(1);
  for (const Rational& x : result.solution)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            x.get_den().get_mpz_t());
  mpz_class scale = mpz_class(min_scale) * lcm_den;

  for (int attempt = 0; attempt <= 6; ++attempt, scale *= 2) {
    std::vector<long> nv(static_cast<size_t>(lp.num_vertex_vars)),
        ne(lp.edge_profiles.size());
    bool too_big = false;
    for (int j = 0; j < lp.num_vars; ++j) {
      Rational scaled = Rational(scale) * result.solution[static_cast<size_t>(j)];
      scaled.canonicalize();
      if (scaled.get_den() != 1)
        throw OperationalError("solution_to_instance: scale does not clear "
                               "denominators");
      mpz_class cnt = scaled.get_num();
      if (!cnt.fits_slong_p() || cnt.get_si() > 50'000'000) {
        too_big = true;
        break;
      }
      if (j < lp.num_vertex_vars)
        nv[static_cast<size_t>(j)] = cnt.get_si();
      else
        ne[static_cast<size_t>(j - lp.num_vertex_vars)] = cnt.get_si();
    }
    if (too_big)
      throw OperationalError("solution_to_instance: scaled instance too large");
    EdcsInstance inst;
    try {
      inst = detail::realize(lp, nv, ne);
    } catch (const detail::RealizationFailure&) {
      continue;
    }
    VerificationReport rep = verify_instance(inst, p);
    Rational want = result.objective;
    if (!rep.all_pass() || rep.ratio != want)
      throw OperationalError(
          "solution_to_instance: internal error, realized instance failed "
          "verification");
    return inst;
  }
  throw OperationalError(
      "solution_to_instance: realization failed after 6 scale doublings");
}

inline nlohmann::json report_to_json(const VerificationReport& rep) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : rep.items) {
    nlohmann::json j{{"check", it.name}, {"pass", it.pass}};
    if (!it.detail.empty()) j["detail"] = it.detail;
    items.push_back(std::move(j));
  }
  return nlohmann::json{{"checks", std::move(items)},
                        {"mu_g", rep.mu_g},
                        {"mu_h", rep.mu_h},
                        {"ratio", rational_to_string(rep.ratio)},
                        {"all_pass", rep.all_pass()}};
}

}  // namespace edcs
