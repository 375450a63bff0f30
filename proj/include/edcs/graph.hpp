#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edcs/errors.hpp"
#include "edcs/profiles.hpp"

namespace edcs {

using Edge = std::pair<int, int>;  // (left index, right index)
using EdgeList = std::vector<Edge>;

// Simple bipartite graph. Edges are kept sorted and deduplicated so that
// identical graphs compare equal and all algorithms are deterministic.
struct BipartiteGraph {
  int n_left = 0;
  int n_right = 0;
  EdgeList edges;
  bool had_duplicates = false;  // input listed some edge twice

  BipartiteGraph() = default;
  BipartiteGraph(int nl, int nr, EdgeList es)
      : n_left(nl), n_right(nr), edges(std::move(es)) {
    normalize();
  }

  void normalize() {
    for (const auto& [l, r] : edges)
      if (l < 0 || l >= n_left || r < 0 || r >= n_right)
        throw ParameterError("graph: edge (" + std::to_string(l) + "," +
                             std::to_string(r) + ") out of range");
    std::sort(edges.begin(), edges.end());
    auto it = std::unique(edges.begin(), edges.end());
    had_duplicates = it != edges.end();
    edges.erase(it, edges.end());
  }

  bool has_edge(int l, int r) const {
    return std::binary_search(edges.begin(), edges.end(), Edge{l, r});
  }

  // Adjacency as right-neighbor lists per left vertex.
  std::vector<std::vector<int>> left_adj() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n_left));
    for (const auto& [l, r] : edges) adj[static_cast<size_t>(l)].push_back(r);
    return adj;
  }
};

// A matching is any set of host-graph edges with no shared endpoint.
struct Matching {
  EdgeList pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

inline bool is_matching_in(const EdgeList& pairs, const EdgeList& host,
                           int n_left, int n_right) {
  std::vector<char> ul(static_cast<size_t>(n_left), 0),
      ur(static_cast<size_t>(n_right), 0);
  for (const auto& [l, r] : pairs) {
    if (l < 0 || l >= n_left || r < 0 || r >= n_right) return false;
    if (!std::binary_search(host.begin(), host.end(), Edge{l, r})) return false;
    if (ul[static_cast<size_t>(l)] || ur[static_cast<size_t>(r)]) return false;
    ul[static_cast<size_t>(l)] = ur[static_cast<size_t>(r)] = 1;
  }
  return true;
}

// Maximum matching by layered BFS phases with DFS augmentation
// (Hopcroft-Karp). Deterministic for a fixed edge order.
inline Matching max_matching(const BipartiteGraph& g) {
  const int nl = g.n_left, nr = g.n_right;
  auto adj = g.left_adj();
  std::vector<int> match_l(static_cast<size_t>(nl), -1),
      match_r(static_cast<size_t>(nr), -1);
  std::vector<int> dist(static_cast<size_t>(nl));
  const int INF = 1 << 30;

  auto bfs = [&]() {
    std::queue<int> q;
    for (int u = 0; u < nl; ++u) {
      if (match_l[static_cast<size_t>(u)] < 0) {
        dist[static_cast<size_t>(u)] = 0;
        q.push(u);
      } else {
        dist[static_cast<size_t>(u)] = INF;
      }
    }
    bool found = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<size_t>(u)]) {
        int w = match_r[static_cast<size_t>(v)];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<size_t>(w)] == INF) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::function<bool(int)> dfs = [&](int u) {
    for (int v : adj[static_cast<size_t>(u)]) {
      int w = match_r[static_cast<size_t>(v)];
      if (w < 0 || (dist[static_cast<size_t>(w)] ==
                        dist[static_cast<size_t>(u)] + 1 &&
                    dfs(w))) {
        match_l[static_cast<size_t>(u)] = v;
        match_r[static_cast<size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<size_t>(u)] = INF;
    return false;
  };

  while (bfs()) {
    for (int u = 0; u < nl; ++u)
      if (match_l[static_cast<size_t>(u)] < 0) dfs(u);
  }
  Matching m;
  for (int u = 0; u < nl; ++u)
    if (match_l[static_cast<size_t>(u)] >= 0)
      m.pairs.emplace_back(u, match_l[static_cast<size_t>(u)]);
  return m;
}

// Exact mu(g) by exhaustive search; refuses instances that are too large.
inline int brute_force_mu(const BipartiteGraph& g) {
  if (g.edges.size() > 12 && (g.n_left > 8 || g.n_right > 8))
    throw ParameterError("brute_force_mu: instance too large (needs <= 12 "
                         "edges or <= 8+8 vertices)");
  auto adj = g.left_adj();
  std::vector<char> used_r(static_cast<size_t>(g.n_right), 0);
  std::function<int(int)> go = [&](int u) -> int {
    if (u == g.n_left) return 0;
    int best = go(u + 1);  // leave u unmatched
    for (int v : adj[static_cast<size_t>(u)]) {
      if (used_r[static_cast<size_t>(v)]) continue;
      used_r[static_cast<size_t>(v)] = 1;
      best = std::max(best, 1 + go(u + 1));
      used_r[static_cast<size_t>(v)] = 0;
    }
    return best;
  };
  return go(0);
}

// Hall's witness for a maximum matching m of g: the set A of left vertices
// reachable from unmatched left vertices by alternating paths (non-matching
// edges left-to-right, matching edges right-to-left). Validates the
// identity |N(A)| + |L \ A| = |m| and rejects non-maximum matchings.
inline std::vector<int> hall_witness(const BipartiteGraph& g,
                                     const Matching& m) {
  if (!is_matching_in(m.pairs, g.edges, g.n_left, g.n_right))
    throw ParameterError("hall_witness: not a matching of the graph");
  auto adj = g.left_adj();
  std::vector<int> match_l(static_cast<size_t>(g.n_left), -1),
      match_r(static_cast<size_t>(g.n_right), -1);
  for (const auto& [l, r] : m.pairs) {
    match_l[static_cast<size_t>(l)] = r;
    match_r[static_cast<size_t>(r)] = l;
  }
  std::vector<char> vis_l(static_cast<size_t>(g.n_left), 0),
      vis_r(static_cast<size_t>(g.n_right), 0);
  std::queue<int> q;
  for (int u = 0; u < g.n_left; ++u)
    if (match_l[static_cast<size_t>(u)] < 0) {
      vis_l[static_cast<size_t>(u)] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[static_cast<size_t>(u)]) {
      if (vis_r[static_cast<size_t>(v)]) continue;
      vis_r[static_cast<size_t>(v)] = 1;
      int w = match_r[static_cast<size_t>(v)];
      if (w >= 0 && !vis_l[static_cast<size_t>(w)]) {
        vis_l[static_cast<size_t>(w)] = 1;
        q.push(w);
      }
    }
  }
  std::vector<int> a;
  for (int u = 0; u < g.n_left; ++u)
    if (vis_l[static_cast<size_t>(u)]) a.push_back(u);

  // |N(A)| + |L \ A| must equal |m|; otherwise m was not maximum.
  std::vector<char> in_a(static_cast<size_t>(g.n_left), 0);
  for (int u : a) in_a[static_cast<size_t>(u)] = 1;
  std::vector<char> nbr(static_cast<size_t>(g.n_right), 0);
  for (const auto& [l, r] : g.edges)
    if (in_a[static_cast<size_t>(l)]) nbr[static_cast<size_t>(r)] = 1;
  int na = static_cast<int>(std::count(nbr.begin(), nbr.end(), 1));
  int rest = g.n_left - static_cast<int>(a.size());
  if (na + rest != m.size())
    throw ContractViolation("hall_witness: matching is not maximum (identity " +
                            std::to_string(na) + " + " + std::to_string(rest) +
                            " != " + std::to_string(m.size()) + ")");
  return a;
}

struct EdcsViolation {
  Edge edge;
  int degree_sum = 0;
  bool in_h = false;  // true: sum > beta; false: sum < beta_minus
};

struct EdcsReport {
  std::vector<EdcsViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline std::pair<std::vector<int>, std::vector<int>> h_degrees(
    const BipartiteGraph& g, const EdgeList& h) {
  std::vector<int> dl(static_cast<size_t>(g.n_left), 0),
      dr(static_cast<size_t>(g.n_right), 0);
  for (const auto& [l, r] : h) {
    ++dl[static_cast<size_t>(l)];
    ++dr[static_cast<size_t>(r)];
  }
  return {dl, dr};
}

// Checks both defining properties of a (beta, beta_minus)-EDCS and lists
// every violating edge.
inline EdcsReport is_edcs(const BipartiteGraph& g, const EdgeList& h,
                          const Params& p) {
  require_valid(p);
  for (const auto& e : h)
    if (!std::binary_search(g.edges.begin(), g.edges.end(), e))
      throw ParameterError("is_edcs: h contains an edge not in g");
  auto [dl, dr] = h_degrees(g, h);
  EdcsReport rep;
  for (const auto& e : g.edges) {
    int sum = dl[static_cast<size_t>(e.first)] + dr[static_cast<size_t>(e.second)];
    bool in_h = std::binary_search(h.begin(), h.end(), e);
    if (in_h && sum > p.beta)
      rep.violations.push_back({e, sum, true});
    else if (!in_h && sum < p.beta_minus)
      rep.violations.push_back({e, sum, false});
  }
  return rep;
}

// Greedy construction: repeatedly fix a violation, removals before
// additions, scanning edges in canonical order each pass. Terminates by
// the standard potential argument; the cap below only guards against bugs.
inline EdgeList greedy_edcs(const BipartiteGraph& g, const Params& p,
                            long* fix_count = nullptr) {
  require_valid(p);
  std::set<Edge> h;
  auto [dl, dr] = h_degrees(g, EdgeList{});
  long fixes = 0;
  const long cap =
      2 + (2L * p.beta - 1) * (g.n_left + g.n_right) * p.beta / 2;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : g.edges) {
      if (!h.count(e)) continue;
      if (dl[static_cast<size_t>(e.first)] + dr[static_cast<size_t>(e.second)] >
          p.beta) {
        h.erase(e);
        --dl[static_cast<size_t>(e.first)];
        --dr[static_cast<size_t>(e.second)];
        ++fixes;
        changed = true;
      }
    }
    for (const auto& e : g.edges) {
      if (h.count(e)) continue;
      if (dl[static_cast<size_t>(e.first)] + dr[static_cast<size_t>(e.second)] <
          p.beta_minus) {
        h.insert(e);
        ++dl[static_cast<size_t>(e.first)];
        ++dr[static_cast<size_t>(e.second)];
        ++fixes;
        changed = true;
      }
    }
    if (fixes > cap)
      throw OperationalError("greedy_edcs: fix count exceeded potential bound");
  }
  if (fix_count) *fix_count = fixes;
  return EdgeList(h.begin(), h.end());
}

// A full witness bundle: graph, EDCS, the two matchings and the Hall
// witness that certify the ratio mu(g)/mu(h).
struct EdcsInstance {
  BipartiteGraph g;
  EdgeList h;
  Matching m;       // maximum matching of h
  Matching mstar;   // maximum matching of g
  std::vector<int> witness_a;  // Hall witness for h, subset of left vertices
  Params params;
};

// The tight family behind the 2/3 barrier for odd beta = 2k+1: each side
// splits into groups A, B, C of size n. The EDCS H consists of an A-C
// perfect matching and a k-regular circulant between B and the opposite C
// (mirrored on both sides); the only non-H edges are a B-B perfect
// matching with edge degree exactly 2k. mu(g) = 3n, mu(h) = 2n.
//
// Vertex layout per side: indices [0,n) group A, [n,2n) group B,
// [2n,3n) group C.
inline EdcsInstance tight_example(int k, int n) {
  if (k < 1) throw ParameterError("tight_example: k must be >= 1");
  if (n < k) throw ParameterError("tight_example: need n >= k");
  const int A = 0, B = n, C = 2 * n;
  EdcsInstance inst;
  inst.params = Params{2 * k + 1, 2 * k};
  EdgeList h, other;
  for (int i = 0; i < n; ++i) {
    h.emplace_back(A + i, C + i);  // left A - right C
    h.emplace_back(C + i, A + i);  // left C - right A
    for (int j = 0; j < k; ++j) {
      h.emplace_back(B + i, C + (i + j) % n);  // left B - right C
      h.emplace_back(C + (i + j) % n, B + i);  // left C - right B
    }
    other.emplace_back(B + i, B + i);  // dashed B-B, outside the EDCS
  }
  EdgeList all = h;
  all.insert(all.end(), other.begin(), other.end());
  inst.g = BipartiteGraph(3 * n, 3 * n, all);
  std::sort(h.begin(), h.end());
  inst.h = std::move(h);
  for (int i = 0; i < n; ++i) {
    inst.mstar.pairs.emplace_back(A + i, C + i);
    inst.mstar.pairs.emplace_back(B + i, B + i);
    inst.mstar.pairs.emplace_back(C + i, A + i);
  }
  // M matches all of C on both sides; A = A_L union B_L, so
  // N_H(A) = C_R and |N_H(A)| + |L \ A| = n + n = |M|.
  for (int i = 0; i < n; ++i) {
    inst.m.pairs.emplace_back(B + i, C + i);
    inst.m.pairs.emplace_back(C + i, A + i);
  }
  for (int i = 0; i < 2 * n; ++i) inst.witness_a.push_back(i);
  std::sort(inst.m.pairs.begin(), inst.m.pairs.end());
  std::sort(inst.mstar.pairs.begin(), inst.mstar.pairs.end());
  return inst;
}

// --- shared graph JSON format ---

inline nlohmann::json edges_to_json(const EdgeList& es) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [l, r] : es) a.push_back({l, r});
  return a;
}

inline EdgeList edges_from_json(const nlohmann::json& j) {
  EdgeList es;
  for (const auto& e : j) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return es;
}

inline nlohmann::json instance_to_json(const EdcsInstance& inst) {
  nlohmann::json j;
  j["n_left"] = inst.g.n_left;
  j["n_right"] = inst.g.n_right;
  j["edges"] = edges_to_json(inst.g.edges);
  j["h"] = edges_to_json(inst.h);
  j["m"] = edges_to_json(inst.m.pairs);
  j["mstar"] = edges_to_json(inst.mstar.pairs);
  j["witness_a"] = inst.witness_a;
  j["beta"] = inst.params.beta;
  j["beta_minus"] = inst.params.beta_minus;
  return j;
}

inline EdcsInstance instance_from_json(const nlohmann::json& j) {
  EdcsInstance inst;
  inst.g = BipartiteGraph(j.at("n_left").get<int>(), j.at("n_right").get<int>(),
                          edges_from_json(j.at("edges")));
  if (j.contains("h")) {
    inst.h = edges_from_json(j.at("h"));
    std::sort(inst.h.begin(), inst.h.end());
  }
  if (j.contains("m")) inst.m.pairs = edges_from_json(j.at("m"));
  if (j.contains("mstar")) inst.mstar.pairs = edges_from_json(j.at("mstar"));
  if (j.contains("witness_a"))
    inst.witness_a = j.at("witness_a").get<std::vector<int>>();
  if (j.contains("beta")) inst.params.beta = j.at("beta").get<int>();
  if (j.contains("beta_minus"))
    inst.params.beta_minus = j.at("beta_minus").get<int>();
  return inst;
}

}  // namespace edcs
