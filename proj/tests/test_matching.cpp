#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <edcs/graph.hpp>

#include <random>

using namespace edcs;

TEST_CASE("max_matching basics") {
  // 3-edge path: l0-r0, l1-r0, l1-r1
  BipartiteGraph path(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  CHECK(max_matching(path).size() == 2);

  BipartiteGraph empty(3, 3, {});
  CHECK(max_matching(empty).size() == 0);

  EdgeList k33;
  for (int l = 0; l < 3; ++l)
    for (int r = 0; r < 3; ++r) k33.emplace_back(l, r);
  CHECK(max_matching(BipartiteGraph(3, 3, k33)).size() == 3);
}

TEST_CASE("brute_force_mu basics and refusal") {
  CHECK(brute_force_mu(BipartiteGraph(2, 2, {{0, 0}, {1, 0}, {1, 1}})) == 2);
  CHECK(brute_force_mu(BipartiteGraph(1, 1, {{0, 0}})) == 1);
  CHECK(brute_force_mu(BipartiteGraph(
            2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})) == 2);
  EdgeList big;
  for (int l = 0; l < 9; ++l)
    for (int r = 0; r < 9; ++r) big.emplace_back(l, r);
  CHECK_THROWS_AS(brute_force_mu(BipartiteGraph(9, 9, big)),
                  ParameterError);
}

TEST_CASE("max_matching agrees with exhaustive search on random graphs") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    int nl = 1 + static_cast<int>(rng() % 8);
    int nr = 1 + static_cast<int>(rng() % 8);
    double density = (1 + rng() % 9) / 10.0;
    EdgeList es;
    for (int l = 0; l < nl; ++l)
      for (int r = 0; r < nr; ++r)
        if (std::uniform_real_distribution<>(0, 1)(rng) < density)
          es.emplace_back(l, r);
    BipartiteGraph g(nl, nr, std::move(es));
    CHECK(max_matching(g).size() == brute_force_mu(g));
  }
}

TEST_CASE("hall_witness examples") {
  // single edge l1-r0 in a 2x2 vertex set, matched: A = {l0}
  BipartiteGraph g(2, 2, {{1, 0}});
  Matching m{{{1, 0}}};
  CHECK(hall_witness(g, m) == std::vector<int>{0});

  // perfect matching on complete 3x3: A empty
  EdgeList k33;
  for (int l = 0; l < 3; ++l)
    for (int r = 0; r < 3; ++r) k33.emplace_back(l, r);
  BipartiteGraph k(3, 3, k33);
  Matching pm{{{0, 0}, {1, 1}, {2, 2}}};
  CHECK(hall_witness(k, pm).empty());

  // 3-edge path with its maximum matching: no unmatched left vertex
  BipartiteGraph path(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  Matching mm{{{0, 0}, {1, 1}}};
  CHECK(hall_witness(path, mm).empty());
}

TEST_CASE("hall_witness rejects bad input") {
  BipartiteGraph path(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  Matching not_max{{{1, 0}}};
  CHECK_THROWS_AS(hall_witness(path, not_max), ContractViolation);
  Matching not_in{{{0, 1}}};
  CHECK_THROWS_AS(hall_witness(path, not_in), ParameterError);
}

TEST_CASE("hall identity holds for random maximum matchings") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int nl = 1 + static_cast<int>(rng() % 10);
    int nr = 1 + static_cast<int>(rng() % 10);
    EdgeList es;
    for (int l = 0; l < nl; ++l)
      for (int r = 0; r < nr; ++r)
        if (rng() % 3 == 0) es.emplace_back(l, r);
    BipartiteGraph g(nl, nr, std::move(es));
    Matching m = max_matching(g);
    auto a = hall_witness(g, m);  // throws if the identity fails
    // every matched edge covers exactly one vertex of N(A) or L-A
    std::vector<char> in_a(static_cast<size_t>(nl), 0);
    for (int u : a) in_a[static_cast<size_t>(u)] = 1;
    std::vector<char> in_na(static_cast<size_t>(nr), 0);
    for (const auto& [l, r] : g.edges)
      if (in_a[static_cast<size_t>(l)]) in_na[static_cast<size_t>(r)] = 1;
    for (const auto& [l, r] : m.pairs) {
      int covered = (in_a[static_cast<size_t>(l)] ? 0 : 1) +
                    (in_na[static_cast<size_t>(r)] ? 1 : 0);
      CHECK(covered == 1);
    }
  }
}

TEST_CASE("is_edcs on the 3-edge path") {
  BipartiteGraph path(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  Params p{2, 1};
  // only the middle edge: valid maximal matching
  CHECK(is_edcs(path, {{1, 0}}, p).ok());
  // all three edges: the middle edge has degree sum 4 > 2
  auto rep = is_edcs(path, path.edges, p);
  CHECK(!rep.ok());
  bool middle_flagged = false;
  for (const auto& v : rep.violations)
    if (v.edge == Edge{1, 0} && v.in_h && v.degree_sum == 4)
      middle_flagged = true;
  CHECK(middle_flagged);
  // h not a subgraph
  CHECK_THROWS_AS(is_edcs(path, {{0, 1}}, p), ParameterError);
}

TEST_CASE("greedy_edcs fixes the examples") {
  Params p21{2, 1};
  // star with 3 leaves: any (2,1)-EDCS is a single edge
  BipartiteGraph star(1, 3, {{0, 0}, {0, 1}, {0, 2}});
  EdgeList h = greedy_edcs(star, p21);
  CHECK(h.size() == 1);
  CHECK(is_edcs(star, h, p21).ok());

  // complete 2x2 with (3,2): a perfect matching
  BipartiteGraph k22(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EdgeList h2 = greedy_edcs(k22, Params{3, 2});
  CHECK(h2.size() == 2);
  CHECK(is_edcs(k22, h2, Params{3, 2}).ok());
  CHECK(is_matching_in(h2, k22.edges, 2, 2));

  CHECK(greedy_edcs(BipartiteGraph(0, 0, {}), p21).empty());
}

TEST_CASE("greedy_edcs passes is_edcs on random graphs with bounded work") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int nl = 1 + static_cast<int>(rng() % 12);
    int nr = 1 + static_cast<int>(rng() % 12);
    EdgeList es;
    for (int l = 0; l < nl; ++l)
      for (int r = 0; r < nr; ++r)
        if (rng() % 2 == 0) es.emplace_back(l, r);
    BipartiteGraph g(nl, nr, std::move(es));
    int b = 2 + static_cast<int>(rng() % 6);
    int bm = 1 + static_cast<int>(rng() % (b - 1));
    Params p{b, bm};
    long fixes = 0;
    EdgeList h = greedy_edcs(g, p, &fixes);
    CHECK(is_edcs(g, h, p).ok());
    CHECK(fixes <= 1 + (2L * b - 1) * (nl + nr) * b / 2);
  }
}

TEST_CASE("tight family invariants for all small k, n") {
  for (int k = 1; k <= 5; ++k)
    for (int n = k; n <= 8; ++n) {
      EdcsInstance inst = tight_example(k, n);
      Params p{2 * k + 1, 2 * k};
      CHECK(inst.params == p);
      CHECK(is_edcs(inst.g, inst.h, p).ok());
      CHECK(max_matching(inst.g).size() == 3 * n);
      BipartiteGraph hg(inst.g.n_left, inst.g.n_right, inst.h);
      CHECK(max_matching(hg).size() == 2 * n);
      // every non-h edge has degree sum exactly beta - 1
      auto [dl, dr] = h_degrees(inst.g, inst.h);
      for (const auto& [l, r] : inst.g.edges)
        if (!std::binary_search(inst.h.begin(), inst.h.end(), Edge{l, r}))
          CHECK(dl[static_cast<size_t>(l)] + dr[static_cast<size_t>(r)] ==
                2 * k);
    }
  CHECK_THROWS_AS(tight_example(5, 4), ParameterError);
  CHECK_THROWS_AS(tight_example(0, 1), ParameterError);
}

TEST_CASE("graph json round-trip") {
  EdcsInstance inst = tight_example(2, 3);
  auto j = instance_to_json(inst);
  EdcsInstance back = instance_from_json(j);
  CHECK(back.g.n_left == inst.g.n_left);
  CHECK(back.g.edges == inst.g.edges);
  CHECK(back.h == inst.h);
  CHECK(back.m.pairs == inst.m.pairs);
  CHECK(back.mstar.pairs == inst.mstar.pairs);
  CHECK(back.witness_a == inst.witness_a);
  CHECK(back.params == inst.params);
}

TEST_CASE("graph normalization") {
  BipartiteGraph g(2, 2, {{1, 1}, {0, 0}, {1, 1}});
  CHECK(g.had_duplicates);
  CHECK(g.edges == EdgeList{{0, 0}, {1, 1}});
  CHECK_THROWS_AS(BipartiteGraph(1, 1, {{0, 1}}), ParameterError);
}
