#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <edcs/lp.hpp>

#include <set>

using namespace edcs;

TEST_CASE("model dimensions") {
  LinearProgram lp = build_lp(Params{2, 1});
  CHECK(lp.num_vertex_vars == 14);
  CHECK(lp.num_vars == 14 + 50);
  CHECK(lp.eq_rows.size() == 29);
  CHECK(lp.row_names.size() == lp.eq_rows.size());
  CHECK(lp.var_names.size() == static_cast<size_t>(lp.num_vars));
}

TEST_CASE("exactly one normalization row, rhs 1, everything else rhs 0") {
  for (Params p : {Params{2, 1}, Params{5, 3}, Params{6, 5}}) {
    LinearProgram lp = build_lp(p);
    int norm_rows = 0;
    for (size_t r = 0; r < lp.eq_rows.size(); ++r) {
      if (lp.row_names[r] == "norm") {
        ++norm_rows;
        CHECK(lp.eq_rows[r].second == Rational(1));
        // the norm row sums the matched-edge variables with coefficient 1
        for (const auto& [j, c] : lp.eq_rows[r].first) {
          CHECK(c == Rational(1));
          CHECK(j >= lp.num_vertex_vars);
          CHECK(lp.edge_profiles[static_cast<size_t>(
                                     j - lp.num_vertex_vars)]
                    .in_m);
        }
      } else {
        CHECK(lp.eq_rows[r].second == Rational(0));
      }
    }
    CHECK(norm_rows == 1);
  }
}

TEST_CASE("row structure follows the profiles") {
  Params p{4, 3};
  LinearProgram lp = build_lp(p);
  size_t deg = 0, m = 0, ms = 0;
  for (const auto& name : lp.row_names) {
    if (name.rfind("deg_v", 0) == 0) ++deg;
    if (name.rfind("m_v", 0) == 0) ++m;
    if (name.rfind("ms_v", 0) == 0) ++ms;
  }
  size_t want_deg = 0, want_m = 0, want_ms = 0;
  for (const auto& v : lp.vertex_profiles) {
    if (v.deg_h >= 1) ++want_deg;
    if (v.in_m) ++want_m;
    if (v.in_mstar) ++want_ms;
  }
  CHECK(deg == want_deg);
  CHECK(m == want_m);
  CHECK(ms == want_ms);
  CHECK(deg + m + ms + 1 == lp.eq_rows.size());
}

TEST_CASE("objective covers exactly the mstar edge variables") {
  LinearProgram lp = build_lp(Params{3, 2});
  std::set<int> obj_vars;
  for (const auto& [j, c] : lp.objective) {
    CHECK(c == Rational(1));
    obj_vars.insert(j);
  }
  for (size_t k = 0; k < lp.edge_profiles.size(); ++k) {
    int var = lp.num_vertex_vars + static_cast<int>(k);
    CHECK(obj_vars.count(var) ==
          (lp.edge_profiles[k].in_mstar ? 1u : 0u));
  }
}

// A hand-built feasible point: one perfect-matching pair per side where
// g = h = m = mstar. Scaled by 1/mu(h) the counts are all 1.
TEST_CASE("perfect-matching point is feasible with objective 1") {
  Params p{2, 1};
  LinearProgram lp = build_lp(p);
  // the single vertex profile per side: L-A region, deg 1, in m and mstar
  VertexProfile lv{Side::Left, Region::LMinusA, 1, true, true};
  VertexProfile rv{Side::Right, Region::RMinusNA, 1, true, true};
  EdgeProfile ep{lv, rv, true, true, true};
  Assignment x;
  x.values.assign(static_cast<size_t>(lp.num_vars), Rational(0));
  auto vi = [&](const VertexProfile& v) {
    for (size_t i = 0; i < lp.vertex_profiles.size(); ++i)
      if (lp.vertex_profiles[i] == v) return static_cast<int>(i);
    return -1;
  };
  auto ei = [&](const EdgeProfile& e) {
    for (size_t i = 0; i < lp.edge_profiles.size(); ++i)
      if (lp.edge_profiles[i] == e)
        return lp.num_vertex_vars + static_cast<int>(i);
    return -1;
  };
  REQUIRE(vi(lv) >= 0);
  REQUIRE(vi(rv) >= 0);
  REQUIRE(ei(ep) >= 0);
  x.values[static_cast<size_t>(vi(lv))] = 1;
  x.values[static_cast<size_t>(vi(rv))] = 1;
  x.values[static_cast<size_t>(ei(ep))] = 1;
  FeasibilityReport rep = check_assignment(lp, x);
  CHECK(rep.feasible());
  CHECK(rep.objective == Rational(1));
}

TEST_CASE("check_assignment flags violations") {
  LinearProgram lp = build_lp(Params{2, 1});
  Assignment zero;
  zero.values.assign(static_cast<size_t>(lp.num_vars), Rational(0));
  FeasibilityReport rep = check_assignment(lp, zero);
  CHECK(!rep.feasible());  // the norm row cannot hold at zero
  CHECK(rep.violated_rows.size() == 1);

  Assignment neg = zero;
  neg.values[0] = -1;
  rep = check_assignment(lp, neg);
  CHECK(rep.negative_vars == std::vector<int>{0});

  Assignment wrong_len;
  wrong_len.values.assign(3, Rational(0));
  CHECK_THROWS_AS(check_assignment(lp, wrong_len), ParameterError);
}

TEST_CASE("LP text export is deterministic and well-formed") {
  LinearProgram lp = build_lp(Params{6, 5});
  std::string a = export_lp_text(lp);
  std::string b = export_lp_text(build_lp(Params{6, 5}));
  CHECK(a == b);
  CHECK(a.find("Maximize") != std::string::npos);
  CHECK(a.find("Subject To") != std::string::npos);
  CHECK(a.find("Bounds") != std::string::npos);
  CHECK(a.rfind("End\n") == a.size() - 4);
  CHECK(a.find("norm:") != std::string::npos);
}

TEST_CASE("json model dump carries every variable and row") {
  LinearProgram lp = build_lp(Params{3, 1});
  auto j = lp_to_json(lp);
  CHECK(j["num_vars"].get<int>() == lp.num_vars);
  CHECK(j["variables"].size() == static_cast<size_t>(lp.num_vars));
  CHECK(j["rows"].size() == lp.eq_rows.size());
  CHECK(j["beta"].get<int>() == 3);
  CHECK(j["beta_minus"].get<int>() == 1);
}
