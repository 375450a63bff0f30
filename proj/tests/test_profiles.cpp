#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <edcs/profiles.hpp>

#include <set>
#include <vector>

using namespace edcs;

namespace {

// Independent transliteration of the profile rules, used as an oracle
// against the library's enumeration. Deliberately written brute-force.
bool oracle_vertex_ok(const VertexProfile& v, const Params& p) {
  bool left = v.region == Region::A || v.region == Region::LMinusA;
  if (left != (v.side == Side::Left)) return false;
  if (v.deg_h < 0 || v.deg_h >= p.beta) return false;
  bool must_match =
      v.region == Region::NA || v.region == Region::LMinusA;
  if (must_match && !v.in_m) return false;
  if (v.deg_h == 0) {
    if (v.in_m) return false;
    if (!v.in_mstar) return false;  // would be an isolated vertex
  }
  return true;
}

bool oracle_edge_ok(const EdgeProfile& e, const Params& p) {
  if (!oracle_vertex_ok(e.left, p) || !oracle_vertex_ok(e.right, p))
    return false;
  if (e.left.side != Side::Left || e.right.side != Side::Right) return false;
  if (!e.in_h && !e.in_mstar) return false;
  if (e.in_m && !e.in_h) return false;
  if (e.in_h && (e.left.deg_h == 0 || e.right.deg_h == 0)) return false;
  if (e.in_m && (!e.left.in_m || !e.right.in_m)) return false;
  if (e.in_mstar && (!e.left.in_mstar || !e.right.in_mstar)) return false;
  int sum = e.left.deg_h + e.right.deg_h;
  if (e.in_h && sum > p.beta) return false;
  if (!e.in_h && sum < p.beta_minus) return false;
  if (e.in_h && e.left.region == Region::A &&
      e.right.region == Region::RMinusNA)
    return false;
  if (e.in_m) {
    bool an = e.left.region == Region::A && e.right.region == Region::NA;
    bool lr = e.left.region == Region::LMinusA &&
              e.right.region == Region::RMinusNA;
    if (!an && !lr) return false;
  }
  return true;
}

std::set<VertexProfile> oracle_vertex_set(const Params& p) {
  std::set<VertexProfile> out;
  for (Region reg : {Region::A, Region::LMinusA, Region::NA,
                     Region::RMinusNA})
    for (int d = 0; d < p.beta; ++d)
      for (bool m : {false, true})
        for (bool s : {false, true}) {
          VertexProfile v{region_side(reg), reg, d, m, s};
          if (oracle_vertex_ok(v, p)) out.insert(v);
        }
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK(Params{2, 1}.valid());
  CHECK(Params{12, 11}.valid());
  CHECK(!Params{2, 2}.valid());
  CHECK(!Params{1, 0}.valid());
  CHECK(!Params{3, 0}.valid());
  CHECK_THROWS_AS(enumerate_vertex_profiles(Params{2, 2}), ParameterError);
}

TEST_CASE("vertex enumeration matches the oracle set") {
  for (Params p : {Params{2, 1}, Params{3, 2}, Params{4, 2}, Params{6, 5},
                   Params{7, 3}}) {
    auto vec = enumerate_vertex_profiles(p);
    std::set<VertexProfile> got(vec.begin(), vec.end());
    CHECK(got.size() == vec.size());  // no duplicates
    CHECK(got == oracle_vertex_set(p));
  }
}

TEST_CASE("frozen profile counts") {
  CHECK(enumerate_vertex_profiles(Params{2, 1}).size() == 14);
  CHECK(enumerate_vertex_profiles(Params{3, 2}).size() == 26);
  CHECK(enumerate_vertex_profiles(Params{6, 5}).size() == 62);
  auto vp21 = enumerate_vertex_profiles(Params{2, 1});
  CHECK(enumerate_edge_profiles(Params{2, 1}, vp21).size() == 50);
  auto vp65 = enumerate_vertex_profiles(Params{6, 5});
  CHECK(enumerate_edge_profiles(Params{6, 5}, vp65).size() == 702);
}

TEST_CASE("vertex count closed form: 2 + 12(beta-1)") {
  for (int b = 2; b <= 40; ++b) {
    Params p{b, 1};
    CHECK(enumerate_vertex_profiles(p).size() ==
          static_cast<size_t>(2 + 12 * (b - 1)));
    // count depends only on beta, not beta_minus
    if (b > 2)
      CHECK(enumerate_vertex_profiles(Params{b, b - 1}).size() ==
            enumerate_vertex_profiles(p).size());
  }
}

TEST_CASE("enumeration is deterministic and canonically ordered") {
  Params p{5, 3};
  auto a = enumerate_vertex_profiles(p);
  auto b = enumerate_vertex_profiles(p);
  CHECK(a == b);
  for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1] < a[i]);
  auto ea = enumerate_edge_profiles(p, a);
  auto eb = enumerate_edge_profiles(p, b);
  CHECK(ea == eb);
  for (size_t i = 1; i < ea.size(); ++i) CHECK(ea[i - 1] < ea[i]);
}

TEST_CASE("edge enumeration validates its vertex list") {
  auto vps = enumerate_vertex_profiles(Params{3, 2});
  // vertex lists depend only on beta, so a beta mismatch must be caught
  CHECK_THROWS_AS(enumerate_edge_profiles(Params{4, 2}, vps),
                  ParameterError);
  std::vector<VertexProfile> truncated(vps.begin(), vps.end() - 1);
  CHECK_THROWS_AS(enumerate_edge_profiles(Params{3, 2}, truncated),
                  ParameterError);
}

TEST_CASE("every enumerated edge profile satisfies each rule") {
  for (Params p : {Params{2, 1}, Params{4, 3}, Params{5, 2}}) {
    auto vps = enumerate_vertex_profiles(p);
    auto eps = enumerate_edge_profiles(p, vps);
    for (const EdgeProfile& e : eps) {
      CHECK(oracle_edge_ok(e, p));
      CHECK((e.in_h || e.in_mstar));
      if (e.in_m) {
        CHECK(e.in_h);
        CHECK(e.left.deg_h + e.right.deg_h <= p.beta);
        // matched edges pair A with N(A), or L-A with R-N(A)
        bool an = e.left.region == Region::A &&
                  e.right.region == Region::NA;
        bool lr = e.left.region == Region::LMinusA &&
                  e.right.region == Region::RMinusNA;
        CHECK((an || lr));
      }
      if (!e.in_h) CHECK(e.left.deg_h + e.right.deg_h >= p.beta_minus);
    }
  }
}

TEST_CASE("labels are distinct per profile") {
  auto vps = enumerate_vertex_profiles(Params{4, 2});
  std::set<std::string> labels;
  for (const auto& v : vps) labels.insert(v.label());
  CHECK(labels.size() == vps.size());
}
