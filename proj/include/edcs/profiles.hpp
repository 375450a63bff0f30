#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <tuple>
#include <vector>

#include "edcs/errors.hpp"

namespace edcs {

struct Params {
  int beta = 0;
  int beta_minus = 0;

  bool valid() const { return beta > beta_minus && beta_minus >= 1; }

  friend bool operator==(const Params&, const Params&) = default;
};

inline void require_valid(const Params& p) {
  if (!p.valid())
    throw ParameterError("invalid parameters: need beta > beta_minus >= 1, got beta=" +
                         std::to_string(p.beta) +
                         " beta_minus=" + std::to_string(p.beta_minus));
}

enum class Side { Left, Right };

// A and LMinusA partition the left side (A is the Hall witness);
// NA (= N_H(A)) and RMinusNA partition the right side.
enum class Region { A, LMinusA, NA, RMinusNA };

inline Side region_side(Region r) {
  return (r == Region::A || r == Region::LMinusA) ? Side::Left : Side::Right;
}

inline const char* region_name(Region r) {
  switch (r) {
    case Region::A: return "A";
    case Region::LMinusA: return "L-A";
    case Region::NA: return "N(A)";
    case Region::RMinusNA: return "R-N(A)";
  }
  return "?";
}

struct VertexProfile {
  Side side = Side::Left;
  Region region = Region::A;
  int deg_h = 0;
  bool in_m = false;
  bool in_mstar = false;

  auto key() const {
    return std::make_tuple(static_cast<int>(side), static_cast<int>(region),
                           deg_h, in_m, in_mstar);
  }
  friend bool operator==(const VertexProfile& a, const VertexProfile& b) {
    return a.key() == b.key();
  }
  friend bool operator<(const VertexProfile& a, const VertexProfile& b) {
    return a.key() < b.key();
  }

  std::string label() const {
    std::string s = side == Side::Left ? "L" : "R";
    s += ":";
    s += region_name(region);
    s += ",d" + std::to_string(deg_h);
    if (in_m) s += ",M";
    if (in_mstar) s += ",M*";
    return s;
  }
};

struct EdgeProfile {
  VertexProfile left;   // side = Left
  VertexProfile right;  // side = Right
  bool in_h = false;
  bool in_m = false;
  bool in_mstar = false;

  auto key() const {
    return std::make_tuple(left.key(), right.key(), in_h, in_m, in_mstar);
  }
  friend bool operator==(const EdgeProfile& a, const EdgeProfile& b) {
    return a.key() == b.key();
  }
  friend bool operator<(const EdgeProfile& a, const EdgeProfile& b) {
    return a.key() < b.key();
  }

  std::string label() const {
    std::string s = "(" + left.label() + ")-(" + right.label() + ")";
    if (in_h) s += ",H";
    if (in_m) s += ",M";
    if (in_mstar) s += ",M*";
    return s;
  }
};

// Vertex validity. Beyond side/region and degree-range consistency:
//   1. a vertex in N(A) or L\A is matched in M;
//   2. a vertex of H-degree zero is unmatched in M;
// plus the exclusion of fully isolated profiles (degree 0, unmatched in
// both M and M*), which correspond to isolated vertices and cannot affect
// the optimum.
inline bool vertex_profile_valid(const VertexProfile& v, const Params& p) {
  if (region_side(v.region) != v.side) return false;
  if (v.deg_h < 0 || v.deg_h > p.beta - 1) return false;
  if ((v.region == Region::NA || v.region == Region::LMinusA) && !v.in_m)
    return false;                                     // condition 1
  if (v.deg_h == 0 && v.in_m) return false;           // condition 2
  if (v.deg_h == 0 && !v.in_m && !v.in_mstar) return false;  // isolation
  return true;
}

// Edge validity, conditions 3-10. Assumes both endpoint profiles are valid.
inline bool edge_profile_valid(const EdgeProfile& e, const Params& p) {
  if (e.left.side != Side::Left || e.right.side != Side::Right) return false;
  if (e.in_h && (e.left.deg_h < 1 || e.right.deg_h < 1)) return false;  // 3
  if (e.in_m && !(e.left.in_m && e.right.in_m)) return false;           // 4
  if (e.in_mstar && !(e.left.in_mstar && e.right.in_mstar)) return false;
  if (e.in_m && !e.in_h) return false;                                  // 5
  if (!e.in_h && !e.in_mstar) return false;                             // 6
  int sum = e.left.deg_h + e.right.deg_h;
  if (e.in_h && sum > p.beta) return false;                             // 7
  if (!e.in_h && sum < p.beta_minus) return false;                      // 8
  if (e.in_h && e.left.region == Region::A &&
      e.right.region == Region::RMinusNA)
    return false;                                                       // 9
  if (e.in_m) {                                                         // 10
    bool ok = (e.left.region == Region::A && e.right.region == Region::NA) ||
              (e.left.region == Region::LMinusA &&
               e.right.region == Region::RMinusNA);
    if (!ok) return false;
  }
  return true;
}

// All valid vertex profiles in canonical order: lexicographic on
// (side, region, deg_h, in_m, in_mstar).
inline std::vector<VertexProfile> enumerate_vertex_profiles(const Params& p) {
  require_valid(p);
  std::vector<VertexProfile> out;
  for (Region region : {Region::A, Region::LMinusA, Region::NA,
                        Region::RMinusNA}) {
    for (int d = 0; d <= p.beta - 1; ++d) {
      for (int m = 0; m < 2; ++m) {
        for (int s = 0; s < 2; ++s) {
          VertexProfile v{region_side(region), region, d, m != 0, s != 0};
          if (vertex_profile_valid(v, p)) out.push_back(v);
        }
      }
    }
  }
  // Region loop already yields (side, region) in canonical order;
  // inner loops are lexicographic.
  return out;
}

// All valid edge profiles over the given vertex profiles, canonical order:
// lexicographic on (left profile, right profile, in_h, in_m, in_mstar).
inline std::vector<EdgeProfile> enumerate_edge_profiles(
    const Params& p, const std::vector<VertexProfile>& vps) {
  require_valid(p);
  if (vps != enumerate_vertex_profiles(p))
    throw ParameterError("enumerate_edge_profiles: vertex profile list does "
                         "not match parameters");
  std::vector<EdgeProfile> out;
  for (const VertexProfile& l : vps) {
    if (l.side != Side::Left) continue;
    for (const VertexProfile& r : vps) {
      if (r.side != Side::Right) continue;
      for (int h = 0; h < 2; ++h) {
        for (int m = 0; m < 2; ++m) {
          for (int s = 0; s < 2; ++s) {
            EdgeProfile e{l, r, h != 0, m != 0, s != 0};
            if (edge_profile_valid(e, p)) out.push_back(e);
          }
        }
      }
    }
  }
  return out;
}

inline void to_json(nlohmann::json& j, const VertexProfile& v) {
  j = nlohmann::json{{"side", v.side == Side::Left ? "Left" : "Right"},
                     {"region", region_name(v.region)},
                     {"deg_h", v.deg_h},
                     {"in_m", v.in_m},
                     {"in_mstar", v.in_mstar}};
}

inline void to_json(nlohmann::json& j, const EdgeProfile& e) {
  j = nlohmann::json{{"left", e.left},
                     {"right", e.right},
                     {"in_h", e.in_h},
                     {"in_m", e.in_m},
                     {"in_mstar", e.in_mstar}};
}

}  // namespace edcs
