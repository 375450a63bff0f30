#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "edcs/errors.hpp"
#include "edcs/profiles.hpp"
#include "edcs/rational.hpp"

namespace edcs {

using SparseRow = std::vector<std::pair<int, Rational>>;  // (var index, coeff)

// Equality-form LP: maximize obj subject to eq_rows, x >= 0.
// Variables are vertex profiles first (in enumeration order), then edge
// profiles. Exactly one row (the normalization row) has rhs 1; all other
// rhs are 0.
struct LinearProgram {
  Params params;
  int num_vars = 0;
  int num_vertex_vars = 0;  // variables [0, num_vertex_vars) are vertex vars
  std::vector<std::pair<int, Rational>> objective;
  std::vector<std::pair<SparseRow, Rational>> eq_rows;
  std::vector<std::string> row_names;
  std::vector<std::string> var_names;
  std::vector<VertexProfile> vertex_profiles;
  std::vector<EdgeProfile> edge_profiles;

  bool is_vertex_var(int j) const { return j < num_vertex_vars; }
};

struct Assignment {
  std::vector<Rational> values;
};

struct FeasibilityReport {
  std::vector<int> violated_rows;      // indices into lp.eq_rows
  std::vector<int> negative_vars;      // variables with value < 0
  Rational objective;

  bool feasible() const {
    return violated_rows.empty() && negative_vars.empty();
  }
};

// Assembles the factor-revealing LP for (beta, beta_minus):
//   (a) per vertex profile v with deg_h >= 1:  sum_{e in H(v)} x_e = deg * x_v
//   (b) per v matched in M:                    sum_{e in M(v)} x_e = x_v
//   (c) per v matched in M*:                   sum_{e in M*(v)} x_e = x_v
//   (d) normalization:                         sum_{e in M} x_e = 1
// objective: maximize sum_{e in M*} x_e.
// Degree rows for deg_h = 0 profiles are vacuous (no incident H edge
// profiles exist) and are omitted.
inline LinearProgram build_lp(const Params& p) {
  require_valid(p);
  LinearProgram lp;
  lp.params = p;
  lp.vertex_profiles = enumerate_vertex_profiles(p);
  lp.edge_profiles = enumerate_edge_profiles(p, lp.vertex_profiles);
  lp.num_vertex_vars = static_cast<int>(lp.vertex_profiles.size());
  lp.num_vars =
      lp.num_vertex_vars + static_cast<int>(lp.edge_profiles.size());

  lp.var_names.reserve(lp.num_vars);
  for (size_t i = 0; i < lp.vertex_profiles.size(); ++i)
    lp.var_names.push_back("xv" + std::to_string(i));
  for (size_t i = 0; i < lp.edge_profiles.size(); ++i)
    lp.var_names.push_back("xe" + std::to_string(i));

  const int nv = lp.num_vertex_vars;
  const Rational one(1), minus_one(-1);

  // Incidence of edge-profile variables on their endpoint vertex profiles.
  std::vector<SparseRow> h_rows(nv), m_rows(nv), ms_rows(nv);
  auto vp_index = [&](const VertexProfile& v) {
    auto it = std::lower_bound(lp.vertex_profiles.begin(),
                               lp.vertex_profiles.end(), v);
    return static_cast<int>(it - lp.vertex_profiles.begin());
  };
  for (size_t k = 0; k < lp.edge_profiles.size(); ++k) {
    const EdgeProfile& e = lp.edge_profiles[k];
    int var = nv + static_cast<int>(k);
    int li = vp_index(e.left), ri = vp_index(e.right);
    if (e.in_h) {
      h_rows[li].emplace_back(var, one);
      h_rows[ri].emplace_back(var, one);
    }
    if (e.in_m) {
      m_rows[li].emplace_back(var, one);
      m_rows[ri].emplace_back(var, one);
    }
    if (e.in_mstar) {
      ms_rows[li].emplace_back(var, one);
      ms_rows[ri].emplace_back(var, one);
    }
  }

  for (int i = 0; i < nv; ++i) {
    const VertexProfile& v = lp.vertex_profiles[i];
    if (v.deg_h < 1) continue;
    SparseRow row = h_rows[i];
    row.emplace_back(i, Rational(-v.deg_h));
    lp.eq_rows.emplace_back(std::move(row), Rational(0));
    lp.row_names.push_back("deg_v" + std::to_string(i));
  }
  for (int i = 0; i < nv; ++i) {
    if (!lp.vertex_profiles[i].in_m) continue;
    SparseRow row = m_rows[i];
    row.emplace_back(i, minus_one);
    lp.eq_rows.emplace_back(std::move(row), Rational(0));
    lp.row_names.push_back("m_v" + std::to_string(i));
  }
  for (int i = 0; i < nv; ++i) {
    if (!lp.vertex_profiles[i].in_mstar) continue;
    SparseRow row = ms_rows[i];
    row.emplace_back(i, minus_one);
    lp.eq_rows.emplace_back(std::move(row), Rational(0));
    lp.row_names.push_back("ms_v" + std::to_string(i));
  }
  SparseRow norm;
  for (size_t k = 0; k < lp.edge_profiles.size(); ++k)
    if (lp.edge_profiles[k].in_m)
      norm.emplace_back(nv + static_cast<int>(k), one);
  lp.eq_rows.emplace_back(std::move(norm), one);
  lp.row_names.push_back("norm");

  for (size_t k = 0; k < lp.edge_profiles.size(); ++k)
    if (lp.edge_profiles[k].in_mstar)
      lp.objective.emplace_back(nv + static_cast<int>(k), one);
  return lp;
}

inline Rational eval_objective(const LinearProgram& lp,
                               const std::vector<Rational>& x) {
  Rational v(0);
  for (const auto& [j, c] : lp.objective) v += c * x[static_cast<size_t>(j)];
  return v;
}

// Exact rational evaluation of every row plus nonnegativity.
inline FeasibilityReport check_assignment(const LinearProgram& lp,
                                          const Assignment& x) {
  if (static_cast<int>(x.values.size()) != lp.num_vars)
    throw ParameterError("check_assignment: expected " +
                         std::to_string(lp.num_vars) + " values, got " +
                         std::to_string(x.values.size()));
  FeasibilityReport rep;
  for (int j = 0; j < lp.num_vars; ++j)
    if (x.values[static_cast<size_t>(j)] < 0) rep.negative_vars.push_back(j);
  for (size_t r = 0; r < lp.eq_rows.size(); ++r) {
    Rational lhs(0);
    for (const auto& [j, c] : lp.eq_rows[r].first)
      lhs += c * x.values[static_cast<size_t>(j)];
    if (lhs != lp.eq_rows[r].second)
      rep.violated_rows.push_back(static_cast<int>(r));
  }
  rep.objective = eval_objective(lp, x.values);
  return rep;
}

namespace detail {

// Exact decimal when the fraction terminates; otherwise 18 digits with the
// exact fraction carried in a trailing LP-format comment.
inline void append_coeff(std::string& out, const Rational& c,
                         const std::string& var, bool first,
                         std::vector<std::string>* inexact) {
  Rational a = abs(c);
  std::string mag;
  if (has_finite_decimal(a)) {
    if (a.get_den() == 1) {
      mag = a.get_num().get_str();
    } else {
      int places = 0;
      mpz_class d = a.get_den();
      while (d % 2 == 0) { d /= 2; ++places; }
      int p5 = 0;
      while (d % 5 == 0) { d /= 5; ++p5; }
      if (p5 > places) places = p5;
      mag = decimal_string(a, places);
    }
  } else {
    mag = decimal_string(a, 18);
    if (inexact)
      inexact->push_back(var + " = " + rational_to_string(c));
  }
  if (first) {
    if (c < 0) out += "- ";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag != "1") out += mag + " ";
  out += var;
}

}  // namespace detail

// CPLEX-style LP text. Deterministic bytes for a given model.
inline std::string export_lp_text(const LinearProgram& lp) {
  std::string out;
  std::vector<std::string> inexact;
  out += "\\ factor-revealing LP for (" + std::to_string(lp.params.beta) +
         ", " + std::to_string(lp.params.beta_minus) + ")-EDCS\n";
  out += "Maximize\n obj: ";
  bool first = true;
  for (const auto& [j, c] : lp.objective) {
    detail::append_coeff(out, c, lp.var_names[static_cast<size_t>(j)], first,
                         &inexact);
    first = false;
  }
  out += "\nSubject To\n";
  for (size_t r = 0; r < lp.eq_rows.size(); ++r) {
    out += " " + lp.row_names[r] + ": ";
    first = true;
    for (const auto& [j, c] : lp.eq_rows[r].first) {
      detail::append_coeff(out, c, lp.var_names[static_cast<size_t>(j)],
                           first, &inexact);
      first = false;
    }
    out += " = ";
    const Rational& rhs = lp.eq_rows[r].second;
    out += rhs.get_den() == 1 ? rhs.get_num().get_str()
                              : decimal_string(rhs, 18);
    out += "\n";
  }
  out += "Bounds\n";
  for (const auto& name : lp.var_names) out += " " + name + " >= 0\n";
  if (!inexact.empty()) {
    out += "\\ exact fractions for non-terminating coefficients:\n";
    for (const auto& s : inexact) out += "\\ " + s + "\n";
  }
  out += "End\n";
  return out;
}

// Full model dump: variables with their profile descriptions, rows, rhs.
inline nlohmann::json lp_to_json(const LinearProgram& lp) {
  nlohmann::json vars = nlohmann::json::array();
  for (size_t i = 0; i < lp.vertex_profiles.size(); ++i) {
    nlohmann::json v;
    v["name"] = lp.var_names[i];
    v["kind"] = "vertex";
    v["profile"] = lp.vertex_profiles[i];
    vars.push_back(std::move(v));
  }
  for (size_t i = 0; i < lp.edge_profiles.size(); ++i) {
    nlohmann::json v;
    v["name"] = lp.var_names[lp.vertex_profiles.size() + i];
    v["kind"] = "edge";
    v["profile"] = lp.edge_profiles[i];
    vars.push_back(std::move(v));
  }
  nlohmann::json rows = nlohmann::json::array();
  for (size_t r = 0; r < lp.eq_rows.size(); ++r) {
    nlohmann::json row;
    row["name"] = lp.row_names[r];
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [j, c] : lp.eq_rows[r].first)
      terms.push_back({{"var", lp.var_names[static_cast<size_t>(j)]},
                       {"coeff", rational_to_string(c)}});
    row["terms"] = std::move(terms);
    row["rhs"] = rational_to_string(lp.eq_rows[r].second);
    rows.push_back(std::move(row));
  }
  nlohmann::json obj = nlohmann::json::array();
  for (const auto& [j, c] : lp.objective)
    obj.push_back({{"var", lp.var_names[static_cast<size_t>(j)]},
                   {"coeff", rational_to_string(c)}});
  return nlohmann::json{{"beta", lp.params.beta},
                        {"beta_minus", lp.params.beta_minus},
                        {"num_vars", lp.num_vars},
                        {"variables", std::move(vars)},
                        {"objective", std::move(obj)},
                        {"rows", std::move(rows)}};
}

}  // namespace edcs
