#pragma once

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "edcs/errors.hpp"
#include "edcs/lp.hpp"
#include "edcs/rational.hpp"
#include "edcs/simplex.hpp"

namespace edcs {

enum class SolveMode { Exact, Float };

struct RatioEntry {
  std::optional<Rational> exact;  // the ratio 1/optimum, exact mode only
  double ratio = 0.0;             // same value as a double, either mode
  SolveMode mode = SolveMode::Exact;
  long solve_millis = 0;
};

// One cell per valid (beta, beta_minus); the ratio is the reciprocal of
// the LP optimum.
struct RatioTable {
  std::map<std::pair<int, int>, RatioEntry> entries;
};

inline int worker_count() {
  if (const char* env = std::getenv("EDCS_WORKERS")) {
    int w = std::atoi(env);
    if (w < 1)
      throw ParameterError("EDCS_WORKERS must be a positive integer");
    return w;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

inline RatioEntry solve_cell(const Params& p, SolveMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  RatioEntry e;
  e.mode = mode;
  LinearProgram lp = build_lp(p);
  if (mode == SolveMode::Exact) {
    SolveResult<Rational> r = solve_exact(lp);
    if (r.status != SolveStatus::Optimal)
      throw OperationalError("solve_cell: exact solve did not reach Optimal");
    Rational ratio = Rational(1) / r.objective;
    ratio.canonicalize();
    e.exact = ratio;
    e.ratio = rational_to_double(ratio);
  } else {
    SolveResult<double> r = solve_float(lp);
    if (r.status != SolveStatus::Optimal)
      throw OperationalError("solve_cell: float solve did not reach Optimal");
    e.ratio = 1.0 / r.objective;
  }
  e.solve_millis = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return e;
}

// Solves every valid (beta, beta_minus) with beta <= max_beta, optionally
// restricted to the diagonals beta_minus = beta - c for c in `diagonals`.
// Mode: exact for beta <= exact_cutoff, float above. Cells are distributed
// over `workers` threads (each solve owns its data); the result map is
// keyed, so assembly order does not matter.
inline RatioTable sweep(int max_beta, const std::vector<int>& diagonals = {},
                        int exact_cutoff = 12, int workers = 0) {
  if (max_beta < 2) throw ParameterError("sweep: max_beta must be >= 2");
  if (workers <= 0) workers = worker_count();

  std::vector<Params> cells;
  for (int b = 2; b <= max_beta; ++b)
    for (int bm = 1; bm < b; ++bm) {
      if (!diagonals.empty() &&
          std::find(diagonals.begin(), diagonals.end(), b - bm) ==
              diagonals.end())
        continue;
      cells.push_back(Params{b, bm});
    }

  std::vector<RatioEntry> results(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<size_t> next{0};
  auto run = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      SolveMode mode = cells[i].beta <= exact_cutoff ? SolveMode::Exact
                                                     : SolveMode::Float;
      try {
        results[i] = solve_cell(cells[i], mode);
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  if (workers == 1 || cells.size() <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  for (size_t i = 0; i < cells.size(); ++i)
    if (!errors[i].empty())
      throw OperationalError("sweep: cell (" + std::to_string(cells[i].beta) +
                             "," + std::to_string(cells[i].beta_minus) +
                             ") failed: " + errors[i]);

  RatioTable table;
  for (size_t i = 0; i < cells.size(); ++i)
    table.entries[{cells[i].beta, cells[i].beta_minus}] = results[i];
  return table;
}

// 4-place decimal for table cells; exact entries use round-half-even on
// the rational, float entries the usual printf rounding.
inline std::string cell_decimal(const RatioEntry& e) {
  if (e.exact) return decimal_string(*e.exact, 4);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", e.ratio);
  return buf;
}

// CSV mirroring the ratio table layout: rows beta, columns beta_minus,
// hyphens where no EDCS exists (or the cell was not requested).
inline std::string table_to_csv(const RatioTable& t) {
  int max_beta = 0, max_bm = 0;
  for (const auto& [key, e] : t.entries) {
    max_beta = std::max(max_beta, key.first);
    max_bm = std::max(max_bm, key.second);
  }
  std::string out = "beta\\beta_minus";
  for (int bm = 1; bm <= max_bm; ++bm) out += "," + std::to_string(bm);
  out += "\n";
  for (int b = 2; b <= max_beta; ++b) {
    out += std::to_string(b);
    for (int bm = 1; bm <= max_bm; ++bm) {
      auto it = t.entries.find({b, bm});
      out += ",";
      out += it == t.entries.end() ? "-" : cell_decimal(it->second);
    }
    out += "\n";
  }
  return out;
}

inline nlohmann::json table_to_json(const RatioTable& t) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [key, e] : t.entries) {
    nlohmann::json c;
    c["beta"] = key.first;
    c["beta_minus"] = key.second;
    c["ratio"] = e.ratio;
    c["decimal"] = cell_decimal(e);
    if (e.exact) c["exact"] = rational_to_string(*e.exact);
    c["mode"] = e.mode == SolveMode::Exact ? "exact" : "float";
    c["solve_millis"] = e.solve_millis;
    cells.push_back(std::move(c));
  }
  return nlohmann::json{{"cells", std::move(cells)}};
}

// Self-contained SVG heatmap: one square per cell shaded by ratio, the
// grid maximum circled.
inline std::string table_to_svg(const RatioTable& t) {
  if (t.entries.empty()) throw ParameterError("table_to_svg: empty table");
  int max_beta = 0, max_bm = 0;
  double lo = 1.0, hi = 0.0;
  std::pair<int, int> best{0, 0};
  for (const auto& [key, e] : t.entries) {
    max_beta = std::max(max_beta, key.first);
    max_bm = std::max(max_bm, key.second);
    lo = std::min(lo, e.ratio);
    if (e.ratio > hi) {
      hi = e.ratio;
      best = key;
    }
  }
  const int cell = 28, margin = 48;
  const int width = margin + max_bm * cell + 16;
  const int height = margin + (max_beta - 1) * cell + 16;
  std::string s;
  char buf[256];
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
       std::to_string(width) + "\" height=\"" + std::to_string(height) +
       "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int bm = 1; bm <= max_bm; ++bm) {
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%d\" y=\"%d\" text-anchor=\"middle\">%d</text>\n",
                  margin + (bm - 1) * cell + cell / 2, margin - 8, bm);
    s += buf;
  }
  for (int b = 2; b <= max_beta; ++b) {
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%d\" y=\"%d\" text-anchor=\"end\">%d</text>\n",
                  margin - 6, margin + (b - 2) * cell + cell / 2 + 4, b);
    s += buf;
  }
  for (const auto& [key, e] : t.entries) {
    double f = hi > lo ? (e.ratio - lo) / (hi - lo) : 1.0;
    // light blue (low) to dark red (high)
    int r = static_cast<int>(40 + 200 * f);
    int g = static_cast<int>(80 + 60 * (1 - f));
    int bl = static_cast<int>(220 - 180 * f);
    int x = margin + (key.second - 1) * cell;
    int y = margin + (key.first - 2) * cell;
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" "
                  "fill=\"rgb(%d,%d,%d)\"><title>(%d,%d) %s</title></rect>\n",
                  x, y, cell, cell, r, g, bl, key.first, key.second,
                  cell_decimal(e).c_str());
    s += buf;
  }
  {
    int x = margin + (best.second - 1) * cell + cell / 2;
    int y = margin + (best.first - 2) * cell + cell / 2;
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%d\" cy=\"%d\" r=\"%d\" fill=\"none\" "
                  "stroke=\"green\" stroke-width=\"3\"/>\n",
                  x, y, cell / 2 - 2);
    s += buf;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace edcs
