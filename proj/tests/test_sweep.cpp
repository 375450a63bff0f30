#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <edcs/sweep.hpp>

using namespace edcs;

TEST_CASE("sweep covers exactly the valid cells") {
  RatioTable t = sweep(4);
  CHECK(t.entries.size() == 6);  // (2,1) (3,1) (3,2) (4,1) (4,2) (4,3)
  CHECK(t.entries.count({2, 1}) == 1);
  CHECK(t.entries.count({4, 3}) == 1);
  CHECK(t.entries.count({2, 2}) == 0);
  CHECK(t.entries.at({2, 1}).exact.value() == make_rational(1, 2));
  CHECK(t.entries.at({4, 2}).exact.value() == make_rational(2, 5));
  CHECK(t.entries.at({4, 3}).exact.value() == make_rational(5, 8));
}

TEST_CASE("diagonal restriction") {
  RatioTable t = sweep(6, {1});
  CHECK(t.entries.size() == 5);  // (b, b-1) for b in 2..6
  for (const auto& [key, e] : t.entries) CHECK(key.first - key.second == 1);
  CHECK(t.entries.at({6, 5}).exact.value() == make_rational(21, 31));
}

TEST_CASE("float cells above the exact cutoff") {
  RatioTable t = sweep(4, {}, /*exact_cutoff=*/3);
  CHECK(t.entries.at({3, 2}).exact.has_value());
  CHECK(!t.entries.at({4, 3}).exact.has_value());
  CHECK(t.entries.at({4, 3}).mode == SolveMode::Float);
  CHECK(t.entries.at({4, 3}).ratio == doctest::Approx(0.625).epsilon(1e-6));
}

TEST_CASE("csv layout mirrors the table") {
  RatioTable t = sweep(4);
  std::string csv = table_to_csv(t);
  CHECK(csv ==
        "beta\\beta_minus,1,2,3\n"
        "2,0.5000,-,-\n"
        "3,0.3333,0.5000,-\n"
        "4,0.2500,0.4000,0.6250\n");
  CHECK(table_to_csv(t) == csv);  // deterministic
}

TEST_CASE("json cells carry exact fractions") {
  RatioTable t = sweep(3);
  auto j = table_to_json(t);
  REQUIRE(j["cells"].size() == 3);
  bool saw = false;
  for (const auto& c : j["cells"])
    if (c["beta"] == 2 && c["beta_minus"] == 1) {
      CHECK(c["exact"].get<std::string>() == "1/2");
      CHECK(c["mode"].get<std::string>() == "exact");
      saw = true;
    }
  CHECK(saw);
}

TEST_CASE("svg heatmap is self-contained and circles the maximum") {
  RatioTable t = sweep(4);
  std::string svg = table_to_svg(t);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find("(4,3) 0.6250") != std::string::npos);  // the maximum
  CHECK(svg.find("href") == std::string::npos);          // no external refs
}

TEST_CASE("parallel and serial sweeps agree") {
  RatioTable a = sweep(5, {}, 12, 1);
  RatioTable b = sweep(5, {}, 12, 4);
  REQUIRE(a.entries.size() == b.entries.size());
  for (const auto& [key, e] : a.entries)
    CHECK(e.exact.value() == b.entries.at(key).exact.value());
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(sweep(1), ParameterError);
}
