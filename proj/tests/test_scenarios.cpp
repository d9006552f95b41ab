#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "focalpair/closed_form.hpp"
#include "focalpair/concurrence.hpp"
#include "focalpair/scenarios.hpp"

using namespace focalpair;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Csv read_csv(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  Csv csv;
  std::string line;
  REQUIRE(std::getline(in, line));
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) csv.header.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream rs(line);
    while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
    REQUIRE(row.size() == csv.header.size());
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

std::string golden(const std::string& name) {
  return std::string(GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("time grids are uniform and include the endpoint when it fits") {
  const std::vector<double> g = sample_grid(6.0, 0.01);
  REQUIRE(g.size() == 601);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 6.0);
  CHECK(g[7] == 0.07);  // exact decimal, not 7 * 0.01 rounding
  CHECK(g[40] == 0.4);
  const std::vector<double> h = sample_grid(1.0, 0.03);
  REQUIRE(h.size() == 34);
  CHECK(h.back() == Approx(0.99));
  CHECK_THROWS_AS(sample_grid(-1.0, 0.01), std::domain_error);
  CHECK_THROWS_AS(sample_grid(1.0, 0.0), std::domain_error);
}

TEST_CASE("a scenario run samples the closed form with its concurrence") {
  Scenario sc{"x", InitialKind::one_excited, {1.0, 0.5 * kPi, 0.4}, 6.0, {}};
  const Trajectory tr = run_scenario(sc, 0.01, true);
  REQUIRE(tr.size() == 601);
  REQUIRE(tr.concurrence.size() == 601);
  REQUIRE(tr.oracle_residual.has_value());
  CHECK(*tr.oracle_residual <= 1e-6);
  CHECK(tr.states[40].rho_as.real() == Approx(0.5 * std::exp(-0.4)).margin(1e-12));
  CHECK(tr.concurrence[40] == 0.0);
  CHECK(tr.concurrence[240] ==
        Approx(concurrence_closed_one_excited(sc.params, 2.4)).margin(1e-14));
}

TEST_CASE("scenario validation") {
  Scenario sc{"x", InitialKind::one_excited, {1.5, 0.0, 0.4}, 6.0, {}};
  CHECK_THROWS_AS(run_scenario(sc, 0.01, false), std::domain_error);
  sc.params.kappa = 0.5;
  CHECK_THROWS_AS(run_scenario(sc, 0.05, false), std::domain_error);
  sc.t_max = -1.0;
  CHECK_THROWS_AS(run_scenario(sc, 0.01, false), std::domain_error);
}

TEST_CASE("presets cover the published panels") {
  const auto& all = figure_presets();
  REQUIRE(all.size() == 6);
  for (int n = 2; n <= 7; ++n) CHECK_NOTHROW(figure_preset(n));
  CHECK_THROWS_AS(figure_preset(1), std::invalid_argument);
  CHECK_THROWS_AS(figure_preset(8), std::invalid_argument);

  const FigurePreset& two = figure_preset(2);
  REQUIRE(two.curves.size() == 4);
  CHECK(two.curves[0].name == "kappa0.4");
  CHECK(two.curves[3].name == "kappa1.0");
  CHECK(two.curves[0].params.phase == Approx(0.5 * kPi));
  CHECK(two.curves[0].t_max == 6.0);

  const FigurePreset& four = figure_preset(4);
  REQUIRE(four.curves.size() == 1);
  REQUIRE(four.curves[0].outputs.size() == 2);
  CHECK(four.curves[0].outputs[1] == Observable::rho_aa);

  const FigurePreset& five = figure_preset(5);
  CHECK(five.curves.empty());
  REQUIRE(five.sweep.has_value());
  CHECK(five.sweep->axis1.name == "phase");
  REQUIRE(five.sweep->axis1.values.size() == 81);
  CHECK(five.sweep->axis1.values.back() == Approx(4.0 * kPi));

  const FigurePreset& six = figure_preset(6);
  CHECK(six.curves[0].initial == InitialKind::both_excited);
  const FigurePreset& seven = figure_preset(7);
  REQUIRE(seven.sweep.has_value());
  CHECK(seven.sweep->base.initial == InitialKind::both_excited);
  CHECK(seven.sweep->base.t_max == 10.0);
}

TEST_CASE("sweeps lay out axis-major long-form rows") {
  SweepGrid g;
  g.axis1 = {"kappa", {0.2, 0.8}};
  g.base = {"s", InitialKind::one_excited, {0.0, 0.5 * kPi, 0.4}, 1.0, {}};
  g.dt_sample = 0.01;
  const SweepTable table = run_sweep(g);
  REQUIRE(table.columns ==
          std::vector<std::string>{"kappa", "t", "concurrence"});
  REQUIRE(table.rows.size() == 202);
  CHECK(table.rows[0][0] == 0.2);
  CHECK(table.rows[101][0] == 0.8);
  CHECK(table.rows[0][1] == 0.0);
  CHECK(table.rows[100][1] == 1.0);
  // spot check one value against a direct run
  Scenario direct = g.base;
  direct.params.kappa = 0.8;
  const Trajectory tr = run_scenario(direct, 0.01, false);
  CHECK(table.rows[101 + 70][2] == Approx(tr.concurrence[70]).margin(1e-15));
}

TEST_CASE("two-axis sweeps nest the second axis inside the first") {
  SweepGrid g;
  g.axis1 = {"kappa", {0.3, 0.6}};
  g.axis2 = SweepAxis{"phase", {0.0, kPi}};
  g.base = {"s", InitialKind::both_excited, {0.0, 0.0, 0.4}, 0.5, {}};
  g.dt_sample = 0.01;
  const SweepTable table = run_sweep(g);
  REQUIRE(table.columns == std::vector<std::string>{"kappa", "phase", "t",
                                                    "concurrence"});
  REQUIRE(table.rows.size() == 2 * 2 * 51);
  CHECK(table.rows[0][1] == 0.0);
  CHECK(table.rows[51][1] == Approx(kPi));
  CHECK(table.rows[2 * 51][0] == 0.6);
  CHECK_THROWS_AS((run_sweep(SweepGrid{{"bogus", {1.0}}, {}, g.base, 0.01})),
                  std::invalid_argument);
}

TEST_CASE("preset curves reproduce their golden tables") {
  struct Entry {
    const char* file;
    int figure;
    std::size_t curve;
  };
  for (const Entry& e : {Entry{"fig2_kappa1.0.csv", 2, 3},
                         Entry{"fig3_kappa0.4.csv", 3, 0},
                         Entry{"fig4_kappa0.5.csv", 4, 0},
                         Entry{"fig6_kappa0.5.csv", 6, 0}}) {
    const FigurePreset& preset = figure_preset(e.figure);
    const Scenario& sc = preset.curves[e.curve];
    const Csv csv = read_csv(golden(e.file));
    const Trajectory tr = run_scenario(sc, preset.dt_sample, false);
    REQUIRE(csv.rows.size() == tr.size());
    for (std::size_t i = 0; i < csv.rows.size(); i += 7) {
      CHECK(csv.rows[i][0] == Approx(tr.times[i]).margin(1e-9));
      CHECK(csv.rows[i][1] == Approx(tr.concurrence[i]).margin(1e-6));
    }
    if (e.figure == 4) {
      for (std::size_t i = 0; i < csv.rows.size(); i += 7) {
        CHECK(csv.rows[i][2] == Approx(tr.states[i].rho_aa).margin(1e-6));
      }
    }
  }
}

TEST_CASE("sweep surfaces reproduce their decimated goldens") {
  for (int figure : {5, 7}) {
    const FigurePreset& preset = figure_preset(figure);
    const Csv csv = read_csv(
        golden("fig" + std::to_string(figure) + "_surface.csv"));
    REQUIRE(csv.header == std::vector<std::string>{"phase", "t", "concurrence"});
    const InitialCondition init =
        preset.sweep->base.initial == InitialKind::one_excited
            ? InitialCondition::one_excited()
            : InitialCondition::both_excited();
    for (std::size_t i = 0; i < csv.rows.size(); i += 11) {
      SystemParams p = preset.sweep->base.params;
      // the stored phase is rounded to six digits; snap back to the exact
      // axis value before re-evaluating
      p.phase = preset.sweep->axis1.values[0];
      for (double v : preset.sweep->axis1.values) {
        if (std::abs(v - csv.rows[i][0]) < std::abs(p.phase - csv.rows[i][0])) {
          p.phase = v;
        }
      }
      const double c =
          concurrence_x(evolve_closed_form(p, init, csv.rows[i][1]));
      CHECK(csv.rows[i][2] == Approx(c).margin(1e-6));
    }
  }
}
