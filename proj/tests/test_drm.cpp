#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "invals/drm.hpp"
#include "invals/exact_oracle.hpp"

using namespace invals;
using fixtures::one_x;
using fixtures::t1;

TEST_CASE("root finder: logistic dual") {
  auto f = [](double a) { return -1.0 + 2.0 / (1.0 + std::exp(a)); };
  double a = root_find_monotone(f, -10, 10, 1e-12);
  CHECK(a == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("root finder: identity") {
  double a = root_find_monotone([](double v) { return v; }, -1, 2, 1e-12);
  CHECK(a == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("root finder requires a bracket") {
  CHECK_THROWS_AS(
      root_find_monotone([](double v) { return v + 10; }, -1, 2, 1e-12),
      std::invalid_argument);
}

TEST_CASE("single-cell instance converges to the unique point") {
  CotInstance cot;
  cot.supply = {5};
  cot.need = {5};
  cot.num_real_items = 1;
  cot.num_real_stores = 1;
  cot.b_source = cot.z_source = 1;    // no pseudo sources
  cot.first_labour_sink = cot.surplus_sink = 1;
  cot.total_mass = 5;
  cot.cells.push_back({0, 0, 0, 5, Rat(2)});
  DrmSolution sol = drm_solve(cot, DrmParams{});
  CHECK(sol.state.converged);
  CHECK(sol.d[0] == doctest::Approx(5.0).epsilon(1e-5));
  CHECK(sol.state.residual <= 1e-6);
}

TEST_CASE("T1 probe objective lands near the exact value") {
  Instance inst = t1();
  auto exact = value_oracle_exact(inst, one_x(inst), CotVariant::probe);
  REQUIRE(exact.has_value());
  DrmParams params;
  params.mu = 0.01;  // small regularization so the smoothed value is close
  auto drm = value_oracle_drm(inst, one_x(inst), CotVariant::probe, params);
  REQUIRE(drm.has_value());
  CHECK(drm->converged);
  CHECK(std::abs(drm->value - to_double(*exact)) <=
        0.02 * std::abs(to_double(*exact)));
}

TEST_CASE("zero assignment short-circuits") {
  Instance inst = t1();
  auto drm = value_oracle_drm(inst, fixtures::zero_x(inst), CotVariant::probe,
                              DrmParams{});
  REQUIRE(drm.has_value());
  CHECK(drm->value == 0.0);
}

TEST_CASE("gap shrinks as mu goes to zero") {
  Instance inst = t1();
  auto exact = value_oracle_exact(inst, one_x(inst), CotVariant::probe);
  REQUIRE(exact.has_value());
  const double target = to_double(*exact);
  double prev_gap = -1;
  std::vector<double> gaps;
  for (double mu : {1.0, 0.1, 0.01}) {
    DrmParams p;
    p.mu = mu;
    auto drm = value_oracle_drm(inst, one_x(inst), CotVariant::probe, p);
    REQUIRE(drm.has_value());
    gaps.push_back(std::abs(drm->value - target));
  }
  CHECK(gaps.back() < gaps.front());
  CHECK(gaps.back() <= 0.01 * std::abs(target) + 1e-9);
  (void)prev_gap;
}

TEST_CASE("marginals and caps at convergence") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Instance inst = trim_shelf_capacity(fixtures::medium_small(seed));
    TrailerAssignment x = fixtures::zero_x(inst);
    x.x[0] = 1;
    x.x[1] = 1;
    CotInstance cot;
    try {
      cot = build_cot(inst, x, CotVariant::probe);
    } catch (const std::invalid_argument&) {
      continue;
    }
    DrmSolution sol = drm_solve(cot, DrmParams{});
    if (!sol.state.converged) continue;
    CHECK(sol.state.residual <= 1e-6);
    std::vector<double> row(cot.supply.size(), 0), col(cot.need.size(), 0);
    for (size_t c = 0; c < cot.cells.size(); ++c) {
      CHECK(sol.d[c] >= -1e-9);
      CHECK(sol.d[c] <= cot.cells[c].cap + 1e-9);
      row[cot.cells[c].source] += sol.d[c];
      col[cot.cells[c].sink] += sol.d[c];
    }
    const double tol = 1e-6 * static_cast<double>(cot.total_mass) + 1e-9;
    for (size_t i = 0; i < row.size(); ++i)
      CHECK(std::abs(row[i] - static_cast<double>(cot.supply[i])) <= tol);
    for (size_t j = 0; j < col.size(); ++j)
      CHECK(std::abs(col[j] - static_cast<double>(cot.need[j])) <= tol);
  }
}

TEST_CASE("deterministic across repeated solves") {
  Instance inst = trim_shelf_capacity(fixtures::medium_small(3));
  TrailerAssignment x = fixtures::zero_x(inst);
  x.x[0] = 1;
  CotInstance cot = build_cot(inst, x, CotVariant::probe);
  DrmSolution a = drm_solve(cot, DrmParams{});
  DrmSolution b = drm_solve(cot, DrmParams{});
  CHECK(a.objective == b.objective);
  CHECK(a.d == b.d);
  CHECK(a.state.iterations == b.state.iterations);
}

TEST_CASE("candidate ranking matches the exact oracle") {
  Instance inst = trim_shelf_capacity(fixtures::medium_small(5));
  TrailerAssignment x = fixtures::zero_x(inst);
  int best_exact = -1, best_drm = -1;
  double best_exact_v = 0, best_drm_v = 0;
  for (int k = 0; k < inst.num_stores(); ++k) {
    auto e = value_oracle_exact(inst, x.plus_one(k), CotVariant::probe);
    auto d = value_oracle_drm(inst, x.plus_one(k), CotVariant::probe, DrmParams{});
    REQUIRE(e.has_value());
    REQUIRE(d.has_value());
    double ev = to_double(*e) +
                to_double(inst.beta) * static_cast<double>(inst.store_priority[k]);
    double dv = d->value +
                to_double(inst.beta) * static_cast<double>(inst.store_priority[k]);
    if (best_exact < 0 || ev > best_exact_v) best_exact = k, best_exact_v = ev;
    if (best_drm < 0 || dv > best_drm_v) best_drm = k, best_drm_v = dv;
  }
  CHECK(best_exact == best_drm);
}
