#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "invals/instance.hpp"

using namespace invals;
using fixtures::one_x;
using fixtures::t1;
using fixtures::t2;
using fixtures::zero_x;

namespace {

bool mentions(const std::vector<std::string>& msgs, const std::string& needle) {
  for (const auto& m : msgs)
    if (m.find(needle) != std::string::npos) return true;
  return false;
}

AllocationPlan plan_with(const Instance& inst, std::vector<long long> day0_day1,
                         long long breach = 0) {
  AllocationPlan p = AllocationPlan::empty(inst);
  for (size_t t = 0; t < day0_day1.size(); ++t) p.d[0][t] = day0_day1[t];
  p.breach[0] = breach;
  return p;
}

}  // namespace

TEST_CASE("validate: well-formed instance") {
  ValidationReport rep = validate_instance(t1());
  CHECK(rep.ok());
}

TEST_CASE("validate: m > M") {
  Instance inst = t1();
  inst.trailer_min = 9;
  ValidationReport rep = validate_instance(inst);
  CHECK_FALSE(rep.ok());
  CHECK(mentions(rep.errors, "trailer_min exceeds trailer_max"));
}

TEST_CASE("validate: non-decreasing alpha") {
  Instance inst = t1();
  inst.alpha = {1, 1};
  ValidationReport rep = validate_instance(inst);
  CHECK(mentions(rep.errors, "not strictly decreasing"));
}

TEST_CASE("validate: gamma <= beta warns but passes") {
  Instance inst = t1();
  inst.gamma = 50;
  ValidationReport rep = validate_instance(inst);
  CHECK(rep.ok());
  CHECK_FALSE(rep.warnings.empty());
}

TEST_CASE("objective: T1 full plan") {
  Instance inst = t1();
  CHECK(evaluate_objective(inst, one_x(inst), plan_with(inst, {4, 4})) ==
        Rat(106));
}

TEST_CASE("objective: empty plan is zero") {
  Instance inst = t1();
  CHECK(evaluate_objective(inst, zero_x(inst), AllocationPlan::empty(inst)) == 0);
}

TEST_CASE("objective: T2 with forced breach") {
  Instance inst = t2();
  CHECK(evaluate_objective(inst, one_x(inst), plan_with(inst, {2, 0}, 1)) ==
        Rat(-898));
}

TEST_CASE("objective: dimension mismatch throws") {
  Instance inst = t1();
  TrailerAssignment x;  // wrong store count
  CHECK_THROWS_AS(evaluate_objective(inst, x, AllocationPlan::empty(inst)),
                  std::invalid_argument);
}

TEST_CASE("feasibility: T1 optimal plan is clean") {
  Instance inst = t1();
  CHECK(check_feasibility(inst, one_x(inst), plan_with(inst, {4, 4})).empty());
}

TEST_CASE("feasibility: allocation without trailers") {
  Instance inst = t1();
  auto report = check_feasibility(inst, zero_x(inst), plan_with(inst, {4, 4}));
  CHECK(mentions(report, "max-capacity"));
}

TEST_CASE("feasibility: under minimum fill") {
  Instance inst = t2();
  auto report = check_feasibility(inst, one_x(inst), plan_with(inst, {2, 0}));
  CHECK(mentions(report, "min-capacity"));
}

TEST_CASE("feasibility: breach above m") {
  Instance inst = t1();
  auto report =
      check_feasibility(inst, one_x(inst), plan_with(inst, {4, 4}, 5));
  CHECK(mentions(report, "breach"));
}

TEST_CASE("metrics: T1 utilizations") {
  Instance inst = t1();
  PlanMetrics m = compute_metrics(inst, one_x(inst), plan_with(inst, {4, 4}));
  CHECK(m.labour_utilization[0] == doctest::Approx(0.08));
  CHECK(m.trailer_utilization == doctest::Approx(1.0));
  CHECK(m.total_allocation == 8);
  CHECK(m.integrality_fraction == 1.0);
}

TEST_CASE("metrics: empty plan") {
  Instance inst = t1();
  PlanMetrics m =
      compute_metrics(inst, zero_x(inst), AllocationPlan::empty(inst));
  CHECK(m.labour_utilization[0] == 0.0);
  CHECK(m.trailer_utilization == 0.0);
  CHECK_FALSE(m.mean_pf_dos.has_value());
}

TEST_CASE("metrics: pull-forward DOS") {
  Instance inst = t1();
  PlanMetrics m = compute_metrics(inst, one_x(inst), plan_with(inst, {4, 3}));
  REQUIRE(m.mean_pf_dos.has_value());
  CHECK(*m.mean_pf_dos == doctest::Approx(1.0));
}

TEST_CASE("objective linearity in (d, b)") {
  Instance inst = fixtures::small(3);
  std::mt19937_64 rng(7);
  TrailerAssignment x = zero_x(inst);
  for (auto& v : x.x) v = static_cast<long long>(rng() % 3);
  for (int rep = 0; rep < 20; ++rep) {
    AllocationPlan p = AllocationPlan::empty(inst);
    for (auto& row : p.d)
      for (auto& v : row) v = static_cast<long long>(rng() % 3);
    for (auto& b : p.breach) b = static_cast<long long>(rng() % 2);
    AllocationPlan doubled = p;
    for (auto& row : doubled.d)
      for (auto& v : row) v *= 2;
    for (auto& b : doubled.breach) b *= 2;

    Rat base = evaluate_objective(inst, x, p);
    Rat twice = evaluate_objective(inst, x, doubled);
    Rat priority_part = 0;
    for (int j = 0; j < inst.num_stores(); ++j)
      priority_part += inst.beta * inst.store_priority[j] * x.x[j];
    CHECK(twice - priority_part == 2 * (base - priority_part));
  }
}

TEST_CASE("objective decomposes into g-part plus priority part") {
  Instance inst = t2();
  AllocationPlan p = plan_with(inst, {2, 0}, 1);
  TrailerAssignment x = one_x(inst);
  Rat full = evaluate_objective(inst, x, p);
  Rat g_part = Rat(2) - inst.gamma * 1;  // alpha0 q d - gamma b
  CHECK(full == g_part + inst.beta * inst.store_priority[0] * 1);
}
