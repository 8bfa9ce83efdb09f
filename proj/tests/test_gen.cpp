#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invals/gen.hpp"
#include "invals/io.hpp"

using namespace invals;

TEST_CASE("same seed gives bitwise-identical instances") {
  GenConfig cfg = preset("expD");
  cfg.seed = 42;
  Instance a = generate(cfg);
  Instance b = generate(cfg);
  CHECK(instance_to_json(a).dump() == instance_to_json(b).dump());
}

TEST_CASE("pf disabled forces single-day horizons") {
  GenConfig cfg = preset("expA");
  cfg.seed = 3;
  Instance inst = generate(cfg);
  for (int h : inst.horizon) CHECK(h == 0);
  for (const auto& d : inst.demand) CHECK(d.size() == 1);
}

TEST_CASE("constant q mode sets q to one") {
  GenConfig cfg = preset("expC");
  cfg.seed = 3;
  Instance inst = generate(cfg);
  for (const auto& qs : inst.item_store_priority)
    for (const Rat& q : qs) CHECK(q == 1);
}

TEST_CASE("pf and price knobs do not disturb the demand draw") {
  GenConfig c = preset("expC");
  GenConfig d = preset("expD");
  c.seed = d.seed = 11;
  Instance ic = generate(c);
  Instance id = generate(d);
  CHECK(ic.demand == id.demand);
  CHECK(ic.inventory == id.inventory);
  CHECK(ic.labour_capacity == id.labour_capacity);
  CHECK(ic.store_priority == id.store_priority);
  GenConfig a = preset("expA");
  GenConfig b = preset("expB");
  a.seed = b.seed = 11;
  Instance ia = generate(a);
  Instance ib = generate(b);
  CHECK(ia.labour_capacity == ib.labour_capacity);
  for (size_t cell = 0; cell < ia.demand.size(); ++cell)
    CHECK(ia.demand[cell][0] == ib.demand[cell][0]);
}

TEST_CASE("preset knobs") {
  CHECK(preset("expA").pf_enabled == false);
  CHECK(preset("expA").gamma == 0);
  CHECK(preset("expB").pf_enabled == true);
  CHECK(preset("expB").gamma == 0);
  CHECK(preset("expC").q_mode == QMode::constant);
  CHECK(preset("expD").q_mode == QMode::proportional);
  CHECK(preset("expD").gamma > preset("expD").beta);
  CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
}

TEST_CASE("small-corpus stays within the enumeration budget") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenConfig cfg = preset("small-corpus");
    cfg.seed = seed;
    Instance inst = generate(cfg);
    long long product = 1;
    for (const auto& dem : inst.demand)
      for (long long v : dem) {
        product *= v + 1;
        REQUIRE(product <= 10'000'000);
      }
  }
}

TEST_CASE("generated instances always validate") {
  for (const char* name :
       {"expA", "expB", "expC", "expD", "small-corpus"}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      GenConfig cfg = preset(name);
      cfg.seed = seed;
      ValidationReport rep = validate_instance(generate(cfg));
      CHECK(rep.ok());
    }
  }
  GenConfig mb = preset("medium-bench");
  CHECK(validate_instance(generate(mb)).ok());
}

TEST_CASE("bad configs are rejected") {
  GenConfig cfg;
  cfg.num_items = 0;
  CHECK_THROWS_AS(generate(cfg), std::invalid_argument);
  cfg = GenConfig{};
  cfg.trailer_min = cfg.trailer_max + 1;
  CHECK_THROWS_AS(generate(cfg), std::invalid_argument);
  cfg = GenConfig{};
  cfg.alpha_num = 3;
  cfg.alpha_den = 2;
  CHECK_THROWS_AS(generate(cfg), std::invalid_argument);
}
