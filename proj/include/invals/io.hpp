#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <json.hpp>

#include "invals/instance.hpp"
#include "invals/reduction.hpp"

namespace invals {

using Json = nlohmann::ordered_json;

// Instance documents are JSON with sparse per-(item,store[,day]) sections:
// absent demand / item_store_priority entries mean 0, an absent horizon
// entry means day 0 only, and an absent shelf entry means "no shelf bound"
// (stored as the pair's total demand). Rationals are strings ("1/2", "0.25").
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& doc);

// Plan documents list only nonzero quantities, in (item, store, day) index
// order, so equal plans serialize to identical bytes.
Json plan_to_json(const Instance& inst, const TrailerAssignment& x,
                  const AllocationPlan& plan);
std::pair<TrailerAssignment, AllocationPlan> plan_from_json(
    const Instance& inst, const Json& doc);

Json cot_to_json(const CotInstance& cot);

std::string metrics_csv_header();
std::string metrics_csv_row(const PlanMetrics& m);

Json load_json(const std::string& path);
void save_json(const Json& doc, const std::string& path);

// FNV-1a over the canonical serialization; identifies an instance in CSV
// outputs.
std::string instance_digest(const Instance& inst);

}  // namespace invals
