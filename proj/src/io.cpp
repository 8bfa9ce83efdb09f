#include "invals/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace invals {
namespace {

int index_of(const std::vector<std::string>& ids, const std::string& id,
             const char* what) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end())
    throw std::invalid_argument(std::string(what) + " id not found: " + id);
  return static_cast<int>(it - ids.begin());
}

long long get_ll(const Json& v, const char* what) {
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string(what) + ": expected an integer");
  return v.get<long long>();
}

Rat get_rat(const Json& v, const char* what) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument(std::string(what) +
                              ": expected an integer or a rational string");
}

}  // namespace

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["items"] = inst.items;
  doc["stores"] = inst.stores;
  Json cats = Json::array();
  for (int l = 0; l < inst.num_categories(); ++l) {
    Json members = Json::array();
    for (int i : inst.category_items[l]) members.push_back(inst.items[i]);
    cats.push_back({{"id", inst.categories[l]}, {"items", members}});
  }
  doc["categories"] = cats;
  Json labour = Json::object();
  for (int l = 0; l < inst.num_categories(); ++l)
    labour[inst.categories[l]] = inst.labour_capacity[l];
  doc["labour_capacity"] = labour;
  Json inv = Json::object();
  for (int i = 0; i < inst.num_items(); ++i)
    inv[inst.items[i]] = inst.inventory[i];
  doc["inventory"] = inv;
  doc["trailer_max"] = inst.trailer_max;
  doc["trailer_min"] = inst.trailer_min;
  Json maxtr = Json::object(), prio = Json::object();
  for (int j = 0; j < inst.num_stores(); ++j) {
    maxtr[inst.stores[j]] = inst.max_trailers[j];
    prio[inst.stores[j]] = inst.store_priority[j];
  }
  doc["max_trailers"] = maxtr;
  doc["store_priority"] = prio;

  Json shelf = Json::array(), horizon = Json::array(), demand = Json::array(),
       q = Json::array();
  for (int i = 0; i < inst.num_items(); ++i) {
    for (int j = 0; j < inst.num_stores(); ++j) {
      int c = inst.cell(i, j);
      if (inst.shelf_capacity[c] != inst.total_demand(i, j))
        shelf.push_back({{"item", inst.items[i]},
                         {"store", inst.stores[j]},
                         {"cap", inst.shelf_capacity[c]}});
      if (inst.horizon[c] != 0)
        horizon.push_back({{"item", inst.items[i]},
                           {"store", inst.stores[j]},
                           {"days", inst.horizon[c]}});
      for (int t = 0; t <= inst.horizon[c]; ++t) {
        if (inst.demand[c][t] != 0)
          demand.push_back({{"item", inst.items[i]},
                            {"store", inst.stores[j]},
                            {"day", t},
                            {"qty", inst.demand[c][t]}});
        if (inst.item_store_priority[c][t] != 0)
          q.push_back({{"item", inst.items[i]},
                       {"store", inst.stores[j]},
                       {"day", t},
                       {"q", format_rational(inst.item_store_priority[c][t])}});
      }
    }
  }
  doc["shelf_capacity"] = shelf;
  doc["horizon"] = horizon;
  doc["demand"] = demand;
  doc["item_store_priority"] = q;

  Json alpha = Json::array();
  for (const Rat& a : inst.alpha) alpha.push_back(format_rational(a));
  doc["alpha"] = alpha;
  doc["beta"] = format_rational(inst.beta);
  doc["gamma"] = format_rational(inst.gamma);
  return doc;
}

Instance instance_from_json(const Json& doc) {
  Instance inst;
  for (const char* key :
       {"items", "stores", "categories", "labour_capacity", "inventory",
        "trailer_max", "trailer_min", "max_trailers", "store_priority",
        "demand", "alpha", "beta", "gamma"})
    if (!doc.contains(key))
      throw std::invalid_argument(std::string("instance: missing field ") + key);

  inst.items = doc["items"].get<std::vector<std::string>>();
  inst.stores = doc["stores"].get<std::vector<std::string>>();
  const int I = inst.num_items(), J = inst.num_stores();

  for (const Json& c : doc["categories"]) {
    inst.categories.push_back(c.at("id").get<std::string>());
    std::vector<int> members;
    for (const Json& id : c.at("items"))
      members.push_back(index_of(inst.items, id.get<std::string>(), "item"));
    inst.category_items.push_back(std::move(members));
  }
  inst.labour_capacity.resize(inst.num_categories());
  for (int l = 0; l < inst.num_categories(); ++l)
    inst.labour_capacity[l] =
        get_ll(doc["labour_capacity"].at(inst.categories[l]), "labour_capacity");
  inst.inventory.resize(I);
  for (int i = 0; i < I; ++i)
    inst.inventory[i] = get_ll(doc["inventory"].at(inst.items[i]), "inventory");
  inst.trailer_max = get_ll(doc["trailer_max"], "trailer_max");
  inst.trailer_min = get_ll(doc["trailer_min"], "trailer_min");
  inst.max_trailers.resize(J);
  inst.store_priority.resize(J);
  for (int j = 0; j < J; ++j) {
    inst.max_trailers[j] =
        get_ll(doc["max_trailers"].at(inst.stores[j]), "max_trailers");
    inst.store_priority[j] =
        get_ll(doc["store_priority"].at(inst.stores[j]), "store_priority");
  }

  inst.horizon.assign(I * J, 0);
  if (doc.contains("horizon"))
    for (const Json& e : doc["horizon"]) {
      int i = index_of(inst.items, e.at("item").get<std::string>(), "item");
      int j = index_of(inst.stores, e.at("store").get<std::string>(), "store");
      inst.horizon[inst.cell(i, j)] =
          static_cast<int>(get_ll(e.at("days"), "horizon"));
    }

  inst.demand.resize(I * J);
  inst.item_store_priority.resize(I * J);
  for (int c = 0; c < I * J; ++c) {
    inst.demand[c].assign(inst.horizon[c] + 1, 0);
    inst.item_store_priority[c].assign(inst.horizon[c] + 1, Rat(0));
  }
  for (const Json& e : doc["demand"]) {
    int i = index_of(inst.items, e.at("item").get<std::string>(), "item");
    int j = index_of(inst.stores, e.at("store").get<std::string>(), "store");
    int t = static_cast<int>(get_ll(e.at("day"), "demand day"));
    int c = inst.cell(i, j);
    if (t < 0 || t > inst.horizon[c])
      throw std::invalid_argument("demand entry outside the pair's horizon");
    inst.demand[c][t] = get_ll(e.at("qty"), "demand qty");
  }
  if (doc.contains("item_store_priority"))
    for (const Json& e : doc["item_store_priority"]) {
      int i = index_of(inst.items, e.at("item").get<std::string>(), "item");
      int j = index_of(inst.stores, e.at("store").get<std::string>(), "store");
      int t = static_cast<int>(get_ll(e.at("day"), "q day"));
      int c = inst.cell(i, j);
      if (t < 0 || t > inst.horizon[c])
        throw std::invalid_argument("q entry outside the pair's horizon");
      inst.item_store_priority[c][t] = get_rat(e.at("q"), "q");
    }

  inst.shelf_capacity.resize(I * J);
  for (int i = 0; i < I; ++i)
    for (int j = 0; j < J; ++j)
      inst.shelf_capacity[inst.cell(i, j)] = inst.total_demand(i, j);
  if (doc.contains("shelf_capacity"))
    for (const Json& e : doc["shelf_capacity"]) {
      int i = index_of(inst.items, e.at("item").get<std::string>(), "item");
      int j = index_of(inst.stores, e.at("store").get<std::string>(), "store");
      inst.shelf_capacity[inst.cell(i, j)] = get_ll(e.at("cap"), "shelf cap");
    }

  for (const Json& a : doc["alpha"]) inst.alpha.push_back(get_rat(a, "alpha"));
  inst.beta = get_rat(doc["beta"], "beta");
  inst.gamma = get_rat(doc["gamma"], "gamma");
  return inst;
}

Json plan_to_json(const Instance& inst, const TrailerAssignment& x,
                  const AllocationPlan& plan) {
  Json doc;
  Json allocs = Json::array();
  for (int i = 0; i < inst.num_items(); ++i)
    for (int j = 0; j < inst.num_stores(); ++j) {
      int c = inst.cell(i, j);
      for (int t = 0; t < static_cast<int>(plan.d[c].size()); ++t)
        if (plan.d[c][t] != 0)
          allocs.push_back({{"item", inst.items[i]},
                            {"store", inst.stores[j]},
                            {"day", t},
                            {"qty", plan.d[c][t]}});
    }
  doc["allocations"] = allocs;
  Json trailers = Json::array(), breach = Json::array();
  for (int j = 0; j < inst.num_stores(); ++j) {
    if (x.x[j] != 0)
      trailers.push_back({{"store", inst.stores[j]}, {"count", x.x[j]}});
    if (plan.breach[j] != 0)
      breach.push_back({{"store", inst.stores[j]}, {"qty", plan.breach[j]}});
  }
  doc["trailers"] = trailers;
  doc["breach"] = breach;
  doc["objective"] = format_rational(plan.objective);
  return doc;
}

std::pair<TrailerAssignment, AllocationPlan> plan_from_json(
    const Instance& inst, const Json& doc) {
  TrailerAssignment x;
  x.x.assign(inst.num_stores(), 0);
  AllocationPlan plan = AllocationPlan::empty(inst);
  for (const Json& e : doc.at("allocations")) {
    int i = index_of(inst.items, e.at("item").get<std::string>(), "item");
    int j = index_of(inst.stores, e.at("store").get<std::string>(), "store");
    int t = static_cast<int>(get_ll(e.at("day"), "day"));
    int c = inst.cell(i, j);
    if (t < 0 || t >= static_cast<int>(plan.d[c].size()))
      throw std::invalid_argument("allocation outside the pair's horizon");
    plan.d[c][t] = get_ll(e.at("qty"), "qty");
  }
  for (const Json& e : doc.at("trailers"))
    x.x[index_of(inst.stores, e.at("store").get<std::string>(), "store")] =
        get_ll(e.at("count"), "count");
  for (const Json& e : doc.at("breach"))
    plan.breach[index_of(inst.stores, e.at("store").get<std::string>(),
                         "store")] = get_ll(e.at("qty"), "qty");
  if (doc.contains("objective"))
    plan.objective = get_rat(doc["objective"], "objective");
  return {std::move(x), std::move(plan)};
}

Json cot_to_json(const CotInstance& cot) {
  Json doc;
  Json sources = Json::array();
  for (std::size_t i = 0; i < cot.supply.size(); ++i) {
    std::string name = static_cast<int>(i) == cot.b_source ? "b"
                       : static_cast<int>(i) == cot.z_source
                           ? "z"
                           : "item-" + std::to_string(i);
    sources.push_back({{"id", name}, {"supply", cot.supply[i]}});
  }
  doc["sources"] = sources;
  Json sinks = Json::array();
  for (std::size_t j = 0; j < cot.need.size(); ++j) {
    std::string name;
    int jj = static_cast<int>(j);
    if (jj < cot.num_real_stores)
      name = "store-" + std::to_string(jj);
    else if (jj < cot.surplus_sink)
      name = "h-" + std::to_string(jj - cot.first_labour_sink);
    else
      name = "e";
    sinks.push_back({{"id", name}, {"need", cot.need[j]}});
  }
  doc["sinks"] = sinks;
  Json cells = Json::array();
  for (const CotCell& c : cot.cells)
    cells.push_back({{"source", c.source},
                     {"sink", c.sink},
                     {"day", c.day},
                     {"cap", c.cap},
                     {"profit", format_rational(c.profit)}});
  doc["cells"] = cells;
  doc["total_mass"] = cot.total_mass;
  return doc;
}

std::string metrics_csv_header() {
  return "labour_util,trailer_util,total_allocation,trailer_count,"
         "breach_count,breach_total,integrality,mean_pf_dos";
}

std::string metrics_csv_row(const PlanMetrics& m) {
  std::ostringstream out;
  double lu = 0.0;
  for (double v : m.labour_utilization) lu = std::max(lu, v);
  out << lu << ',' << m.trailer_utilization << ',' << m.total_allocation << ','
      << m.trailer_count << ',' << m.breach_count << ',' << m.breach_total
      << ',' << m.integrality_fraction << ',';
  if (m.mean_pf_dos) out << *m.mean_pf_dos;
  return out.str();
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json doc;
  in >> doc;
  return doc;
}

void save_json(const Json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
}

std::string instance_digest(const Instance& inst) {
  std::string bytes = instance_to_json(inst).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace invals
