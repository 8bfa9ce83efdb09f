#pragma once

#include <cstdint>
#include <string>

#include "invals/instance.hpp"

namespace invals {

enum class QMode { proportional, constant };

// Synthetic instance generator. Demands are truncated Poisson draws with
// per-item and per-day rate multipliers; capacities are sized relative to
// the drawn demand so the tightness knobs have a stable meaning across
// sizes. All draws happen before the pf/q projections are applied, so two
// configs differing only in pf_enabled / q_mode / beta / gamma produce the
// same underlying demand data from the same seed.
struct GenConfig {
  int num_items = 3;
  int num_stores = 3;
  int num_categories = 1;
  int horizon_min = 0;  // t_ij drawn uniformly from [horizon_min, horizon_max]
  int horizon_max = 2;
  double demand_rate = 1.5;       // base Poisson rate per (i, j, t)
  long long demand_cap = 6;       // truncation of each draw
  double inventory_slack = 1.1;   // S_i = ceil(slack * drawn demand of i)
  double labour_tightness = 0.8;  // H_l = max(1, round(t * category demand))
  long long trailer_max = 8;      // M
  long long trailer_min = 4;      // m
  long long max_trailers = 2;     // R_j drawn from {max_trailers-1, max_trailers}
  double shelf_slack = 1.2;       // C_ij = ceil(slack * drawn pair demand)
  long long priority_levels = 2;  // p_j drawn uniformly from [1, levels]
  long long alpha_num = 1;        // alpha[t] = (alpha_num / alpha_den)^t
  long long alpha_den = 2;
  Rat beta = 2;
  Rat gamma = 5;
  bool pf_enabled = true;  // false forces every T_ij = {0}
  QMode q_mode = QMode::proportional;
  std::uint64_t seed = 0;
};

Instance generate(const GenConfig& cfg);

// Known names: expA, expB, expC, expD, small-corpus, medium-bench.
// Throws std::invalid_argument for anything else.
GenConfig preset(const std::string& name);

}  // namespace invals
