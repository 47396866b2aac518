#include "dubcov.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include <json.hpp>

#include "grid.hpp"
#include "planner.hpp"
#include "svg.hpp"

using namespace dubcov;

struct dubcov_grid {
  OccupancyGrid grid;
};

struct dubcov_plan {
  OccupancyGrid grid;  // copy; the plan outlives the caller's grid handle
  Algorithm algorithm{};
  PlanConfig config{};
  PlanOutput output;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dubcov_status fail(dubcov_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `fn`, translating the core's exception types onto status codes.
template <typename Fn>
dubcov_status guarded(Fn&& fn) {
  try {
    fn();
    return DUBCOV_OK;
  } catch (const TruncatedPayloadError& e) {
    return fail(DUBCOV_ERROR_TRUNCATED_PAYLOAD, e.what());
  } catch (const MalformedHeaderError& e) {
    return fail(DUBCOV_ERROR_MALFORMED_HEADER, e.what());
  } catch (const NonPositiveResolutionError& e) {
    return fail(DUBCOV_ERROR_NONPOSITIVE_RESOLUTION, e.what());
  } catch (const BadMetadataError& e) {
    return fail(DUBCOV_ERROR_BAD_METADATA, e.what());
  } catch (const IoError& e) {
    return fail(DUBCOV_ERROR_IO, e.what());
  } catch (const MissionError& e) {
    return fail(DUBCOV_ERROR_BAD_MISSION, e.what());
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    if (what.find("no free space") != std::string::npos)
      return fail(DUBCOV_ERROR_EMPTY_FREE_SPACE, what);
    if (what.find("exact solver") != std::string::npos)
      return fail(DUBCOV_ERROR_SOLVER_LIMIT, what);
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, what);
  } catch (const std::bad_alloc&) {
    return fail(DUBCOV_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DUBCOV_ERROR_INTERNAL, e.what());
  }
}

dubcov_status check_plan_params(const dubcov_plan_params* params) {
  if (params == nullptr) return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "params must not be null");
  if (params->robots < 1) return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "robots must be >= 1");
  if (!(params->turning_radius_m > 0.0))
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "turning_radius_m must be > 0");
  if (!(params->footprint_m > 0.0))
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "footprint_m must be > 0");
  if (params->algorithm != DUBCOV_ALGORITHM_DCRC && params->algorithm != DUBCOV_ALGORITHM_DCAC)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "unknown algorithm");
  if (params->solver != DUBCOV_SOLVER_HEURISTIC && params->solver != DUBCOV_SOLVER_EXACT)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "unknown solver");
  return DUBCOV_OK;
}

}  // namespace

extern "C" {

const char* dubcov_version(void) { return "1.0.0"; }

const char* dubcov_status_name(dubcov_status status) {
  switch (status) {
    case DUBCOV_OK: return "ok";
    case DUBCOV_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case DUBCOV_ERROR_IO: return "io_error";
    case DUBCOV_ERROR_MALFORMED_HEADER: return "malformed_header";
    case DUBCOV_ERROR_TRUNCATED_PAYLOAD: return "truncated_payload";
    case DUBCOV_ERROR_BAD_METADATA: return "bad_metadata";
    case DUBCOV_ERROR_NONPOSITIVE_RESOLUTION: return "nonpositive_resolution";
    case DUBCOV_ERROR_EMPTY_FREE_SPACE: return "empty_free_space";
    case DUBCOV_ERROR_SOLVER_LIMIT: return "solver_limit";
    case DUBCOV_ERROR_BAD_MISSION: return "bad_mission";
    case DUBCOV_ERROR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* dubcov_last_error(void) { return g_last_error.c_str(); }

void dubcov_string_free(char* s) { delete[] s; }

dubcov_status dubcov_grid_load(const char* map_path, const char* meta_path, dubcov_grid** out) {
  if (map_path == nullptr || meta_path == nullptr || out == nullptr)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new dubcov_grid{OccupancyGrid::load(map_path, meta_path)}; });
}

dubcov_status dubcov_grid_parse(const void* map_bytes, size_t map_len, const char* meta_json,
                                dubcov_grid** out) {
  if (map_bytes == nullptr || meta_json == nullptr || out == nullptr)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const GridMeta meta = OccupancyGrid::parse_meta(meta_json);
    *out = new dubcov_grid{
        OccupancyGrid::parse({static_cast<const char*>(map_bytes), map_len}, meta)};
  });
}

void dubcov_grid_free(dubcov_grid* grid) { delete grid; }

int dubcov_grid_width(const dubcov_grid* grid) { return grid->grid.width(); }
int dubcov_grid_height(const dubcov_grid* grid) { return grid->grid.height(); }
double dubcov_grid_resolution(const dubcov_grid* grid) { return grid->grid.resolution(); }
double dubcov_grid_free_area(const dubcov_grid* grid) { return grid->grid.free_area(); }

dubcov_status dubcov_decompose_json(const dubcov_grid* grid, double footprint_m,
                                    char** out_json) {
  if (grid == nullptr || out_json == nullptr)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out_json = dup_string(decomposition_to_json(grid->grid, footprint_m)); });
}

dubcov_status dubcov_decompose_svg(const dubcov_grid* grid, double footprint_m, char** out_svg) {
  if (grid == nullptr || out_svg == nullptr)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto cells = bcd(grid->grid);
    if (footprint_m > 0.0) {
      const auto passes = gen_all_passes(cells, footprint_m, grid->grid.height());
      const auto pg = build_pass_graph(passes, grid->grid.resolution());
      *out_svg = dup_string(render_decomposition_svg(grid->grid, cells, &passes, &pg));
    } else {
      *out_svg = dup_string(render_decomposition_svg(grid->grid, cells, nullptr, nullptr));
    }
  });
}

dubcov_status dubcov_plan_create(const dubcov_grid* grid, const dubcov_plan_params* params,
                                 dubcov_plan** out) {
  if (grid == nullptr || out == nullptr)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "null argument");
  const dubcov_status check = check_plan_params(params);
  if (check != DUBCOV_OK) return check;
  *out = nullptr;
  return guarded([&] {
    std::unique_ptr<dubcov_plan> plan_handle(new dubcov_plan{grid->grid, {}, {}, {}});
    plan_handle->algorithm =
        params->algorithm == DUBCOV_ALGORITHM_DCRC ? Algorithm::Dcrc : Algorithm::Dcac;
    plan_handle->config.robots = params->robots;
    plan_handle->config.turning_radius = params->turning_radius_m;
    plan_handle->config.footprint = params->footprint_m;
    plan_handle->config.solver =
        params->solver == DUBCOV_SOLVER_EXACT ? RouteSolver::Exact : RouteSolver::Heuristic;
    plan_handle->config.seed = params->seed;
    plan_handle->config.split.measure_cmax_from_depot = params->split_cmax_from_depot != 0;
    plan_handle->output = plan(plan_handle->grid, plan_handle->algorithm, plan_handle->config);
    *out = plan_handle.release();
  });
}

void dubcov_plan_free(dubcov_plan* plan) { delete plan; }

int dubcov_plan_tour_count(const dubcov_plan* plan) {
  return static_cast<int>(plan->output.tours.size());
}

double dubcov_plan_tour_cost(const dubcov_plan* plan, int robot) {
  if (robot < 0 || robot >= static_cast<int>(plan->output.tours.size())) return -1.0;
  return plan->output.tours[robot].cost;
}

double dubcov_plan_max_cost(const dubcov_plan* plan) { return plan->output.report.max_cost; }
double dubcov_plan_utilization(const dubcov_plan* plan) {
  return plan->output.report.utilization;
}
double dubcov_plan_coverage_fraction(const dubcov_plan* plan) {
  return plan->output.report.coverage_fraction;
}

dubcov_status dubcov_plan_mission_json(const dubcov_plan* plan, char** out_json) {
  if (plan == nullptr || out_json == nullptr)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out_json = dup_string(mission_to_json(plan->output.mission)); });
}

dubcov_status dubcov_plan_report_json(const dubcov_plan* plan, char** out_json) {
  if (plan == nullptr || out_json == nullptr)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_json = dup_string(report_to_json(plan->output.report, plan->algorithm, plan->config));
  });
}

dubcov_status dubcov_plan_svg(const dubcov_plan* plan, char** out_svg) {
  if (plan == nullptr || out_svg == nullptr)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_svg = dup_string(render_mission_svg(plan->grid, plan->output.mission));
  });
}

dubcov_status dubcov_mission_stats_json(const char* mission_json, char** out_json) {
  if (mission_json == nullptr || out_json == nullptr)
    return fail(DUBCOV_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Mission mission = mission_from_json(mission_json);
    const MissionStats stats = recompute_stats(mission);
    nlohmann::ordered_json j;
    j["robots"] = mission.robots;
    j["algorithm"] = mission.algorithm;
    j["stored_costs_m"] = stats.stored_costs;
    j["recomputed_costs_m"] = stats.recomputed_costs;
    j["max_cost_m"] = stats.max_cost;
    *out_json = dup_string(j.dump(2));
  });
}

}  // extern "C"
