/*
 * dubcov — multi-robot Dubins coverage planner.
 *
 * C API over the planning core. All functions are thread-compatible:
 * handles are immutable once created and may be shared across threads;
 * error detail strings are thread-local.
 *
 * Strings returned through char** out parameters are heap-allocated and
 * must be released with dubcov_string_free().
 */
#ifndef DUBCOV_H
#define DUBCOV_H

#include <stddef.h>

#if defined(_WIN32)
#define DUBCOV_API __declspec(dllexport)
#else
#define DUBCOV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dubcov_status {
  DUBCOV_OK = 0,
  DUBCOV_ERROR_INVALID_ARGUMENT = 1,
  DUBCOV_ERROR_IO = 2,
  DUBCOV_ERROR_MALFORMED_HEADER = 3,
  DUBCOV_ERROR_TRUNCATED_PAYLOAD = 4,
  DUBCOV_ERROR_BAD_METADATA = 5,
  DUBCOV_ERROR_NONPOSITIVE_RESOLUTION = 6,
  DUBCOV_ERROR_EMPTY_FREE_SPACE = 7,
  DUBCOV_ERROR_SOLVER_LIMIT = 8,
  DUBCOV_ERROR_BAD_MISSION = 9,
  DUBCOV_ERROR_INTERNAL = 10
} dubcov_status;

typedef enum dubcov_algorithm {
  DUBCOV_ALGORITHM_DCRC = 0,
  DUBCOV_ALGORITHM_DCAC = 1
} dubcov_algorithm;

typedef enum dubcov_solver {
  DUBCOV_SOLVER_HEURISTIC = 0,
  DUBCOV_SOLVER_EXACT = 1
} dubcov_solver;

typedef struct dubcov_grid dubcov_grid;
typedef struct dubcov_plan dubcov_plan;

typedef struct dubcov_plan_params {
  int robots;                  /* k >= 1 */
  double turning_radius_m;     /* r > 0 */
  double footprint_m;          /* s > 0 */
  int algorithm;               /* dubcov_algorithm */
  int solver;                  /* dubcov_solver */
  unsigned long long seed;
  int split_cmax_from_depot;   /* nonzero: measure c_max from the depot */
} dubcov_plan_params;

DUBCOV_API const char* dubcov_version(void);
DUBCOV_API const char* dubcov_status_name(dubcov_status status);
/* Detail message of the most recent failure on this thread. */
DUBCOV_API const char* dubcov_last_error(void);
DUBCOV_API void dubcov_string_free(char* s);

/* --- occupancy grids ---------------------------------------------------- */

/* map_path: P2/P5 PGM or ASCII '.'/'#' grid. meta_path: JSON sidecar with
 * resolution_m, depot [x, y], optional free_threshold (default 128). */
DUBCOV_API dubcov_status dubcov_grid_load(const char* map_path, const char* meta_path,
                                          dubcov_grid** out);
DUBCOV_API dubcov_status dubcov_grid_parse(const void* map_bytes, size_t map_len,
                                           const char* meta_json, dubcov_grid** out);
DUBCOV_API void dubcov_grid_free(dubcov_grid* grid);
DUBCOV_API int dubcov_grid_width(const dubcov_grid* grid);
DUBCOV_API int dubcov_grid_height(const dubcov_grid* grid);
DUBCOV_API double dubcov_grid_resolution(const dubcov_grid* grid);
DUBCOV_API double dubcov_grid_free_area(const dubcov_grid* grid);

/* --- decomposition ------------------------------------------------------ */

/* Boustrophedon cells as JSON; footprint_m > 0 additionally emits passes
 * and the pass-adjacency graph. */
DUBCOV_API dubcov_status dubcov_decompose_json(const dubcov_grid* grid, double footprint_m,
                                               char** out_json);
DUBCOV_API dubcov_status dubcov_decompose_svg(const dubcov_grid* grid, double footprint_m,
                                              char** out_svg);

/* --- planning ----------------------------------------------------------- */

DUBCOV_API dubcov_status dubcov_plan_create(const dubcov_grid* grid,
                                            const dubcov_plan_params* params,
                                            dubcov_plan** out);
DUBCOV_API void dubcov_plan_free(dubcov_plan* plan);
DUBCOV_API int dubcov_plan_tour_count(const dubcov_plan* plan);
DUBCOV_API double dubcov_plan_tour_cost(const dubcov_plan* plan, int robot);
DUBCOV_API double dubcov_plan_max_cost(const dubcov_plan* plan);
DUBCOV_API double dubcov_plan_utilization(const dubcov_plan* plan);
DUBCOV_API double dubcov_plan_coverage_fraction(const dubcov_plan* plan);
DUBCOV_API dubcov_status dubcov_plan_mission_json(const dubcov_plan* plan, char** out_json);
DUBCOV_API dubcov_status dubcov_plan_report_json(const dubcov_plan* plan, char** out_json);
DUBCOV_API dubcov_status dubcov_plan_svg(const dubcov_plan* plan, char** out_svg);

/* --- mission files ------------------------------------------------------ */

/* Recomputes per-robot costs from a mission file's geometry and reports
 * them next to the stored costs. */
DUBCOV_API dubcov_status dubcov_mission_stats_json(const char* mission_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DUBCOV_H */
