#pragma once

#include <string>
#include <utility>
#include <vector>

#include "navsim/config.hpp"
#include "navsim/grid.hpp"

namespace navsim {

enum class Outcome : std::uint8_t {
    ReachedGoal,
    FailedCollision,
    FailedOffMap,
    FailedSurfaced,
    Timeout,
};

const char* to_string(Outcome o);
bool is_failure(Outcome o);

struct LocalizeEvent {
    std::size_t step = 0;
    std::string region;  // "" when outside every declared region
    Coord position;

    bool operator==(const LocalizeEvent&) const = default;
};

// Full record of one episode. The collision trace is the belief-side
// failure_fraction after every executed action; the outcome reflects the
// hidden true state.
struct RunResult {
    Outcome outcome = Outcome::Timeout;
    std::size_t steps = 0;
    std::vector<LocalizeEvent> localize_events;
    std::vector<double> cumulative_collision_trace;
    std::vector<Action> executed_actions;
    std::vector<double> budget_trace;  // admissible budget per step, CC only
    std::uint64_t seed = 0;

    bool operator==(const RunResult&) const = default;
};

struct MetricStat {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation; 0 for n < 2

    bool operator==(const MetricStat&) const = default;
};

struct StrategySummary {
    std::string strategy;
    std::size_t n_runs = 0;
    double goal_rate = 0.0;
    double timeout_rate = 0.0;
    MetricStat failure_any;
    MetricStat failure_collision;
    MetricStat failure_offmap;
    MetricStat failure_surfaced;
    MetricStat cumulative_collision;  // episode-final trace value
    MetricStat localize_total;
    // Sorted by region name; declared regions always present, plus "other"
    // for events outside all of them.
    std::vector<std::pair<std::string, MetricStat>> localize_by_region;

    bool operator==(const StrategySummary&) const = default;
};

struct BatchSummary {
    double cost_threshold = 0.10;
    std::vector<StrategySummary> strategies;  // sorted by strategy name

    bool operator==(const BatchSummary&) const = default;
};

// Resolves a built-in environment name or a map file path.
GridMap resolve_env(const std::string& env);

// One full episode: belief-planned high-level actions, mean-based low-level
// commands against the hidden true state, GPS-driven replans, and the 10x
// path-length timeout guard. Same seed, same result, bit for bit.
RunResult run_episode(const RunConfig& cfg, const GridMap& map,
                      std::uint64_t episode_seed);

// n_runs episodes seeded seed+0 .. seed+n_runs-1, run on a worker pool.
// Results are ordered by episode index regardless of scheduling.
std::vector<RunResult> run_episodes(const RunConfig& cfg, const GridMap& map);

// Aggregates episode records into per-strategy statistics.
BatchSummary summarize(const RunConfig& cfg, const GridMap& map,
                       const std::vector<RunResult>& results);

BatchSummary run_batch(const RunConfig& cfg, const GridMap& map);

// strategy,metric,region,mean,std,cost_threshold; one row per metric, with
// one localize_count row per region bucket.
std::string to_csv(const BatchSummary& summary);

std::string to_json(const BatchSummary& summary);
BatchSummary summary_from_json(const std::string& text);

// Later files win on duplicate strategy names; the first file sets the
// threshold.
BatchSummary merge_summaries(const std::vector<BatchSummary>& parts);

// Worker count: explicit config value, NAVSIM_WORKERS, then hardware width.
std::size_t resolve_workers(std::size_t configured);

}  // namespace navsim
