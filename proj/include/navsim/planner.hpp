#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "navsim/ccpomcp.hpp"
#include "navsim/pomcp.hpp"

namespace navsim {

// Fixed cadence: k Moves, then one Localize, repeating.
struct StaticStrategy {
    std::size_t k = 1;
};

struct PomcpStrategy {
    SearchParams params{2000, 8, 0.999, 150.0, 0.9};
};

struct CcPomcpStrategy {
    CcSearchParams params;
};

using HlpStrategy = std::variant<StaticStrategy, PomcpStrategy, CcPomcpStrategy>;

// Everything a high-level decision sees at one step.
struct PlanContext {
    const GridMap& map;
    const ParticleBelief& belief;
    const ModelConfig& cfg;
    std::size_t step_index = 0;  // executed actions so far this episode
    double c_hat_t = 0.0;        // admissible cost budget (CC only)
};

// Next high-level action. Online strategies search from ctx.belief; lambda
// carries the CC multiplier between calls and is updated in place.
Action next_action(const HlpStrategy& strategy, const PlanContext& ctx,
                   double& lambda, Rng& rng);

// Shortest 4-connected path over non-obstacle cells, endpoints included.
// Neighbors expand Up, Down, Left, Right. Returns {from} when from == to and
// an empty vector when no path exists.
std::vector<Coord> bfs_shortest_path(const GridMap& map, Coord from, Coord to);

// Motion command chasing the head of the remaining waypoint list from the
// believed position. Waypoints already reached or sitting on obstacles are
// dropped from the front first. nullopt when the list runs out (hold).
std::optional<MotionCommand> llp_next_command(const GridMap& map,
                                              std::vector<Coord>& remaining,
                                              Coord believed);

// Rebases the remaining waypoints on a GPS fix. A fix on the list truncates
// everything before it (a fix on the goal empties the list); otherwise a BFS
// bridge is spliced to the nearest remaining waypoint (Euclidean, ties to the
// lower index). Returns false when no bridge exists.
bool llp_replan(const GridMap& map, std::vector<Coord>& remaining, Coord fix);

}  // namespace navsim
