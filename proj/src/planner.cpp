#include "navsim/planner.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace navsim {

Action next_action(const HlpStrategy& strategy, const PlanContext& ctx,
                   double& lambda, Rng& rng) {
    if (const auto* st = std::get_if<StaticStrategy>(&strategy)) {
        return (ctx.step_index + 1) % (st->k + 1) == 0 ? Action::Localize
                                                       : Action::Move;
    }
    if (const auto* po = std::get_if<PomcpStrategy>(&strategy)) {
        return plan_pomcp(ctx.belief, ctx.map, po->params, ctx.cfg, rng);
    }
    const auto& cc = std::get<CcPomcpStrategy>(strategy);
    const CcPlanResult res = plan_ccpomcp(ctx.belief, ctx.map, cc.params,
                                          ctx.cfg, lambda, ctx.c_hat_t, rng);
    lambda = res.lambda;
    return res.action;
}

std::vector<Coord> bfs_shortest_path(const GridMap& map, Coord from, Coord to) {
    auto passable = [&](Coord c) {
        return map.in_bounds(c) && map.cell(c) != CellKind::Obstacle;
    };
    if (!passable(from) || !passable(to)) return {};
    if (from == to) return {from};

    static constexpr Coord kDeltas[4] = {{0, -1}, {0, 1}, {-1, 0}, {1, 0}};
    std::unordered_map<Coord, Coord, CoordHash> parent;
    parent.emplace(from, from);
    std::queue<Coord> frontier;
    frontier.push(from);
    while (!frontier.empty()) {
        const Coord cur = frontier.front();
        frontier.pop();
        for (const Coord d : kDeltas) {
            const Coord next{cur.x + d.x, cur.y + d.y};
            if (!passable(next) || parent.count(next)) continue;
            parent.emplace(next, cur);
            if (next == to) {
                std::vector<Coord> path{to};
                for (Coord c = cur; !(c == from); c = parent.at(c))
                    path.push_back(c);
                path.push_back(from);
                std::reverse(path.begin(), path.end());
                return path;
            }
            frontier.push(next);
        }
    }
    return {};
}

std::optional<MotionCommand> llp_next_command(const GridMap& map,
                                              std::vector<Coord>& remaining,
                                              Coord believed) {
    std::size_t drop = 0;
    while (drop < remaining.size() &&
           (remaining[drop] == believed ||
            map.cell(remaining[drop]) == CellKind::Obstacle))
        ++drop;
    if (drop > 0) remaining.erase(remaining.begin(),
                                  remaining.begin() + static_cast<long>(drop));
    if (remaining.empty()) return std::nullopt;
    return intended_command(believed, remaining.front());
}

bool llp_replan(const GridMap& map, std::vector<Coord>& remaining, Coord fix) {
    // A fix with nothing left to chase re-targets the goal (the controller
    // thought it was done; the fix says otherwise).
    if (remaining.empty()) remaining.assign(1, map.goal);

    const auto hit = std::find(remaining.begin(), remaining.end(), fix);
    if (hit != remaining.end()) {
        // Drop everything before the fix. A fix on the final waypoint is the
        // goal itself; nothing is left to chase.
        remaining.erase(remaining.begin(),
                        hit + (hit + 1 == remaining.end() ? 1 : 0));
        return true;
    }

    std::size_t target = 0;
    long long best_d2 = -1;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
        const long long dx = remaining[i].x - fix.x;
        const long long dy = remaining[i].y - fix.y;
        const long long d2 = dx * dx + dy * dy;
        if (best_d2 < 0 || d2 < best_d2) {
            best_d2 = d2;
            target = i;
        }
    }
    std::vector<Coord> bridge = bfs_shortest_path(map, fix, remaining[target]);
    if (bridge.empty()) return false;

    std::vector<Coord> next(bridge.begin() + 1, bridge.end());
    next.insert(next.end(), remaining.begin() + static_cast<long>(target) + 1,
                remaining.end());
    remaining = std::move(next);
    return true;
}

}  // namespace navsim
