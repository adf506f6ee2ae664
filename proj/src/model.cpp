#include "navsim/model.hpp"

#include <cstdlib>
#include <stdexcept>

namespace navsim {

namespace {

// Skips waypoints the reference has already reached so the chase target is
// always strictly ahead of ref (or exhausted).
std::size_t advance_waypoints(const GridMap& map, Coord ref, std::size_t wpi) {
    while (wpi < map.path.size() && map.path[wpi] == ref) ++wpi;
    return wpi;
}

// Rewards compose: the action's own penalty plus the terminal component of
// the transition, e.g. localizing into a lane pays r_local + r_fail.
double step_reward(Terminal t, double action_reward, const RewardConfig& rw) {
    if (t == Terminal::ReachedGoal) return action_reward + rw.r_goal;
    if (is_failure(t)) return action_reward + rw.r_fail;
    return action_reward;
}

}  // namespace

namespace {

// Overshoot cannot tunnel: the vehicle stops in the first cell it cannot
// traverse (obstacle or off-map) rather than skipping over it.
Coord stop_at_block(const GridMap& map, Coord pos, Coord landing, Coord delta) {
    const Coord two{pos.x + 2 * delta.x, pos.y + 2 * delta.y};
    if (!(landing == two)) return landing;
    const Coord mid{pos.x + delta.x, pos.y + delta.y};
    if (!map.in_bounds(mid) || map.cell(mid) == CellKind::Obstacle) return mid;
    return landing;
}

}  // namespace

Coord sample_landing(Coord pos, MotionCommand cmd, const TransitionNoise& noise,
                     Rng& rng) {
    const Coord delta = command_delta(cmd);
    const double u = rand01(rng);
    if (u < noise.p_intended) return {pos.x + delta.x, pos.y + delta.y};
    if (u < noise.p_intended + noise.p_overshoot)
        return {pos.x + 2 * delta.x, pos.y + 2 * delta.y};
    return pos;
}

MotionCommand intended_command(Coord from, Coord to) {
    const int dx = to.x - from.x;
    const int dy = to.y - from.y;
    if (dx == 0 && dy == 0)
        throw std::invalid_argument("intended_command: from == to");
    if (std::abs(dx) >= std::abs(dy) && dx != 0)
        return dx > 0 ? MotionCommand::Right : MotionCommand::Left;
    return dy > 0 ? MotionCommand::Down : MotionCommand::Up;
}

std::size_t nearest_waypoint_index(const GridMap& map, Coord pos,
                                   std::size_t from_index) {
    const std::size_t n = map.path.size();
    std::size_t lo = from_index < n ? from_index : n - 1;
    std::size_t best = lo;
    long long best_d2 = -1;
    for (std::size_t i = lo; i < n; ++i) {
        const long long dx = map.path[i].x - pos.x;
        const long long dy = map.path[i].y - pos.y;
        const long long d2 = dx * dx + dy * dy;
        if (best_d2 < 0 || d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

StepOutcome step(const GridMap& map, const AgentState& state, Action action,
                 const ModelConfig& cfg, Rng& rng) {
    if (!state.active()) throw std::logic_error("step: terminal state");

    StepOutcome out;
    out.next_state = state;

    if (action == Action::Localize) {
        const Terminal t = classify_localize(map, state.position);
        out.next_state.terminal = t;
        out.reward = step_reward(t, cfg.rewards.r_local, cfg.rewards);
        out.cost = is_failure(t) ? 1 : 0;
        if (t == Terminal::Active) {
            out.next_state.ref = state.position;
            out.next_state.waypoint_index =
                nearest_waypoint_index(map, state.position, state.waypoint_index);
            out.observation = Observation::at(state.position);
        }
        return out;
    }

    const std::size_t wpi =
        advance_waypoints(map, state.ref, state.waypoint_index);
    out.next_state.waypoint_index = wpi;
    if (wpi == map.path.size()) {
        // Controller believes the path is complete; the command stream stops
        // and the vehicle holds until a localization retargets it.
        out.reward = cfg.rewards.r_move;
        return out;
    }

    const MotionCommand cmd = intended_command(state.ref, map.path[wpi]);
    const Coord delta = command_delta(cmd);
    const Coord new_ref = {state.ref.x + delta.x, state.ref.y + delta.y};
    const Coord new_pos = stop_at_block(
        map, state.position, sample_landing(state.position, cmd, cfg.noise, rng),
        delta);

    const Terminal t = classify_move(map, new_pos);
    out.next_state.position = new_pos;
    out.next_state.ref = new_ref;
    out.next_state.waypoint_index = advance_waypoints(map, new_ref, wpi);
    out.next_state.terminal = t;
    out.reward = step_reward(t, cfg.rewards.r_move, cfg.rewards);
    out.cost = is_failure(t) ? 1 : 0;
    return out;
}

StepOutcome step_command(const GridMap& map, const AgentState& state,
                         MotionCommand cmd, const ModelConfig& cfg, Rng& rng) {
    if (!state.active()) throw std::logic_error("step_command: terminal state");

    const Coord new_pos = stop_at_block(
        map, state.position, sample_landing(state.position, cmd, cfg.noise, rng),
        command_delta(cmd));
    const Terminal t = classify_move(map, new_pos);

    StepOutcome out;
    out.next_state = state;
    out.next_state.position = new_pos;
    out.next_state.terminal = t;
    out.reward = step_reward(t, cfg.rewards.r_move, cfg.rewards);
    out.cost = is_failure(t) ? 1 : 0;
    return out;
}

}  // namespace navsim
