#pragma once

#include <cstddef>
#include <optional>

#include "navsim/grid.hpp"
#include "navsim/rng.hpp"

namespace navsim {

// High-level actions. Move is resolved to a concrete motion command by the
// low-level planner at execution time and by the path-chasing rule inside
// simulation; Localize surfaces for a GPS fix without horizontal motion.
enum class Action : std::uint8_t { Move, Localize };

enum class MotionCommand : std::uint8_t { Up, Down, Left, Right };

inline Coord command_delta(MotionCommand c) {
    switch (c) {
        case MotionCommand::Up: return {0, -1};
        case MotionCommand::Down: return {0, 1};
        case MotionCommand::Left: return {-1, 0};
        case MotionCommand::Right: return {1, 0};
    }
    return {0, 0};
}

// Move steps observe nothing; a non-fatal Localize observes the true cell.
struct Observation {
    std::optional<Coord> gps;

    static Observation none() { return {}; }
    static Observation at(Coord c) { return {c}; }
    bool operator==(const Observation&) const = default;
};

struct RewardConfig {
    double r_goal = 100.0;
    double r_move = -1.0;
    double r_local = -3.0;
    double r_fail = -100.0;
};

// Landing distribution of one motion command: intended cell, one-cell
// overshoot along the same axis, or undershoot (no motion).
struct TransitionNoise {
    double p_intended = 0.94;
    double p_overshoot = 0.03;
    double p_undershoot = 0.03;

    static TransitionNoise none() { return {1.0, 0.0, 0.0}; }
};

struct ModelConfig {
    RewardConfig rewards;
    TransitionNoise noise;
};

// Agent configuration used by execution, belief particles, and tree search
// alike. `position` is the true cell; `ref` is the controller's dead-reckoned
// reference, which commands are computed from and which only a localization
// re-synchronizes; `waypoint_index` points at the next path waypoint the
// controller chases.
struct AgentState {
    Coord position;
    Coord ref;
    std::size_t waypoint_index = 0;
    Terminal terminal = Terminal::Active;

    bool active() const { return terminal == Terminal::Active; }
    bool operator==(const AgentState&) const = default;
};

inline AgentState initial_state(const GridMap& map) {
    return AgentState{map.start, map.start, 0, Terminal::Active};
}

struct StepOutcome {
    AgentState next_state;
    Observation observation;
    double reward = 0.0;
    int cost = 0;  // 1 exactly on transitions into a failure state
};

// Unit step from `from` toward `to`: the axis with the larger absolute
// displacement wins, ties go to the x-axis. Throws std::invalid_argument
// when from == to.
MotionCommand intended_command(Coord from, Coord to);

// Landing cell of one motion command: intended with p_intended, two cells
// with p_overshoot, in place otherwise. Consumes exactly one rng draw.
Coord sample_landing(Coord pos, MotionCommand cmd, const TransitionNoise& noise,
                     Rng& rng);

// Generative model G(s, a) -> (s', o, r, c). Move chases the path from the
// state's dead-reckoned ref; Localize holds position, classifies against
// surfacing hazards, and re-synchronizes ref on success. An overshoot that
// would pass through an obstacle stops in that obstacle (no tunneling).
// Throws std::logic_error when stepping a terminal state.
StepOutcome step(const GridMap& map, const AgentState& state, Action action,
                 const ModelConfig& cfg, Rng& rng);

// Applies one explicit motion command with noise (the harness uses this for
// the true state, driven by the LLP's command).
StepOutcome step_command(const GridMap& map, const AgentState& state,
                         MotionCommand cmd, const ModelConfig& cfg, Rng& rng);

// Index of the path waypoint nearest to pos (Euclidean, ties to the lower
// index) among indices >= from_index.
std::size_t nearest_waypoint_index(const GridMap& map, Coord pos,
                                   std::size_t from_index);

}  // namespace navsim
