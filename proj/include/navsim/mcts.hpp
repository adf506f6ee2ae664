#pragma once

#include <array>
#include <cstddef>

#include "navsim/belief.hpp"
#include "navsim/grid.hpp"
#include "navsim/model.hpp"
#include "navsim/rng.hpp"

namespace navsim {

struct SearchParams {
    std::size_t n_sims = 2000;
    std::size_t tree_depth = 8;
    double gamma = 0.999;
    double kappa = 150.0;
    double rollout_move_prob = 0.9;
};

struct EdgeStats {
    std::size_t visits = 0;
    double q_reward = 0.0;
    double q_cost = 0.0;
};

// Root-level statistics after a search. edges[0] is Move, edges[1] is
// Localize; edge visits always sum to the number of simulations run.
struct RootStats {
    std::size_t visits = 0;
    std::array<EdgeStats, 2> edges;

    const EdgeStats& edge(Action a) const {
        return edges[static_cast<std::size_t>(a)];
    }
};

// Per-simulation dual ascent on the Lagrange multiplier. c_hat is the
// admissible cost budget at the current step.
struct DualAscent {
    double alpha_n = 0.001;
    double c_hat = 0.10;
    double lambda_max = 1.0;
};

// Monte-Carlo tree search over histories from a root particle belief. Action
// selection maximizes q_reward - lambda * q_cost plus a UCB bonus, with
// unvisited actions taken first (Move before Localize). Each simulation adds
// one node and continues with a depth-limited random rollout; returns are
// discounted sums of reward and of cost, backed up as incremental means.
//
// With dual != nullptr, lambda is re-estimated after every simulation from
// the greedy root action's q_cost and written to *lambda_out at the end
// (plain searches leave lambda fixed). Requires at least one active particle.
RootStats mcts_search(const ParticleBelief& belief, const GridMap& map,
                      const SearchParams& params, const ModelConfig& cfg,
                      double lambda, const DualAscent* dual, double* lambda_out,
                      Rng& rng);

// Greedy root action: argmax over visited edges of q_reward - lambda * q_cost,
// ties to Move. Falls back to Move when nothing was visited.
Action greedy_action(const RootStats& stats, double lambda);

struct MctsReturn {
    double reward = 0.0;
    double cost = 0.0;
};

// One depth-limited random rollout (Move with rollout_move_prob) from a fresh
// root, returning discounted reward and cost sums.
MctsReturn mcts_rollout(const GridMap& map, const AgentState& state,
                        const SearchParams& params, const ModelConfig& cfg,
                        Rng& rng);

}  // namespace navsim
