#pragma once

#include "navsim/mcts.hpp"

namespace navsim {

struct CcSearchParams {
    SearchParams base{2000, 8, 0.9, 200.0, 0.9};
    double alpha_n = 0.001;    // dual ascent learning rate
    double c_hat = 0.10;       // episode cost budget
    double lambda_max = 0.0;   // <= 0 resolves from rewards and gamma
    bool lambda_reset = false;  // zero the multiplier before every decision
};

struct CcPlanResult {
    Action action = Action::Move;
    double lambda = 0.0;
};

// Upper bound for the multiplier: the full reward spread spent on the
// smallest budget a discounted unit cost can fill.
double resolve_lambda_max(const CcSearchParams& params, const RewardConfig& rw);

// One online CC-POMCP planning call. Tree policy maximizes the scalarized
// value q_reward - lambda * q_cost with lambda re-estimated by dual ascent
// after every simulation against the admissible budget c_hat_t. The executed
// action is the scalarized-greedy root action when its q_cost fits the
// budget; otherwise it mixes that action with the cheaper one so the expected
// root cost equals c_hat_t. lambda_in carries the multiplier across planning
// calls; the updated value is returned. Returns Move and an unchanged lambda
// when the belief holds no active particles.
CcPlanResult plan_ccpomcp(const ParticleBelief& belief, const GridMap& map,
                          const CcSearchParams& params, const ModelConfig& cfg,
                          double lambda_in, double c_hat_t, Rng& rng);

// Budget left after paying cost c this step: max(0, (c_hat_t - c) / gamma).
double admissible_cost_update(double c_hat_t, double c, double gamma);

}  // namespace navsim
