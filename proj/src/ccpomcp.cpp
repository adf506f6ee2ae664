#include "navsim/ccpomcp.hpp"

#include <algorithm>

namespace navsim {

double resolve_lambda_max(const CcSearchParams& params, const RewardConfig& rw) {
    if (params.lambda_max > 0.0) return params.lambda_max;
    const double spread = rw.r_goal - rw.r_fail;
    const double denom =
        std::max(params.c_hat * (1.0 - params.base.gamma), 1e-9);
    return spread / denom;
}

double admissible_cost_update(double c_hat_t, double c, double gamma) {
    return std::max(0.0, (c_hat_t - c) / gamma);
}

CcPlanResult plan_ccpomcp(const ParticleBelief& belief, const GridMap& map,
                          const CcSearchParams& params, const ModelConfig& cfg,
                          double lambda_in, double c_hat_t, Rng& rng) {
    if (active_count(belief) == 0) return {Action::Move, lambda_in};

    const DualAscent dual{params.alpha_n, c_hat_t,
                          resolve_lambda_max(params, cfg.rewards)};
    CcPlanResult res;
    const RootStats stats = mcts_search(belief, map, params.base, cfg,
                                        lambda_in, &dual, &res.lambda, rng);

    const Action greedy = greedy_action(stats, res.lambda);
    const EdgeStats& ge = stats.edge(greedy);
    const Action other =
        greedy == Action::Move ? Action::Localize : Action::Move;
    const EdgeStats& oe = stats.edge(other);

    if (ge.q_cost <= c_hat_t || oe.visits == 0 || oe.q_cost >= ge.q_cost) {
        res.action = greedy;
        return res;
    }
    if (oe.q_cost >= c_hat_t) {
        // Both root actions overrun the budget; take the cheaper one.
        res.action = other;
        return res;
    }
    // Mix so the expected root cost lands exactly on the budget.
    const double nu = (c_hat_t - oe.q_cost) / (ge.q_cost - oe.q_cost);
    res.action = rand01(rng) < nu ? greedy : other;
    return res;
}

}  // namespace navsim
