#include "navsim/pomcp.hpp"

namespace navsim {

RootStats pomcp_search(const ParticleBelief& belief, const GridMap& map,
                       const SearchParams& params, const ModelConfig& cfg,
                       Rng& rng) {
    return mcts_search(belief, map, params, cfg, 0.0, nullptr, nullptr, rng);
}

Action plan_pomcp(const ParticleBelief& belief, const GridMap& map,
                  const SearchParams& params, const ModelConfig& cfg,
                  Rng& rng) {
    if (active_count(belief) == 0) return Action::Move;
    return greedy_action(pomcp_search(belief, map, params, cfg, rng), 0.0);
}

}  // namespace navsim
